"""Per-vertex base constants for the running-time bounds, and empirical checks of them.

Every check of the form ``count <= base ** (n / (delta + 1))`` is decided
exactly as ``count ** (delta + 1) <= base ** n`` on integers.  The float
value of the bound is reported for display only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

from .bitlattice import SetFamily, upper_closure
from .graphs import Graph, count_dominating_sets, enumerate_maximal_bipartite
from .solvers import domatic_packing_decision

Variant = Literal["dom", "dom_trimmed", "chrom"]
VARIANTS: tuple[Variant, ...] = ("dom", "dom_trimmed", "chrom")


def base_integer(delta: int, variant: Variant) -> int:
    """The integer whose (delta+1)-th root is the per-vertex base."""
    if delta < 0:
        raise ValueError(f"max degree must be nonnegative, got {delta}")
    top = 2 ** (delta + 1)
    if variant == "dom":
        return top - 1
    if variant == "dom_trimmed":
        return top - 2
    if variant == "chrom":
        return top - delta - 1
    raise ValueError(f"unknown bound variant {variant!r}")


def bound_base(delta: int, variant: Variant) -> float:
    return base_integer(delta, variant) ** (1.0 / (delta + 1))


def round_up(x: float, digits: int = 4) -> float:
    """Round upward at ``digits`` decimals, so a printed bound never understates."""
    scale = 10 ** digits
    return math.ceil(x * scale) / scale


def bound_value(n: int, delta: int, variant: Variant) -> float:
    return float(base_integer(delta, variant)) ** (n / (delta + 1))


@dataclass
class BoundReport:
    measured: int
    bound: float
    holds: bool
    tight: bool
    label: str = ""


def compare_to_bound(measured: int, n: int, delta: int, variant: Variant, label: str = "") -> BoundReport:
    lhs = measured ** (delta + 1)
    rhs = base_integer(delta, variant) ** n
    return BoundReport(measured, bound_value(n, delta, variant), lhs <= rhs, lhs == rhs, label)


@dataclass(frozen=True)
class CoverSystem:
    """Subsets P_1..P_m of a universe {0..n-1}, each element covered at least ``delta`` times."""

    universe_size: int
    parts: tuple[int, ...]
    delta: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        for u in range(self.universe_size):
            c = sum(1 for p in self.parts if p >> u & 1)
            if c < self.delta:
                raise ValueError(f"element {u} lies in {c} parts, fewer than delta={self.delta}")


@dataclass
class ShearerReport:
    lhs: int
    rhs: int
    holds: bool


def shearer_check(system: CoverSystem, family: SetFamily | Sequence[int]) -> ShearerReport:
    """|F| ** delta against the product of the projection sizes |{F & P : F in family}|."""
    members = set(family)
    lhs = len(members) ** system.delta
    rhs = 1
    for p in system.parts:
        rhs *= len({f & p for f in members})
    return ShearerReport(lhs, rhs, lhs <= rhs)


def verify_dominating_bound(g: Graph) -> BoundReport:
    if g.n > 16:
        raise ValueError(f"dominating-set count refused for n={g.n} > 16")
    return compare_to_bound(count_dominating_sets(g), g.n, g.max_degree, "dom", "dominating sets")


def verify_upset_bounds(g: Graph) -> tuple[BoundReport, BoundReport]:
    """Closure of the maximal bipartite sets, and masks visited by the filtered domatic run."""
    if g.n > 14:
        raise ValueError(f"upset bound check refused for n={g.n} > 14")
    delta = g.max_degree
    up = upper_closure(enumerate_maximal_bipartite(g))
    bip = compare_to_bound(len(up), g.n, delta, "chrom", "closure of maximal bipartite sets")
    visited = domatic_packing_decision(g, 2, "filtered").visited_count
    dom = compare_to_bound(visited, g.n, delta, "dom_trimmed", "filtered domatic visited")
    return bip, dom


def jensen_gap(sizes: Sequence[int], delta: int) -> tuple[int, int]:
    """(prod (2**a - 1), (2**(delta+1) - 1) ** n) for padded neighbourhood sizes."""
    lhs = 1
    for a in sizes:
        lhs *= 2 ** a - 1
    return lhs, (2 ** (delta + 1) - 1) ** len(sizes)


def format_table(deltas: Sequence[int], digits: int = 4) -> list[str]:
    rows = []
    for d in deltas:
        vals = " ".join(f"{v}={round_up(bound_base(d, v), digits):.{digits}f}" for v in VARIANTS)
        rows.append(f"delta={d} {vals}")
    return rows

