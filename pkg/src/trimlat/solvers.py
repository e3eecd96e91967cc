"""Domatic Number and Chromatic Number through the trimmed counting engine."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .bitlattice import SetFamily, full_mask
from .counting import cover_numbers, partition_numbers
from .graphs import (
    Graph,
    closed_neighbourhoods,
    enumerate_maximal_bipartite,
    enumerate_maximal_independent,
    enumerate_minimal_dominating,
    is_dominating,
    is_independent,
)

MEET_IN_MIDDLE_MAX_N = 16


@dataclass
class SolverReport:
    answer: bool | int
    witness_mask: int | None = None
    visited_count: int = 0
    family_size: int = 0

    def __bool__(self) -> bool:
        return bool(self.answer)


def _require_vertices(g: Graph) -> None:
    if g.n == 0:
        raise ValueError("graph has no vertices")


def complement_dominates(g: Graph):
    full = g.vertices
    return lambda x: is_dominating(g, full & ~x)


def domatic_packing_decision(g: Graph, k: int, method: Literal["filtered", "unfiltered"] | None = None,
                             min_dominating: SetFamily | None = None) -> SolverReport:
    """Can V be split into k disjoint dominating sets?

    The filtered method counts (k-1)-partitions of masks X whose complement
    still dominates, so a nonzero d(X) already gives the k-th class.  It is
    the default for k >= 2.  The unfiltered method looks for a disjoint
    k-tuple of minimal dominating sets anywhere in the closure.
    """
    _require_vertices(g)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if method is None:
        method = "unfiltered" if k == 1 else "filtered"
    if method == "filtered" and k == 1:
        raise ValueError("the filtered method needs k >= 2")
    fam = min_dominating if min_dominating is not None else enumerate_minimal_dominating(g)

    if method == "unfiltered":
        run = partition_numbers(fam, k)
        family_size = len(fam)
    elif method == "filtered":
        accept = complement_dominates(g)
        fam = SetFamily(fam.universe_size, tuple(s for s in fam if accept(s)))
        run = partition_numbers(fam, k - 1, frontier_filter=accept)
        family_size = len(fam)
    else:
        raise ValueError(f"unknown method {method!r}")

    witness = next((x for x in run.visited if run.table[x] != 0), None)
    return SolverReport(witness is not None, witness, run.visited_count, family_size)


def domatic_number(g: Graph, method: Literal["filtered", "unfiltered"] | None = None) -> int:
    return domatic_number_report(g, method).answer


def domatic_number_report(g: Graph, method=None) -> SolverReport:
    _require_vertices(g)
    fam = enumerate_minimal_dominating(g)
    best = SolverReport(1, g.vertices, 0, len(fam))
    for k in range(1, g.min_degree + 2):
        m = method if k > 1 else "unfiltered"
        rep = domatic_packing_decision(g, k, m, fam)
        if not rep:
            break
        best = SolverReport(k, rep.witness_mask, rep.visited_count, rep.family_size)
    return best


def chromatic_decision_mis(g: Graph, k: int, max_independent: SetFamily | None = None) -> SolverReport:
    """Is V covered by k maximal independent sets?"""
    _require_vertices(g)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    fam = max_independent if max_independent is not None else enumerate_maximal_independent(g)
    run = cover_numbers(fam, k)
    v = g.vertices
    ok = run.table[v] != 0
    return SolverReport(ok, v if ok else None, run.visited_count, len(fam))


def chromatic_decision_bipartite(g: Graph, k: int, max_bipartite: SetFamily | None = None) -> SolverReport:
    """k-colourability via covers by maximal induced-bipartite sets.

    Even k pairs colour classes into k/2 bipartite sets.  Odd k does the same
    with (k-1)/2 sets and asks that the remainder be independent.
    """
    _require_vertices(g)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    v = g.vertices
    if k == 1:
        ok = is_independent(g, v)
        return SolverReport(ok, v if ok else None, 0, 0)
    fam = max_bipartite if max_bipartite is not None else enumerate_maximal_bipartite(g)
    run = cover_numbers(fam, k // 2)
    if k % 2 == 0:
        ok = run.table[v] != 0
        return SolverReport(ok, v if ok else None, run.visited_count, len(fam))
    for x in run.visited:
        if run.table[x] != 0 and is_independent(g, v & ~x):
            return SolverReport(True, x, run.visited_count, len(fam))
    return SolverReport(False, None, run.visited_count, len(fam))


def chromatic_number(g: Graph, method: Literal["mis", "bipartite"] = "mis") -> int:
    return chromatic_number_report(g, method).answer


def chromatic_number_report(g: Graph, method: Literal["mis", "bipartite"] = "mis") -> SolverReport:
    _require_vertices(g)
    if method == "mis":
        fam = enumerate_maximal_independent(g)
        decide = chromatic_decision_mis
    elif method == "bipartite":
        fam = enumerate_maximal_bipartite(g)
        decide = chromatic_decision_bipartite
    else:
        raise ValueError(f"unknown method {method!r}")
    # greedy colouring never needs more than max degree + 1 colours
    for k in range(1, g.max_degree + 2):
        rep = decide(g, k, fam)
        if rep:
            return SolverReport(k, rep.witness_mask, rep.visited_count, len(fam))
    raise AssertionError("no colouring found within max degree + 1 colours")


def domatic_meet_in_middle(g: Graph, d: int, force: bool = False) -> SolverReport:
    """Decide domatic number >= d (d even) by pairing two halves of d/2 classes each.

    Counts (d/2)-partitions into dominating sets, restricted to masks X that
    leave at least d/2 vertices of every closed neighbourhood uncovered.  The
    answer is yes iff some X and its complement both have nonzero counts.
    """
    _require_vertices(g)
    if d < 2 or d % 2:
        raise ValueError(f"d must be even and at least 2, got {d}")
    if g.n > MEET_IN_MIDDLE_MAX_N and not force:
        raise ValueError(f"meet-in-the-middle refused: n={g.n} > {MEET_IN_MIDDLE_MAX_N}")
    n = g.n
    full = full_mask(n)
    half = d // 2
    nbhds = closed_neighbourhoods(g).sets

    def accept(x: int) -> bool:
        return all((a & ~x).bit_count() >= half for a in nbhds)

    # all dominating sets; those failing the filter could never be visited anyway
    dom = [x for x in range(1 << n) if accept(x) and is_dominating(g, x)]
    fam = SetFamily(n, tuple(dom))
    run = partition_numbers(fam, half, frontier_filter=accept)
    pairs: dict[int, int] = {}
    for x in run.visited:
        if run.table[x] > 0:
            key = min(x, full & ~x)
            pairs[key] = pairs.get(key, 0) + 1
            if pairs[key] == 2:
                return SolverReport(True, x, run.visited_count, len(fam))
    return SolverReport(False, None, run.visited_count, len(fam))
