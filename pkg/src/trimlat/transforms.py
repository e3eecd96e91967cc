"""Yates's algorithm and trimmed pointwise zeta/Moebius transforms.

The trimmed transforms evaluate a function only on the upper closure of its
support.  Masks are processed in nondecreasing rank, and each mask only looks
*down* at ``X - {j}``.  So once the previous rank is finished, the value at
``X`` is final, and only the vectors of ranks ``r-1`` and ``r`` are kept.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from .bitlattice import RankFrontier, SparseTable, full_mask

MAX_DENSE_N = 24


@dataclass(frozen=True)
class KernelSpec:
    """2x2 kernel v(x, y) for Yates's algorithm, indexed by bits x of X and y of Y."""

    v00: float
    v01: float
    v10: float
    v11: float

    def __post_init__(self):
        for v in (self.v00, self.v01, self.v10, self.v11):
            if not math.isfinite(v):
                raise ValueError(f"kernel entry {v!r} is not finite")

    def __call__(self, x: int, y: int):
        return ((self.v00, self.v01), (self.v10, self.v11))[x][y]


# Integer entries keep the dense transform exact for integer inputs.
IDENTITY_KERNEL = KernelSpec(1, 0, 0, 1)
ZETA_KERNEL = KernelSpec(1, 0, 1, 1)        # [y <= x]
MOEBIUS_KERNEL = KernelSpec(1, 0, -1, 1)    # [y <= x] (-1)^(x-y)


def yates_transform(f: Sequence, kernel: KernelSpec, n: int | None = None) -> list:
    """Dense transform of ``f`` (length ``2**n``) in ``n * 2**(n-1)`` butterfly steps."""
    size = len(f)
    if n is None:
        n = size.bit_length() - 1
    if size != 1 << n:
        raise ValueError(f"dense table has {size} entries, expected 2**{n}")
    if n > MAX_DENSE_N:
        raise ValueError(f"dense transform refused for n={n} > {MAX_DENSE_N}")
    a, b, c, d = kernel.v00, kernel.v01, kernel.v10, kernel.v11
    g = list(f)
    for j in range(n):
        bit = 1 << j
        for x in range(size):
            if x & bit:
                continue
            lo, hi = g[x], g[x | bit]
            g[x] = a * lo + b * hi
            g[x | bit] = c * lo + d * hi
    return g


def zeta_step(x: int, n: int, base: int, lower: dict, sign: int = 1) -> list[int]:
    """Intermediate values g_0(x), ..., g_n(x) at one mask.

    ``lower`` maps masks of rank |x|-1 to their own vectors; absent masks lie
    outside the closure of the support and contribute zero.  ``sign=-1``
    gives the Moebius recursion.
    """
    vec = [base]
    v = base
    for j in range(n):
        bit = 1 << j
        if x & bit:
            below = lower.get(x ^ bit)
            if below is not None:
                v = v + below[j] if sign > 0 else v - below[j]
        vec.append(v)
    return vec


def ranked_step(x: int, n: int, base: list[int], lower: dict, sign: int = 1) -> list[list[int]]:
    """Rank-separated version of :func:`zeta_step`; each value is a vector over s = 0..n."""
    vec = [base]
    v = base
    for j in range(n):
        bit = 1 << j
        if x & bit:
            below = lower.get(x ^ bit)
            if below is not None:
                w = below[j]
                if sign > 0:
                    v = [p + q for p, q in zip(v, w)]
                else:
                    v = [p - q for p, q in zip(v, w)]
        vec.append(v)
    return vec


class _Levels:
    """Keeps step vectors for the previous and the current rank only."""

    def __init__(self):
        self.rank = -1
        self.prev: dict = {}
        self.cur: dict = {}

    def advance(self, r: int) -> None:
        if r == self.rank:
            return
        self.prev = self.cur if r == self.rank + 1 else {}
        self.cur = {}
        self.rank = r


def _push_supersets(frontier: RankFrontier, x: int, n: int, accept=None) -> None:
    absent = full_mask(n) & ~x
    while absent:
        bit = absent & -absent
        absent ^= bit
        y = x | bit
        if accept is None or accept(y):
            frontier.push(y)


def _trimmed(f: SparseTable, sign: int, visited: list | None, rng: random.Random | None) -> SparseTable:
    n = f.universe_size
    frontier = RankFrontier(n, rng)
    for x, v in f.items():
        if v != 0:
            frontier.push(x)
    levels = _Levels()
    out = SparseTable(n)
    while (x := frontier.pop()) is not None:
        levels.advance(x.bit_count())
        vec = zeta_step(x, n, f[x], levels.prev, sign)
        levels.cur[x] = vec
        if visited is not None:
            visited.append(x)
        if vec[n] != 0:
            out.entries[x] = vec[n]
        _push_supersets(frontier, x, n)
    return out


def trimmed_zeta(f: SparseTable, visited: list | None = None,
                 rng: random.Random | None = None) -> SparseTable:
    """Nonzero part of the zeta transform of ``f``, evaluated over the closure of supp(f).

    If ``visited`` is given, every processed mask is appended to it, zeros included.
    """
    return _trimmed(f, 1, visited, rng)


def trimmed_moebius(f: SparseTable, visited: list | None = None,
                    rng: random.Random | None = None) -> SparseTable:
    """Nonzero part of the Moebius transform of ``f``; see :func:`trimmed_zeta`."""
    return _trimmed(f, -1, visited, rng)


def trimmed_ranked_zeta(f: SparseTable, visited: list | None = None,
                        rng: random.Random | None = None) -> dict[int, list[int]]:
    """For each X in the closure of supp(f), the vector of rank-s partial zeta sums, s = 0..n.

    Entry ``s`` at ``X`` is the sum of f(Y) over subsets Y of X with |Y| = s.
    Every visited mask appears in the result, including all-zero vectors.
    """
    n = f.universe_size
    frontier = RankFrontier(n, rng)
    for x, v in f.items():
        if v != 0:
            frontier.push(x)
    levels = _Levels()
    out: dict[int, list[int]] = {}
    while (x := frontier.pop()) is not None:
        r = x.bit_count()
        levels.advance(r)
        base = [0] * (n + 1)
        base[r] = f[x]
        vec = ranked_step(x, n, base, levels.prev)
        levels.cur[x] = vec
        if visited is not None:
            visited.append(x)
        out[x] = vec[n]
        _push_supersets(frontier, x, n)
    return out
