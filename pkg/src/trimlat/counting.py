"""Cover, partition and packing numbers of k-tuples drawn from a set family.

All three are computed pointwise over the upper closure of the family.  At
each mask X the zeta transform of the family indicator is finished first.
The result is then raised to the k-th power (covers) or convolved across
ranks (partitions), and Moebius-transformed back.  All of this happens before
any superset of X is touched.

A frontier filter may veto masks before they are inserted.  The filter must
be downward closed on the masks of interest: if it accepts X it must accept
every subset of X that lies in the closure.  Otherwise values at accepted
masks would read missing (zero) data from below.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Literal

from .bitlattice import RankFrontier, SetFamily, SparseTable
from .transforms import _Levels, _push_supersets, ranked_step, trimmed_zeta, zeta_step

FrontierFilter = Callable[[int], bool]
Kind = Literal["cover", "partition", "packing"]


@dataclass
class TupleCounts:
    """Counts of ordered k-tuples per mask, plus the masks the run visited.

    For cover and partition runs ``table`` has an entry (possibly zero) for
    every visited mask.  Packing tables hold nonzero entries only.
    """

    k: int
    kind: Kind
    table: SparseTable
    visited: list[int] = field(default_factory=list)

    def __getitem__(self, mask: int) -> int:
        return self.table[mask]

    @property
    def visited_count(self) -> int:
        return len(self.visited)

    def nonzero(self) -> dict[int, int]:
        return self.table.nonzero()


def _seed_frontier(family: SetFamily, frontier_filter, rng) -> RankFrontier:
    frontier = RankFrontier(family.universe_size, rng)
    for s in family:
        if frontier_filter is None or frontier_filter(s):
            frontier.push(s)
    return frontier


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError(f"tuple length must be nonnegative, got {k}")


def _empty_tuple_counts(family, kind, frontier_filter, rng) -> TupleCounts:
    # k = 0: only the empty tuple exists, and its union is the empty set.
    n = family.universe_size
    frontier = _seed_frontier(family, frontier_filter, rng)
    visited = []
    table = SparseTable(n)
    while (x := frontier.pop()) is not None:
        visited.append(x)
        table.entries[x] = int(x == 0)
        _push_supersets(frontier, x, n, frontier_filter)
    table.entries[0] = 1
    return TupleCounts(0, kind, table, visited)


def cover_numbers(family: SetFamily, k: int, frontier_filter: FrontierFilter | None = None,
                  rng: random.Random | None = None) -> TupleCounts:
    """c(X) for every visited X: ordered k-tuples of members inside X whose union is X."""
    _check_k(k)
    if k == 0:
        return _empty_tuple_counts(family, "cover", frontier_filter, rng)
    n = family.universe_size
    members = family.as_set()
    frontier = _seed_frontier(family, frontier_filter, rng)
    g_levels, h_levels = _Levels(), _Levels()
    table = SparseTable(n)
    visited = []
    while (x := frontier.pop()) is not None:
        r = x.bit_count()
        g_levels.advance(r)
        h_levels.advance(r)
        g = zeta_step(x, n, int(x in members), g_levels.prev)
        g_levels.cur[x] = g
        h = zeta_step(x, n, g[n] ** k, h_levels.prev, sign=-1)
        h_levels.cur[x] = h
        table.entries[x] = h[n]
        visited.append(x)
        _push_supersets(frontier, x, n, frontier_filter)
    return TupleCounts(k, "cover", table, visited)


def _tuple_rank_sums(ranked: list[int], k: int) -> list[int]:
    # q(i, s) = sum_t q(i-1, s-t) * ranked[t]; returns q(k, .)
    q = list(ranked)
    size = len(ranked)
    nz = [t for t in range(size) if ranked[t]]
    for _ in range(k - 1):
        nxt = [0] * size
        for s in range(size):
            if not q[s]:
                continue
            qs = q[s]
            for t in nz:
                if s + t >= size:
                    break
                nxt[s + t] += qs * ranked[t]
        q = nxt
    return q


def partition_numbers(family: SetFamily, k: int, frontier_filter: FrontierFilter | None = None,
                      rng: random.Random | None = None) -> TupleCounts:
    """d(X) for every visited X: ordered k-tuples of pairwise disjoint members with union X."""
    _check_k(k)
    if k == 0:
        return _empty_tuple_counts(family, "partition", frontier_filter, rng)
    n = family.universe_size
    members = family.as_set()
    frontier = _seed_frontier(family, frontier_filter, rng)
    g_levels, h_levels = _Levels(), _Levels()
    table = SparseTable(n)
    visited = []
    while (x := frontier.pop()) is not None:
        r = x.bit_count()
        g_levels.advance(r)
        h_levels.advance(r)
        base = [0] * (n + 1)
        if x in members:
            base[r] = 1
        g = ranked_step(x, n, base, g_levels.prev)
        g_levels.cur[x] = g
        q = _tuple_rank_sums(g[n], k)
        h = ranked_step(x, n, q, h_levels.prev, sign=-1)
        h_levels.cur[x] = h
        table.entries[x] = h[n][r]
        visited.append(x)
        _push_supersets(frontier, x, n, frontier_filter)
    return TupleCounts(k, "partition", table, visited)


def packing_numbers(family: SetFamily, k: int, frontier_filter: FrontierFilter | None = None,
                    rng: random.Random | None = None) -> TupleCounts:
    """p(X): ordered k-tuples of pairwise disjoint members whose union lies inside X.

    Obtained as the zeta transform of the partition numbers.  ``visited``
    records the masks of the partition run.
    """
    d = partition_numbers(family, k, frontier_filter, rng)
    p = trimmed_zeta(SparseTable(family.universe_size, d.table.nonzero()), rng=rng)
    return TupleCounts(k, "packing", p, d.visited)


def tuple_counts(family: SetFamily, k: int, kind: Kind,
                 frontier_filter: FrontierFilter | None = None) -> TupleCounts:
    fn = {"cover": cover_numbers, "partition": partition_numbers, "packing": packing_numbers}.get(kind)
    if fn is None:
        raise ValueError(f"unknown count kind {kind!r}")
    return fn(family, k, frontier_filter)
