"""Undirected simple graphs on vertices 0..n-1 with bitmask adjacency.

Besides the basic predicates this module lists the three vertex-set families
fed to the solvers.  These are minimal dominating sets, maximal independent
sets and maximal induced-bipartite sets.  All enumerators are depth-first
searches sized for desk-scale graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .bitlattice import SetFamily, check_universe, elements_of, full_mask


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        check_universe(self.n)
        adj = tuple(self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        if len(adj) != self.n:
            raise ValueError(f"adjacency has {len(adj)} rows for {self.n} vertices")
        for v, nb in enumerate(adj):
            if nb >> self.n:
                raise ValueError(f"vertex {v} has a neighbour outside the graph")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in elements_of(nb):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build from 0-based edge pairs; repeated edges collapse."""
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> int:
        return full_mask(self.n)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adjacency), default=0)

    @property
    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adjacency), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in elements_of(self.adjacency[u]) if u < v]

    def closed(self, v: int) -> int:
        return self.adjacency[v] | (1 << v)


@dataclass(frozen=True)
class NeighbourhoodCover:
    sets: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(s.bit_count() for s in self.sets)

    def multiplicity(self, u: int) -> int:
        return sum(1 for s in self.sets if s >> u & 1)


def closed_neighbourhoods(g: Graph) -> NeighbourhoodCover:
    return NeighbourhoodCover(tuple(g.closed(v) for v in range(g.n)))


def pad_neighbourhoods(cover: NeighbourhoodCover, g: Graph) -> NeighbourhoodCover:
    """Add each vertex u to max_degree - deg(u) further sets, lowest index first.

    Afterwards every vertex lies in exactly max_degree + 1 of the sets.
    """
    delta = g.max_degree
    if g.n < delta + 1:
        raise ValueError(f"cannot pad: n={g.n} < max degree + 1 = {delta + 1}")
    sets = list(cover.sets)
    for u in range(g.n):
        need = delta - g.degree(u)
        for v in range(g.n):
            if need == 0:
                break
            if not sets[v] >> u & 1:
                sets[v] |= 1 << u
                need -= 1
        if need:
            raise ValueError(f"cannot pad vertex {u}: not enough sets avoid it")
    return NeighbourhoodCover(tuple(sets))


def is_dominating(g: Graph, x: int) -> bool:
    covered = x
    for v in elements_of(x):
        covered |= g.adjacency[v]
    return covered == g.vertices


def is_independent(g: Graph, x: int) -> bool:
    return all(not (g.adjacency[v] & x) for v in elements_of(x))


def induces_bipartite(g: Graph, x: int) -> bool:
    """Two-colour G[x] by breadth-first search."""
    adj = g.adjacency
    side = {}
    for start in elements_of(x):
        if start in side:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in elements_of(adj[v] & x):
                if u not in side:
                    side[u] = side[v] ^ 1
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def enumerate_minimal_dominating(g: Graph) -> SetFamily:
    n = g.n
    full = g.vertices
    closed = [g.closed(v) for v in range(n)]
    out = []

    def has_private(w: int, chosen: int) -> bool:
        # some x in N[w] dominated by w alone
        for x in elements_of(closed[w]):
            if closed[x] & chosen == 1 << w:
                return True
        return False

    def dfs(v: int, chosen: int, dominated: int) -> None:
        undecided = full & ~((1 << v) - 1)
        rest = full & ~dominated
        for u in elements_of(rest):
            if not closed[u] & undecided:
                return
        for w in elements_of(chosen):
            if not has_private(w, chosen):
                return
        if v == n:
            out.append(chosen)
            return
        dfs(v + 1, chosen | 1 << v, dominated | closed[v])
        dfs(v + 1, chosen, dominated)

    dfs(0, 0, 0)
    for d in out:
        assert is_dominating(g, d)
        assert not any(is_dominating(g, d & ~(1 << w)) for w in elements_of(d))
    return SetFamily(n, tuple(sorted(out)))


def enumerate_maximal_independent(g: Graph) -> SetFamily:
    """Bron-Kerbosch with pivoting on the complement graph."""
    n = g.n
    full = g.vertices
    non_nb = [full & ~g.closed(v) for v in range(n)]
    out = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(elements_of(p | x), key=lambda u: (non_nb[u] & p).bit_count())
        for v in elements_of(p & ~non_nb[pivot]):
            bit = 1 << v
            bk(r | bit, p & non_nb[v], x & non_nb[v])
            p &= ~bit
            x |= bit

    if n:
        bk(0, full, 0)
    else:
        out.append(0)
    for s in out:
        assert is_independent(g, s)
        assert all(not is_independent(g, s | 1 << v) for v in elements_of(full & ~s))
    return SetFamily(n, tuple(sorted(out)))


def _component_bipartite(g: Graph, within: int, start: int) -> bool:
    """Two-colour the component of ``start`` in G[within]."""
    adj = g.adjacency
    side = {start: 0}
    queue = [start]
    while queue:
        v = queue.pop()
        for u in elements_of(adj[v] & within):
            if u not in side:
                side[u] = side[v] ^ 1
                queue.append(u)
            elif side[u] == side[v]:
                return False
    return True


def enumerate_maximal_bipartite(g: Graph) -> SetFamily:
    """Vertex sets inducing a bipartite subgraph, maximal under inclusion.

    Every excluded vertex must end up blocked, i.e. adding it back creates an
    odd cycle.  Blocking persists under supersets, and a vertex whose
    component in G[chosen + undecided + v] is bipartite can never be blocked.
    Both facts prune the search.
    """
    n = g.n
    full = g.vertices
    out = []

    def dfs(v: int, chosen: int, pending: tuple[int, ...]) -> None:
        reachable = chosen | (full & ~((1 << v) - 1))
        still = []
        for u in pending:
            if _component_bipartite(g, chosen | 1 << u, u):
                if _component_bipartite(g, reachable | 1 << u, u):
                    return
                still.append(u)
        pending = tuple(still)
        if v == n:
            if not pending:
                out.append(chosen)
            return
        with_v = chosen | 1 << v
        # chosen is bipartite, so only the component of v can break
        if _component_bipartite(g, with_v, v):
            dfs(v + 1, with_v, pending)
        # a vertex of degree <= 1 can always be added back
        if g.degree(v) >= 2:
            dfs(v + 1, chosen, pending + (v,))

    dfs(0, 0, ())
    for b in out:
        assert induces_bipartite(g, b)
        assert not any(induces_bipartite(g, b | 1 << u) for u in elements_of(full & ~b))
    return SetFamily(n, tuple(sorted(out)))


def count_dominating_sets(g: Graph) -> int:
    """Number of dominating sets, by a scan over all 2**n vertex subsets."""
    n = g.n
    full = g.vertices
    closed = [g.closed(v) for v in range(n)]
    covered = [0] * (1 << n)
    count = 1 if n == 0 else 0
    for x in range(1, 1 << n):
        low = x & -x
        c = covered[x ^ low] | closed[low.bit_length() - 1]
        covered[x] = c
        if c == full:
            count += 1
    return count


# -- generators ---------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = full_mask(n)
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Centre 0 joined to leaves 1..n-1."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    adj = []
    offset = 0
    for h in graphs:
        adj.extend(a << offset for a in h.adjacency)
        offset += h.n
    return Graph(offset, tuple(adj))


def random_graph(n: int, p: float, rng: random.Random, max_degree: int | None = None) -> Graph:
    """G(n, p) over shuffled vertex pairs, skipping edges that would exceed ``max_degree``."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if rng.random() >= p:
            continue
        if max_degree is not None and (deg[u] >= max_degree or deg[v] >= max_degree):
            continue
        deg[u] += 1
        deg[v] += 1
        edges.append((u, v))
    return Graph.from_edges(n, edges)
