"""Brute-force reference implementations.

Nothing here imports the engine.  Each function works straight from the
definitions with plain loops, so that cross-checks against the engine mean
something.  Graphs are read through ``g.n`` and ``g.edges()`` only.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping

TUPLE_BUDGET = 10 ** 7


def _dense(f, n: int) -> list:
    if isinstance(f, Mapping):
        out = [0] * (1 << n)
        for x, v in f.items():
            out[x] = v
        return out
    if hasattr(f, "entries"):
        return _dense(f.entries, n)
    out = list(f)
    if len(out) != 1 << n:
        raise ValueError("dense input has the wrong length")
    return out


def _check_n(n: int, cap: int = 12) -> None:
    if n > cap:
        raise ValueError(f"oracle refused for n={n} > {cap}")


def _subsets(x: int):
    y = x
    while True:
        yield y
        if y == 0:
            return
        y = (y - 1) & x


def brute_zeta(f, n: int) -> list:
    """Sum of f(Y) over every subset Y of X, for each X."""
    _check_n(n)
    f = _dense(f, n)
    return [sum(f[y] for y in _subsets(x)) for x in range(1 << n)]


def brute_moebius(f, n: int) -> list:
    _check_n(n)
    f = _dense(f, n)
    out = []
    for x in range(1 << n):
        total = 0
        for y in _subsets(x):
            sign = -1 if bin(x ^ y).count("1") % 2 else 1
            total += sign * f[y]
        out.append(total)
    return out


def brute_upper_closure(members: Iterable[int], n: int) -> set[int]:
    members = list(members)
    return {t for t in range(1 << n) if any(s & t == s for s in members)}


def brute_tuple_counts(family: Iterable[int], n: int, k: int, kind: str) -> list[int]:
    """Count ordered k-tuples per mask X by listing all |F|**k tuples.

    kind: 'cover'      union == X
          'partition'  union == X and pairwise disjoint
          'packing'    union inside X and pairwise disjoint
    """
    members = list(dict.fromkeys(family))
    if len(members) ** k > TUPLE_BUDGET:
        raise ValueError(f"{len(members)}**{k} tuples exceed the oracle budget")
    if kind not in ("cover", "partition", "packing"):
        raise ValueError(f"unknown kind {kind!r}")
    out = [0] * (1 << n)
    for tup in product(members, repeat=k):
        union = 0
        disjoint = True
        for s in tup:
            if union & s:
                disjoint = False
            union |= s
        if kind == "cover":
            out[union] += 1
        elif disjoint:
            if kind == "partition":
                out[union] += 1
            else:
                for x in range(1 << n):
                    if union & x == union:
                        out[x] += 1
    return out


def _neighbours(g) -> list[set[int]]:
    nb = [set() for _ in range(g.n)]
    for u, v in g.edges():
        nb[u].add(v)
        nb[v].add(u)
    return nb


def _set_partitions(n: int):
    """Restricted-growth strings: block index of every vertex."""
    labels = [0] * n

    def rec(i: int, used: int):
        if i == n:
            yield labels, used
            return
        for b in range(used + 1):
            labels[i] = b
            yield from rec(i + 1, max(used, b + 1))

    if n == 0:
        yield [], 0
    else:
        labels[0] = 0
        yield from rec(1, 1)


def brute_chromatic(g, max_n: int = 9) -> int:
    if g.n > max_n:
        raise ValueError(f"chromatic oracle refused for n={g.n} > {max_n}")
    nb = _neighbours(g)
    best = g.n
    for labels, blocks in _set_partitions(g.n):
        if blocks >= best:
            continue
        if all(labels[u] != labels[v] for u in range(g.n) for v in nb[u]):
            best = blocks
    return best


def brute_domatic(g, max_n: int = 8) -> int:
    if g.n > max_n:
        raise ValueError(f"domatic oracle refused for n={g.n} > {max_n}")
    nb = _neighbours(g)
    best = 0
    for labels, blocks in _set_partitions(g.n):
        if blocks <= best:
            continue
        ok = True
        for b in range(blocks):
            for v in range(g.n):
                if labels[v] != b and not any(labels[u] == b for u in nb[v]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            best = blocks
    return best


def _dominates(nb, vs: set[int], n: int) -> bool:
    return all(v in vs or nb[v] & vs for v in range(n))


def _members(x: int, n: int) -> set[int]:
    return {i for i in range(n) if x >> i & 1}


def brute_dominating_sets(g) -> list[int]:
    nb = _neighbours(g)
    return [x for x in range(1 << g.n) if _dominates(nb, _members(x, g.n), g.n)]


def brute_minimal_dominating(g) -> list[int]:
    dom = set(brute_dominating_sets(g))
    return sorted(x for x in dom if not any(y != x and y & x == y for y in dom))


def brute_maximal_independent(g) -> list[int]:
    nb = _neighbours(g)
    indep = []
    for x in range(1 << g.n):
        vs = _members(x, g.n)
        if all(not (nb[v] & vs) for v in vs):
            indep.append(x)
    ind = set(indep)
    return sorted(x for x in ind if not any(x | 1 << v in ind for v in range(g.n) if not x >> v & 1))


def brute_maximal_bipartite(g) -> list[int]:
    n = g.n
    edges = g.edges()
    bip = set()
    for x in range(1 << n):
        vs = sorted(_members(x, n))
        inner = [(u, v) for u, v in edges if u in vs and v in vs]
        for colours in product((0, 1), repeat=len(vs)):
            side = dict(zip(vs, colours))
            if all(side[u] != side[v] for u, v in inner):
                bip.add(x)
                break
    return sorted(x for x in bip if not any(x | 1 << v in bip for v in range(n) if not x >> v & 1))
