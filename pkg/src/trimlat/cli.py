"""Command-line entry point.

Subcommands: chromatic, domatic, count, transform, bounds, bench.  Output is
one ``key=value`` record per line (masks as sorted 1-based vertex lists), or
JSON with ``--json``.  Size guards can be lifted with ``--force`` or raised
through the TRIMLAT_MAX_N environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import IO, Iterable

from . import bounds, oracle
from .bitlattice import MAX_UNIVERSE, SetFamily, SparseTable, check_universe, elements_of, mask_of
from .counting import tuple_counts
from .graphs import (
    Graph,
    complete_graph,
    disjoint_union,
    enumerate_maximal_bipartite,
    enumerate_maximal_independent,
    enumerate_minimal_dominating,
    random_graph,
)
from .solvers import (
    MEET_IN_MIDDLE_MAX_N,
    chromatic_number_report,
    domatic_meet_in_middle,
    domatic_number_report,
    domatic_packing_decision,
)
from .transforms import trimmed_moebius, trimmed_zeta


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class GuardError(Exception):
    pass


# -- input formats ------------------------------------------------------------

def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str | Iterable[str]) -> Graph:
    """Read a DIMACS-style graph ('p edge n m', 'e u v') or a plain 'u v' edge list.

    Vertices are 1-based.  Without a header the vertex count is the largest
    index seen.  Repeated edges collapse; self-loops are rejected.
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    n = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(lines, 1):
        tokens = raw.split()
        if not tokens or tokens[0] in ("c", "%", "#"):
            continue
        head = tokens[0]
        if head == "p":
            if n is not None:
                raise ParseError(lineno, "second header line")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError(lineno, "header must read 'p edge <n> <m>'")
            n, _ = _ints(tokens[2:], lineno)
            if n < 0:
                raise ParseError(lineno, "negative vertex count")
            continue
        if head == "e":
            tokens = tokens[1:]
        if len(tokens) != 2:
            raise ParseError(lineno, f"malformed edge line {raw.strip()!r}")
        u, v = _ints(tokens, lineno)
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        edges.append((lineno, u, v))
    if n is None:
        n = max((max(u, v) for _, u, v in edges), default=0)
    for lineno, u, v in edges:
        for w in (u, v):
            if not 1 <= w <= n:
                raise ParseError(lineno, f"vertex {w} out of range 1..{n}")
    if n > MAX_UNIVERSE:
        raise GuardError(f"graph has n={n} vertices; the lattice cap is {MAX_UNIVERSE}")
    return Graph.from_edges(n, [(u - 1, v - 1) for _, u, v in edges])


def parse_family(text: str) -> SetFamily:
    """One set per line as 1-based elements; 'p family <n>' header; 's' prefix optional ('s' alone = empty set)."""
    n = None
    sets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] in ("c", "%", "#"):
            continue
        if tokens[0] == "p":
            if len(tokens) != 3 or tokens[1] != "family":
                raise ParseError(lineno, "header must read 'p family <n>'")
            (n,) = _ints(tokens[2:], lineno)
            continue
        if tokens[0] == "s":
            tokens = tokens[1:]
        elems = _ints(tokens, lineno)
        if any(e < 1 for e in elems):
            raise ParseError(lineno, "elements are 1-based")
        sets.append((lineno, elems))
    if n is None:
        n = max((max(e) for _, e in sets if e), default=0)
    for lineno, elems in sets:
        if any(e > n for e in elems):
            raise ParseError(lineno, f"element out of range 1..{n}")
    if n > MAX_UNIVERSE:
        raise GuardError(f"universe n={n} exceeds the lattice cap {MAX_UNIVERSE}")
    return SetFamily.from_iterable(n, (mask_of(e - 1 for e in elems) for _, elems in sets))


def parse_function(text: str) -> SparseTable:
    """'p func <n>' header, then 'v <value> <elements...>' lines (1-based)."""
    n = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] in ("c", "%", "#"):
            continue
        if tokens[0] == "p":
            if len(tokens) != 3 or tokens[1] != "func":
                raise ParseError(lineno, "header must read 'p func <n>'")
            (n,) = _ints(tokens[2:], lineno)
        elif tokens[0] == "v" and len(tokens) >= 2:
            value, *elems = _ints(tokens[1:], lineno)
            if any(e < 1 for e in elems):
                raise ParseError(lineno, "elements are 1-based")
            rows.append((lineno, value, elems))
        else:
            raise ParseError(lineno, f"malformed line {raw.strip()!r}")
    if n is None:
        raise ParseError(0, "missing 'p func <n>' header")
    check_universe(n)
    table = SparseTable(n)
    for lineno, value, elems in rows:
        if any(e > n for e in elems):
            raise ParseError(lineno, f"element out of range 1..{n}")
        m = mask_of(e - 1 for e in elems)
        table[m] = table[m] + value
    return table


# -- records ------------------------------------------------------------------

def vertex_list(mask: int | None) -> list[int] | None:
    return None if mask is None else [e + 1 for e in elements_of(mask)]


def _encode(value) -> str:
    if isinstance(value, str):
        try:
            json.loads(value)
        except ValueError:
            if value and not any(c.isspace() for c in value) and "=" not in value:
                return value
    # spaces would split the token; JSON decodes the escape back
    return json.dumps(value, separators=(",", ":")).replace(" ", "\\u0020")


def format_record(record: dict) -> str:
    return " ".join(f"{k}={_encode(v)}" for k, v in record.items())


def parse_record(line: str) -> dict:
    out = {}
    for token in line.split():
        key, _, raw = token.partition("=")
        try:
            out[key] = json.loads(raw)
        except ValueError:
            out[key] = raw
    return out


def _emit(records: list[dict], as_json: bool, out: IO[str]) -> None:
    for r in records:
        print(json.dumps(r) if as_json else format_record(r), file=out)


# -- guards -------------------------------------------------------------------

def _guard(name: str, default: int, n: int, force: bool) -> None:
    env = os.environ.get("TRIMLAT_MAX_N")
    limit = max(default, int(env)) if env else default
    if n > limit and not force:
        raise GuardError(f"refused: n={n} exceeds guard {name}={limit} (use --force or TRIMLAT_MAX_N)")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


# -- commands -----------------------------------------------------------------

def cmd_chromatic(args, out):
    g = parse_graph(_read(args.graph))
    _guard("lattice_max_n", MAX_UNIVERSE, g.n, args.force)
    rep = chromatic_number_report(g, args.method)
    variant = "chrom" if args.method == "bipartite" else "dom"
    rec = {
        "answer": rep.answer, "method": args.method, "n": g.n, "delta": g.max_degree,
        "family_size": rep.family_size, "visited": rep.visited_count,
        "bound": round(bounds.bound_value(g.n, g.max_degree, variant), 3),
    }
    if args.oracle:
        _guard("oracle_chromatic_max_n", 9, g.n, args.force)
        rec["oracle"] = oracle.brute_chromatic(g, max_n=g.n)
    if not args.json:
        print(rep.answer, file=out)
    _emit([rec], args.json, out)


def cmd_domatic(args, out):
    g = parse_graph(_read(args.graph))
    _guard("lattice_max_n", MAX_UNIVERSE, g.n, args.force)
    if args.meet_in_middle is not None:
        _guard("meet_in_middle_max_n", MEET_IN_MIDDLE_MAX_N, g.n, args.force)
        rep = domatic_meet_in_middle(g, args.meet_in_middle, force=True)
        rec = {"answer": rep.answer, "query": f"domatic>={args.meet_in_middle}",
               "witness": vertex_list(rep.witness_mask), "family_size": rep.family_size,
               "visited": rep.visited_count}
        if not args.json:
            print(str(rep.answer).lower(), file=out)
    else:
        if args.k is not None:
            rep = domatic_packing_decision(g, args.k, args.method)
            answer = rep.answer
        else:
            rep = domatic_number_report(g, args.method)
            answer = rep.answer
        rec = {"answer": answer, "n": g.n, "delta": g.max_degree,
               "witness": vertex_list(rep.witness_mask), "family_size": rep.family_size,
               "visited": rep.visited_count,
               "bound": round(bounds.bound_value(g.n, g.max_degree, "dom_trimmed"), 3)}
        if not args.json:
            print(str(answer).lower() if isinstance(answer, bool) else answer, file=out)
    if args.oracle:
        _guard("oracle_domatic_max_n", 8, g.n, args.force)
        rec["oracle"] = oracle.brute_domatic(g, max_n=g.n)
    _emit([rec], args.json, out)


def _family_from_graph(g: Graph, which: str) -> SetFamily:
    if which == "mis":
        return enumerate_maximal_independent(g)
    if which == "bipartite":
        return enumerate_maximal_bipartite(g)
    if which == "mindom":
        return enumerate_minimal_dominating(g)
    raise ValueError(which)


def cmd_count(args, out):
    text = _read(args.input)
    if args.from_graph:
        fam = _family_from_graph(parse_graph(text), args.from_graph)
    else:
        fam = parse_family(text)
    _guard("lattice_max_n", MAX_UNIVERSE, fam.universe_size, args.force)
    res = tuple_counts(fam, args.k, args.kind)
    entries = res.table.entries if args.all else res.table.nonzero()
    records = [{"kind": args.kind, "k": args.k, "mask": vertex_list(m), "value": entries[m]}
               for m in sorted(entries)]
    records.append({"summary": True, "family_size": len(fam), "visited": res.visited_count,
                    "emitted": len(records)})
    _emit(records, args.json, out)


def cmd_transform(args, out):
    f = parse_function(_read(args.input))
    _guard("lattice_max_n", MAX_UNIVERSE, f.universe_size, args.force)
    visited: list[int] = []
    fn = trimmed_moebius if args.moebius else trimmed_zeta
    res = fn(f, visited=visited)
    kind = "moebius" if args.moebius else "zeta"
    records = [{"transform": kind, "mask": vertex_list(m), "value": v} for m, v in sorted(res.items())]
    records.append({"summary": True, "support": len(f.support()), "visited": len(visited),
                    "emitted": len(res)})
    _emit(records, args.json, out)


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def cmd_bounds(args, out):
    records = []
    for d in _parse_range(args.delta):
        rec = {"delta": d}
        for v in bounds.VARIANTS:
            rec[v] = bounds.round_up(bounds.bound_base(d, v), args.digits)
        records.append(rec)
    _emit(records, args.json, out)


def bench_instance(spec: tuple[str, int, int, int]) -> dict:
    kind, n, delta, seed = spec
    if kind == "cliques":
        g = disjoint_union(*[complete_graph(delta + 1)] * (n // (delta + 1)))
    else:
        g = random_graph(n, 0.5, random.Random(seed), max_degree=delta)
    n, d = g.n, g.max_degree
    mis = chromatic_number_report(g, "mis")
    bip = chromatic_number_report(g, "bipartite")
    rec = {"instance": kind, "n": n, "delta": d, "seed": seed, "chromatic": mis.answer,
           "mis_family": mis.family_size, "mis_visited": mis.visited_count,
           "dom_bound": round(bounds.bound_value(n, d, "dom"), 1),
           "bip_family": bip.family_size, "bip_visited": bip.visited_count,
           "chrom_bound": round(bounds.bound_value(n, d, "chrom"), 1)}
    if n >= 1:
        dom = domatic_packing_decision(g, 2, "filtered")
        rec["domatic_filtered_visited"] = dom.visited_count
        rec["dom_trimmed_bound"] = round(bounds.bound_value(n, d, "dom_trimmed"), 1)
    return rec


def cmd_bench(args, out):
    specs = []
    for delta in _parse_range(args.delta):
        for n in _parse_range(args.n):
            _guard("lattice_max_n", 16, n, args.force)
            if n >= delta + 1:
                specs.append(("cliques", n - n % (delta + 1), delta, 0))
            for i in range(args.count):
                specs.append(("random", n, delta, args.seed + i))
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            records = list(pool.map(bench_instance, specs))
    else:
        records = [bench_instance(s) for s in specs]
    _emit(records, args.json, out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trimlat", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON records")
        sp.add_argument("--force", action="store_true", help="ignore size guards")

    sp = sub.add_parser("chromatic", help="chromatic number of a graph")
    sp.add_argument("graph")
    sp.add_argument("--method", choices=("mis", "bipartite"), default="mis")
    sp.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    common(sp)
    sp.set_defaults(func=cmd_chromatic)

    sp = sub.add_parser("domatic", help="domatic number (or a decision) of a graph")
    sp.add_argument("graph")
    sp.add_argument("-k", type=int, help="only decide whether k disjoint dominating sets exist")
    sp.add_argument("--method", choices=("filtered", "unfiltered"))
    sp.add_argument("--meet-in-middle", type=int, metavar="D", help="decide domatic >= D (D even)")
    sp.add_argument("--oracle", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_domatic)

    sp = sub.add_parser("count", help="cover/partition/packing numbers of a set family")
    sp.add_argument("input")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--kind", choices=("cover", "partition", "packing"), default="cover")
    sp.add_argument("--from-graph", choices=("mis", "bipartite", "mindom"),
                    help="treat input as a graph and use the chosen vertex-set family")
    sp.add_argument("--all", action="store_true", help="also print visited masks with zero count")
    common(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("transform", help="trimmed zeta or Moebius transform of a sparse function")
    sp.add_argument("input")
    sp.add_argument("--moebius", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("bounds", help="per-vertex base constants of the running-time bounds")
    sp.add_argument("--delta", default="3..8", help="range 'a..b' or list 'a,b,c'")
    sp.add_argument("--digits", type=int, default=4)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("bench", help="visited-mask counts against the bounds on generated graphs")
    sp.add_argument("--delta", default="2..3")
    sp.add_argument("--n", default="6..9")
    sp.add_argument("--count", type=int, default=2, help="random instances per (n, delta)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None, out: IO[str] | None = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (GuardError, ValueError, OSError) as e:
        print(f"trimlat: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
