import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trimlat.cli import GuardError, ParseError, format_record, main, parse_family, parse_graph, parse_record
from trimlat.graphs import path_graph

PETERSEN = """c Petersen graph
p edge 10 15
e 1 2
e 2 3
e 3 4
e 4 5
e 5 1
e 1 6
e 2 7
e 3 8
e 4 9
e 5 10
e 6 8
e 8 10
e 10 7
e 7 9
e 9 6
"""

K4 = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"


def run(argv, capsys=None):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue().splitlines()


@pytest.fixture
def graph_file(tmp_path):
    def write(text, name="g.col"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_parse_graph_formats():
    assert parse_graph("p edge 3 2\ne 1 2\ne 2 3\n") == path_graph(3)
    assert parse_graph("1 2\n2 3\n") == path_graph(3)
    assert parse_graph("p edge 3 2\ne 1 2\ne 1 2\ne 2 1\ne 2 3\n") == path_graph(3)


@pytest.mark.parametrize("text,line", [
    ("p edge 3 1\ne 1 1\n", 2),
    ("p edge 3 1\ne 1 4\n", 2),
    ("p edge 3 1\ne 1 x\n", 2),
    ("1 2 3\n", 1),
    ("p edge 3\n", 1),
])
def test_parse_graph_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert err.value.lineno == line


def test_parse_graph_cap():
    with pytest.raises(GuardError):
        parse_graph("p edge 40 1\ne 1 2\n")


def test_parse_family():
    f = parse_family("p family 3\ns 1\ns 2 3\ns\n")
    assert f.universe_size == 3 and f.members == (0b001, 0b110, 0)


record_values = st.one_of(
    st.integers(), st.booleans(), st.none(),
    st.floats(allow_nan=False, allow_infinity=False),
    st.lists(st.integers(1, 32), max_size=6),
    st.text(min_size=0, max_size=12),
)


@given(st.dictionaries(st.from_regex(r"[a-z_]{1,8}", fullmatch=True), record_values, max_size=6))
def test_record_roundtrip(rec):
    assert parse_record(format_record(rec)) == rec


def test_chromatic_petersen(graph_file):
    code, out = run(["chromatic", "--method", "bipartite", graph_file(PETERSEN)])
    assert code == 0 and out[0] == "3"
    rec = parse_record(out[1])
    assert rec["answer"] == 3 and rec["family_size"] > 0 and rec["visited"] >= rec["family_size"]
    code, out = run(["chromatic", "--json", "--oracle", "--force", graph_file(PETERSEN)])
    rec = json.loads(out[0])
    assert code == 0 and rec["answer"] == rec["oracle"] == 3


def test_domatic_k4(graph_file):
    code, out = run(["domatic", graph_file(K4)])
    assert code == 0 and out[0] == "4"
    code, out = run(["domatic", "--meet-in-middle", "4", graph_file(K4)])
    assert out[0] == "true"
    code, out = run(["domatic", "-k", "5", graph_file(K4)])
    assert out[0] == "false" and parse_record(out[1])["answer"] is False


def test_bounds_tables():
    code, out = run(["bounds", "--delta", "3..8"])
    assert code == 0
    recs = [parse_record(line) for line in out]
    assert [r["dom_trimmed"] for r in recs] == [1.9344, 1.9744, 1.9895, 1.9956, 1.9981, 1.9992]
    assert [r["chrom"] for r in recs] == [1.8613, 1.9332, 1.9675, 1.9840, 1.9921, 1.9961]


def test_count_family(graph_file):
    path = graph_file("p family 2\ns 1\ns 2\ns 1 2\n", "f.txt")
    code, out = run(["count", "-k", "2", "--kind", "cover", path])
    assert code == 0
    recs = [parse_record(line) for line in out]
    values = {tuple(r["mask"]): r["value"] for r in recs if "mask" in r}
    assert values[(1, 2)] == 7
    assert recs[-1]["visited"] == 3
    code, out = run(["count", "-k", "2", "--kind", "partition", "--json", path])
    values = {tuple(r["mask"]): r["value"] for r in map(json.loads, out) if "mask" in r}
    assert values == {(1, 2): 2}


def test_count_from_graph(graph_file):
    code, out = run(["count", "-k", "3", "--from-graph", "mis", graph_file(PETERSEN)])
    recs = [parse_record(line) for line in out]
    assert any(r.get("mask") == list(range(1, 11)) and r["value"] > 0 for r in recs)


def test_transform(graph_file):
    path = graph_file("p func 4\nv 1 4\nv 1 1 2 4\nv 2 1 3\n", "f.txt")
    code, out = run(["transform", path])
    values = {tuple(r["mask"]): r["value"] for r in map(parse_record, out) if "mask" in r}
    assert values[(1, 2, 3, 4)] == 4 and values[(1, 3)] == 2
    code, out = run(["transform", "--moebius", path])
    assert code == 0


def test_guards(graph_file, monkeypatch):
    big = "p edge 18 1\ne 1 2\n"
    code, _ = run(["domatic", "--meet-in-middle", "2", graph_file(big)])
    assert code == 2
    code, _ = run(["chromatic", "--oracle", graph_file(big)])
    assert code == 2
    monkeypatch.setenv("TRIMLAT_MAX_N", "20")
    code, out = run(["chromatic", "--oracle", graph_file("p edge 10 1\ne 1 2\n")])
    assert code == 0 and parse_record(out[1])["oracle"] == 2


def test_bad_input_exit_code(graph_file):
    code, _ = run(["chromatic", graph_file("p edge 3 1\ne 2 2\n")])
    assert code == 2
    with pytest.raises(SystemExit):
        main(["chromatic", "--bogus"])


def test_bench_small():
    code, out = run(["bench", "--delta", "2", "--n", "6", "--count", "1"])
    assert code == 0
    recs = [parse_record(line) for line in out]
    assert recs[0]["instance"] == "cliques" and recs[0]["domatic_filtered_visited"] == 36
    for r in recs:
        assert r["bip_visited"] <= r["chrom_bound"] + 1e-9
