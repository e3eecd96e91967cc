import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trimlat.bitlattice import (
    RankFrontier,
    SetFamily,
    SparseTable,
    elements_of,
    mask_of,
    maximal_members,
    minimal_members,
    upper_closure,
)
from trimlat.oracle import brute_upper_closure

from conftest import M, fam


def families(max_n=12, max_size=10):
    return st.integers(1, max_n).flatmap(
        lambda n: st.sets(st.integers(0, (1 << n) - 1), max_size=max_size).map(
            lambda ms: SetFamily(n, tuple(sorted(ms)))))


def test_mask_roundtrip():
    assert elements_of(mask_of([0, 3, 5])) == [0, 3, 5]
    assert mask_of([]) == 0


def test_family_rejects_duplicates_and_overflow():
    with pytest.raises(ValueError):
        SetFamily(3, (1, 1))
    with pytest.raises(ValueError):
        SetFamily(2, (0b100,))
    with pytest.raises(ValueError):
        SetFamily(33, ())
    assert SetFamily.from_iterable(3, [1, 2, 1]).members == (1, 2)


def test_sparse_table_support():
    t = SparseTable(3, {1: 0, 2: 5})
    assert t[1] == 0 and t[7] == 0
    assert t.support() == {2}
    with pytest.raises(ValueError):
        SparseTable(2, {8: 1})


def test_upper_closure_examples():
    assert upper_closure(SetFamily(3, ())).members == ()
    assert set(upper_closure(fam(2, ()))) == {0, M(1), M(2), M(1, 2)}
    got = set(upper_closure(fam(3, (1,), (2, 3))))
    assert got == {M(1), M(1, 2), M(1, 3), M(2, 3), M(1, 2, 3)}
    assert got == brute_upper_closure([M(1), M(2, 3)], 3)


def test_min_max_members_examples():
    f = fam(3, (1,), (1, 2), (2, 3))
    assert set(minimal_members(f)) == {M(1), M(2, 3)}
    assert set(maximal_members(f)) == {M(1, 2), M(2, 3)}
    assert minimal_members(SetFamily(3, ())).members == ()


@settings(max_examples=150, deadline=None)
@given(families())
def test_closure_properties(f):
    up = upper_closure(f)
    assert set(up) == brute_upper_closure(f.members, f.universe_size)
    assert set(upper_closure(up)) == set(up)
    mn, mx = minimal_members(f), maximal_members(f)
    assert set(mn) <= set(f) and set(mx) <= set(f)
    assert set(upper_closure(mn)) == set(up)


def test_frontier_dedup_and_order():
    fr = RankFrontier(3)
    fr.push(M(1))
    fr.push(M(1))
    assert fr.pop() == M(1)
    assert fr.pop() is None

    fr = RankFrontier(3)
    fr.push(M(2, 3))
    fr.push(M(1))
    assert [fr.pop(), fr.pop()] == [M(1), M(2, 3)]

    assert RankFrontier(3).pop() is None


def test_frontier_rejects_push_below_current_rank():
    fr = RankFrontier(4)
    fr.push(M(1, 2))
    fr.pop()
    with pytest.raises(ValueError):
        fr.push(M(3))


def test_frontier_mask_processed_once():
    fr = RankFrontier(3)
    fr.push(M(1))
    assert fr.pop() == M(1)
    assert fr.push(M(1)) is False
    assert fr.pop() is None


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 255), max_size=30), st.integers(0, 1000))
def test_frontier_pops_nondecreasing_rank(masks, seed):
    fr = RankFrontier(8, random.Random(seed))
    for m in masks:
        fr.push(m)
    ranks = []
    while (x := fr.pop()) is not None:
        ranks.append(x.bit_count())
        # grow like the transforms do
        for j in range(8):
            if not x >> j & 1:
                fr.push(x | 1 << j)
    assert ranks == sorted(ranks)
