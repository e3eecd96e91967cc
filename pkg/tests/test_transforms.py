import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trimlat.bitlattice import SparseTable
from trimlat.oracle import brute_moebius, brute_upper_closure, brute_zeta
from trimlat.transforms import (
    IDENTITY_KERNEL,
    MOEBIUS_KERNEL,
    ZETA_KERNEL,
    KernelSpec,
    trimmed_moebius,
    trimmed_ranked_zeta,
    trimmed_zeta,
    yates_transform,
)

from conftest import M

# f({4}) = f({1,2,4}) = 1, f({1,3}) = 2 on a 4-element universe
LATTICE_EXAMPLE = SparseTable(4, {M(4): 1, M(1, 2, 4): 1, M(1, 3): 2})


def sparse_functions(max_n=10, max_support=15, lo=-5, hi=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.dictionaries(st.integers(0, (1 << n) - 1), st.integers(lo, hi),
                                  max_size=max_support).map(lambda d: SparseTable(n, d)))


def dense(f: SparseTable):
    out = [0] * (1 << f.universe_size)
    for x, v in f.items():
        out[x] = v
    return out


def test_kernel_rejects_nonfinite():
    with pytest.raises(ValueError):
        KernelSpec(1, float("nan"), 0, 1)
    assert ZETA_KERNEL(1, 0) == 1 and ZETA_KERNEL(0, 1) == 0


def test_yates_identity_kernel():
    f = [3, -1, 4, 1, -5, 9, 2, 6]
    assert yates_transform(f, IDENTITY_KERNEL) == f


def test_yates_zeta_on_lattice_example():
    z = yates_transform(dense(LATTICE_EXAMPLE), ZETA_KERNEL)
    assert z[M(1, 2, 3, 4)] == 4
    assert z == brute_zeta(LATTICE_EXAMPLE, 4)


def test_yates_moebius_inverts_zeta():
    f = dense(LATTICE_EXAMPLE)
    assert yates_transform(yates_transform(f, ZETA_KERNEL), MOEBIUS_KERNEL) == f


def test_yates_general_kernel_matches_direct_sum():
    rng = random.Random(3)
    n = 4
    kern = KernelSpec(0.5, -1.25, 2.0, 0.75)
    f = [rng.uniform(-1, 1) for _ in range(1 << n)]
    got = yates_transform(f, kern)
    for x in range(1 << n):
        want = 0.0
        for y in range(1 << n):
            w = 1.0
            for j in range(n):
                w *= kern(x >> j & 1, y >> j & 1)
            want += w * f[y]
        assert got[x] == pytest.approx(want, abs=1e-12)


def test_yates_rejects_bad_sizes():
    with pytest.raises(ValueError):
        yates_transform([1, 2, 3], ZETA_KERNEL)


def test_trimmed_zeta_examples():
    z = trimmed_zeta(SparseTable(2, {0: 5}))
    assert z.entries == {0: 5, M(1): 5, M(2): 5, M(1, 2): 5}

    z = trimmed_zeta(LATTICE_EXAMPLE)
    assert z[M(1, 3)] == 2 and z[M(1, 2, 4)] == 2 and z[M(1, 2, 3, 4)] == 4

    z = trimmed_zeta(SparseTable(2, {M(1): 1, M(2): 1}))
    assert z.entries == {M(1): 1, M(2): 1, M(1, 2): 2}


def test_trimmed_moebius_examples():
    m = trimmed_moebius(SparseTable(2, {0: 1}))
    assert m.entries == {0: 1, M(1): -1, M(2): -1, M(1, 2): 1}
    assert trimmed_moebius(SparseTable(1, {M(1): 3})).entries == {M(1): 3}


def test_trimmed_zeta_omits_zero_but_visits():
    f = SparseTable(2, {M(1): 1, M(2): -1})
    visited = []
    z = trimmed_zeta(f, visited=visited)
    assert M(1, 2) not in z and sorted(visited) == [M(1), M(2), M(1, 2)]


def test_ranked_zeta_examples():
    r = trimmed_ranked_zeta(SparseTable(2, {M(1): 1, M(1, 2): 1}))
    assert r[M(1, 2)][:3] == [0, 1, 1]
    r = trimmed_ranked_zeta(SparseTable(2, {0: 7}))
    assert all(v == [7, 0, 0] for v in r.values()) and len(r) == 4


@settings(max_examples=200, deadline=None)
@given(sparse_functions())
def test_trimmed_agrees_with_oracle_on_closure(f):
    n = f.universe_size
    visited = []
    z = trimmed_zeta(f, visited=visited)
    bz = brute_zeta(f, n)
    closure = brute_upper_closure(f.support(), n)
    assert set(visited) == closure
    assert len(visited) == len(closure)
    assert all(z[x] == bz[x] for x in closure)
    assert set(z) <= closure
    bm = brute_moebius(f, n)
    m = trimmed_moebius(f)
    assert all(m[x] == bm[x] for x in closure)


@settings(max_examples=100, deadline=None)
@given(sparse_functions(max_n=8))
def test_trimmed_matches_dense_yates(f):
    z = trimmed_zeta(f)
    y = yates_transform(dense(f), ZETA_KERNEL)
    for x in brute_upper_closure(f.support(), f.universe_size):
        assert z[x] == y[x]


@settings(max_examples=150, deadline=None)
@given(sparse_functions())
def test_inversion(f):
    supp = f.support()
    zm = trimmed_moebius(trimmed_zeta(f))
    mz = trimmed_zeta(trimmed_moebius(f))
    assert zm.nonzero() == f.nonzero()
    assert mz.nonzero() == f.nonzero()
    assert all(zm[x] == f[x] for x in supp)


@settings(max_examples=100, deadline=None)
@given(sparse_functions(max_n=8, lo=0), st.integers(0, 10 ** 6))
def test_ranked_sums_to_zeta_and_pop_order_free(f, seed):
    ranked = trimmed_ranked_zeta(f)
    z = trimmed_zeta(f)
    for x, vec in ranked.items():
        assert sum(vec) == z[x]
    assert trimmed_zeta(f, rng=random.Random(seed)).entries == z.entries
    assert trimmed_ranked_zeta(f, rng=random.Random(seed)) == ranked


def test_ranked_zeta_definition_small():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 6)
        f = SparseTable(n, {rng.randrange(1 << n): rng.randint(1, 4) for _ in range(4)})
        ranked = trimmed_ranked_zeta(f)
        for x, vec in ranked.items():
            for s in range(n + 1):
                want = sum(v for y, v in f.items() if y & x == y and y.bit_count() == s)
                assert vec[s] == want
