from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lorentz_homog import _kernels_py, kernels, linalg


def naive_rref(rows, ncols):
    a = [[Fraction(x) for x in r] for r in rows]
    pivots, r = [], 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def normalized(reduced, pivots):
    if not pivots:
        return [], []
    d = reduced[0][pivots[0]]
    return [[Fraction(x, d) for x in reduced[i]] for i in range(len(pivots))], pivots


small = st.integers(-9, 9)
matrices = st.integers(1, 6).flatmap(
    lambda n: st.integers(1, 6).flatmap(lambda m: st.lists(st.lists(small, min_size=m, max_size=m), min_size=n, max_size=n))
)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_pure_gauss_jordan_matches_naive(rows):
    ncols = len(rows[0])
    assert normalized(*_kernels_py.gauss_jordan(rows, ncols)) == naive_rref(rows, ncols)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_dispatched_gauss_jordan_matches_pure(rows):
    ncols = len(rows[0])
    assert kernels.gauss_jordan(rows, ncols) == _kernels_py.gauss_jordan(rows, ncols)


@settings(max_examples=100, deadline=None)
@given(matrices, st.integers(1, 5), st.randoms())
def test_matmul_matches_naive(a, m, rnd):
    k = len(a[0])
    b = [[rnd.randint(-9, 9) for _ in range(m)] for _ in range(k)]
    want = [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]
    assert kernels.matmul(a, b) == want
    assert _kernels_py.matmul(a, b) == want


def test_overflow_falls_back_to_python():
    big = 2**70
    rows = [[big, 1], [1, big]]
    assert kernels.gauss_jordan(rows, 2) == _kernels_py.gauss_jordan(rows, 2)
    assert kernels.matmul(rows, rows) == _kernels_py.matmul(rows, rows)


@pytest.mark.skipif(kernels.BACKEND != "compiled", reason="compiled core not built")
def test_compiled_core_raises_on_overflow():
    from lorentz_homog import _kernels

    with pytest.raises(OverflowError):
        _kernels.matmul([[2**62]], [[4]])


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_nullspace_is_kernel_and_rank_nullity(rows):
    ncols = len(rows[0])
    ns = linalg.nullspace(rows, ncols)
    assert linalg.rank(rows, ncols) + len(ns) == ncols
    for v in ns:
        assert all(sum(Fraction(x) * y for x, y in zip(r, v)) == 0 for r in rows)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_inertia_of_gram_is_semidefinite(rows):
    # A A^T is positive semidefinite with rank A positive directions
    g = linalg.matmul(linalg.frac_matrix(rows), linalg.transpose(linalg.frac_matrix(rows)))
    pos, neg, zero = linalg.inertia(g)
    assert (pos, neg, zero) == (linalg.rank(rows), 0, len(rows) - linalg.rank(rows))


def test_inverse_and_solve():
    a = linalg.frac_matrix([[2, 1], [5, 3]])
    inv = linalg.inverse(a)
    assert linalg.matmul(a, inv) == linalg.identity(2)
    assert linalg.solve(a, [Fraction(1), Fraction(2)]) == [Fraction(1), Fraction(-1)]


def test_intersect_spans():
    u = [[1, 0, 0], [0, 1, 0]]
    w = [[0, 1, 0], [0, 0, 1]]
    inter = linalg.intersect(u, w)
    assert len(inter) == 1 and linalg.span_contains(inter, [0, 1, 0])
