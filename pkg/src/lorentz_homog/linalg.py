"""Exact rational linear algebra on lists of ``Fraction`` rows.

Every routine reduces to integer work in :mod:`lorentz_homog.kernels`:
rows are rescaled by the lcm of their denominators (which changes neither
row space nor kernel), eliminated fraction-free, then divided back.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import kernels

Vec = list[Fraction]
Mat = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def _lcm_den(values: Iterable) -> int:
    out = 1
    for x in values:
        d = x.denominator if isinstance(x, Fraction) else 1
        if d != 1:
            out = lcm(out, d)
    return out


def integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row to a primitive-free integer row (row space preserved)."""
    out = []
    for row in rows:
        m = _lcm_den(row)
        out.append([int(x * m) for x in row])
    return out


def frac_matrix(rows: Iterable[Iterable]) -> Mat:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(n: int, m: int) -> Mat:
    return [[ZERO] * m for _ in range(n)]


def identity(n: int) -> Mat:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; returns only the nonzero rows and pivots."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows or ncols == 0:
        return [], []
    reduced, pivots = kernels.gauss_jordan(integer_rows(rows), ncols)
    if not pivots:
        return [], []
    d = reduced[0][pivots[0]]
    return [[Fraction(x, d) for x in reduced[i]] for i in range(len(pivots))], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> Mat:
    """Basis of ``{x : A x = 0}``, one vector per free column."""
    r, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, p in zip(r, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis


def row_basis(rows: Sequence[Sequence], ncols: int | None = None) -> Mat:
    return rref(rows, ncols)[0]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Mat:
    """Exact product of rational matrices via the integer kernel."""
    if not a or not b:
        return [[] for _ in a]
    ra = [_lcm_den(row) for row in a]
    cb = [_lcm_den(col) for col in zip(*b)]
    ia = [[int(x * m) for x in row] for row, m in zip(a, ra)]
    ib = transpose([[int(x * m) for x in col] for col, m in zip(zip(*b), cb)])
    prod = kernels.matmul(ia, ib)
    return [[Fraction(x, ra[i] * cb[j]) for j, x in enumerate(row)] for i, row in enumerate(prod)]


def matvec(a: Sequence[Sequence], v: Sequence) -> Vec:
    return [sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a]


def is_zero(a: Iterable[Iterable]) -> bool:
    return all(x == 0 for row in a for x in row)


def solve(a: Sequence[Sequence], b: Sequence) -> Vec | None:
    """One solution of ``a x = b`` or None when inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    r, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, p in zip(r, pivots):
        x[p] = row[ncols]
    return x


def inverse(a: Sequence[Sequence]) -> Mat:
    n = len(a)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    r, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in r[:n]]


def inertia(sym: Sequence[Sequence]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric rational matrix.

    Symmetric Gaussian elimination (congruence), so the counts are those of
    Sylvester's law of inertia. A zero diagonal with a nonzero off-diagonal
    entry is handled by the usual ``e_i + e_j`` pivot.
    """
    a = [list(map(Fraction, row)) for row in sym]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # congruence by e_i -> e_i + e_j gives a[i][i] = 2 a[i][j] != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        prow = a[piv]
        for i in active:
            f = a[i][piv] / d
            if f:
                row = a[i]
                for k in active:
                    row[k] -= f * prow[k]
        for i in active:
            a[i][piv] = a[piv][i] = ZERO
    return pos, neg, n - pos - neg


def span_contains(basis: Sequence[Sequence], v: Sequence) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == rank(basis)


def intersect(u: Sequence[Sequence], w: Sequence[Sequence]) -> Mat:
    """Basis of span(u) ∩ span(w) (rows are vectors)."""
    if not u or not w:
        return []
    n = len(u[0])
    # x.u = y.w  <=>  [u; -w]^T (x, y) = 0
    cols = [list(vec) for vec in u] + [[-x for x in vec] for vec in w]
    ker = nullspace(transpose(cols), len(cols))
    out = [[sum((c * vec[k] for c, vec in zip(sol[: len(u)], u) if c), ZERO) for k in range(n)] for sol in ker]
    return row_basis(out, n) if out else []
