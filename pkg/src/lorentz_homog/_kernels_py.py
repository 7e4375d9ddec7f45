"""Pure-Python integer kernels.

Reference implementations of the two hot loops (fraction-free Gauss-Jordan
elimination and integer matrix products). The compiled module
``_kernels`` exposes the same functions with int64 storage and falls back
here on overflow.
"""

from __future__ import annotations

IntMatrix = list[list[int]]


def gauss_jordan(rows: IntMatrix, ncols: int) -> tuple[IntMatrix, list[int]]:
    """Fraction-free Gauss-Jordan elimination over the integers.

    Returns ``(reduced, pivots)``. Every pivot row of ``reduced`` carries the
    same pivot value ``d`` and all other entries in pivot columns are zero, so
    ``reduced[i][j] / d`` is the reduced row echelon form. Zero rows follow
    the pivot rows. Divisions are exact (Bareiss/Sylvester identity).
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and a[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        piv = a[r][c]
        prow = a[r]
        for i in range(nrows):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    a[i] = [piv * x // prev for x in row]
                continue
            a[i] = [(piv * x - f * y) // prev for x, y in zip(row, prow)]
        prev = piv
        pivots.append(c)
        r += 1
    if pivots and prev < 0:
        a = [[-x for x in row] for row in a]
    return a, pivots


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Integer matrix product ``a @ b``."""
    bt = list(zip(*b)) if b else []
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum(x * col[k] for k, x in nz) for col in bt])
    return out
