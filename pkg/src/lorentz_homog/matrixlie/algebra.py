"""Matrix Lie algebras over the rationals with exact structure constants.

Complex and quaternionic algebras are realified: ``a + bi`` becomes the
block ``[[a, -b], [b, a]]`` and a quaternion goes through its 2x2 complex
matrix first. Under this embedding ``X*`` becomes ``X^T``, so every real form
handled here is a subalgebra of ``so(eta)`` for the realified signature
``eta`` and is closed under transposition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .. import linalg
from ..linalg import ONE, ZERO, Mat, Vec

Scalar = Fraction | int | tuple


class LieAlgebraError(ValueError):
    pass


# --------------------------------------------------------------------------
# scalar embeddings

FIELD_SIZE = {"R": 1, "C": 2, "H": 4}

# quaternion units as complex 2x2 matrices, entries (re, im)
_QUAT_AS_COMPLEX = {
    0: (((1, 0), (0, 0)), ((0, 0), (1, 0))),
    1: (((0, 1), (0, 0)), ((0, 0), (0, -1))),
    2: (((0, 0), (-1, 0)), ((1, 0), (0, 0))),
    3: (((0, 0), (0, -1)), ((0, -1), (0, 0))),
}


def _complex_block(re_: Fraction, im: Fraction) -> Mat:
    return [[re_, -im], [im, re_]]


def scalar_block(value: Scalar, fld: str) -> Mat:
    """Real matrix of a scalar: a number, ``(re, im)`` or ``(a, b, c, d)``."""
    if not isinstance(value, tuple):
        value = (value,)
    coeffs = [Fraction(x) for x in value] + [ZERO] * (FIELD_SIZE[fld] - len(value))
    if len(coeffs) > FIELD_SIZE[fld]:
        raise LieAlgebraError(f"scalar {value} does not live in field {fld}")
    if fld == "R":
        return [[coeffs[0]]]
    if fld == "C":
        return _complex_block(coeffs[0], coeffs[1])
    out = linalg.zeros(4, 4)
    for unit, c in enumerate(coeffs):
        if not c:
            continue
        for r in range(2):
            for s in range(2):
                re_, im = _QUAT_AS_COMPLEX[unit][r][s]
                blk = _complex_block(Fraction(re_) * c, Fraction(im) * c)
                for a in range(2):
                    for b in range(2):
                        out[2 * r + a][2 * s + b] += blk[a][b]
    return out


def conj(value: Scalar) -> tuple:
    if not isinstance(value, tuple):
        return (value,)
    return (value[0],) + tuple(-x for x in value[1:])


def embed(n: int, entries: dict[tuple[int, int], Scalar], fld: str = "R") -> Mat:
    """Realify an ``n x n`` matrix over R, C or H given by its nonzero entries."""
    s = FIELD_SIZE[fld]
    out = linalg.zeros(n * s, n * s)
    for (r, c), value in entries.items():
        blk = scalar_block(value, fld)
        for a in range(s):
            for b in range(s):
                out[r * s + a][c * s + b] += blk[a][b]
    return out


def unit(fld: str, k: int) -> tuple:
    """k-th basis unit of the field as a coefficient tuple (1, i, j, k)."""
    t = [0] * FIELD_SIZE[fld]
    t[k] = 1
    return tuple(t)


# --------------------------------------------------------------------------
# matrix helpers


def flatten(m: Mat) -> Vec:
    return [x for row in m for x in row]


def commutator(a: Mat, b: Mat) -> Mat:
    ab = linalg.matmul(a, b)
    ba = linalg.matmul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def mat_add(a: Mat, b: Mat, s: Fraction = ONE) -> Mat:
    return [[x + s * y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def mat_scale(a: Mat, s) -> Mat:
    s = Fraction(s)
    return [[s * x for x in row] for row in a]


def combine(coeffs: Sequence, mats: Sequence[Mat]) -> Mat:
    n = len(mats[0])
    out = linalg.zeros(n, len(mats[0][0]))
    for c, m in zip(coeffs, mats):
        if c:
            for i, row in enumerate(m):
                orow = out[i]
                for j, x in enumerate(row):
                    if x:
                        orow[j] += c * x
    return out


class Coordinates:
    """Coordinates with respect to a fixed independent family of vectors.

    Solves through a pivot minor: ``x[pivots] = c . P`` with ``P`` the pivot
    columns of the family, then checks ``x = sum c_i v_i`` exactly.
    """

    def __init__(self, vectors: Sequence[Vec]):
        self.vectors = [list(v) for v in vectors]
        self.dim = len(self.vectors)
        if not self.vectors:
            self.pivots, self._pinv = [], []
            return
        n = len(self.vectors[0])
        _, pivots = linalg.rref(self.vectors, n)
        if len(pivots) != self.dim:
            raise LieAlgebraError("basis vectors are linearly dependent")
        self.pivots = pivots
        minor = [[v[p] for p in pivots] for v in self.vectors]
        self._pinv = linalg.inverse(minor)

    def solve(self, x: Sequence) -> Vec | None:
        if not self.vectors:
            return [] if not any(x) else None
        xs = [x[p] for p in self.pivots]
        c = [sum((xs[k] * self._pinv[k][i] for k in range(self.dim) if xs[k] and self._pinv[k][i]), ZERO) for i in range(self.dim)]
        recon = [ZERO] * len(x)
        for ci, v in zip(c, self.vectors):
            if ci:
                for j, y in enumerate(v):
                    if y:
                        recon[j] += ci * y
        if any(a != b for a, b in zip(recon, x)):
            return None
        return c

    def __call__(self, x: Sequence) -> Vec:
        c = self.solve(x)
        if c is None:
            raise LieAlgebraError("vector is not in the span")
        return c


# --------------------------------------------------------------------------


class MatrixLieAlgebra:
    """A real Lie algebra given by a basis of rational matrices."""

    def __init__(self, name: str, basis: Sequence[Mat], field_: str = "R", labels: Sequence[str] | None = None):
        if not basis:
            raise LieAlgebraError("empty basis")
        self.name = name
        self.field = field_
        self.basis = [linalg.frac_matrix(b) for b in basis]
        self.matrix_size = len(self.basis[0])
        self.labels = list(labels) if labels else [f"b{i}" for i in range(len(self.basis))]
        self._coords = Coordinates([flatten(b) for b in self.basis])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, x: Mat) -> Vec:
        c = self._coords.solve(flatten(x))
        if c is None:
            raise LieAlgebraError(f"matrix is not in {self.name}")
        return c

    def contains(self, x: Mat) -> bool:
        return self._coords.solve(flatten(x)) is not None

    def element(self, coords: Sequence) -> Mat:
        return combine(coords, self.basis)

    @cached_property
    def structure_constants(self) -> list[list[Vec]]:
        """``c[i][j][k]`` with ``[b_i, b_j] = sum_k c[i][j][k] b_k``."""
        n = self.dim
        c: list[list[Vec | None]] = [[None] * n for _ in range(n)]
        for i in range(n):
            c[i][i] = [ZERO] * n
            for j in range(i + 1, n):
                br = commutator(self.basis[i], self.basis[j])
                coords = self._coords.solve(flatten(br))
                if coords is None:
                    raise LieAlgebraError(f"{self.name}: basis not closed under the bracket")
                c[i][j] = coords
                c[j][i] = [-x for x in coords]
        return c  # type: ignore[return-value]

    @cached_property
    def ad_basis(self) -> list[Mat]:
        """Matrices of ``ad b_i`` acting on coordinate columns."""
        c = self.structure_constants
        n = self.dim
        return [[[c[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]

    def ad(self, x: Sequence) -> Mat:
        return combine(x, self.ad_basis)

    def bracket(self, x: Sequence, y: Sequence) -> Vec:
        return linalg.matvec(self.ad(x), y)

    @cached_property
    def killing(self) -> Mat:
        ads = self.ad_basis
        n = self.dim
        trans = [linalg.transpose(a) for a in ads]
        flat = [flatten(a) for a in ads]
        flat_t = [flatten(t) for t in trans]
        out = linalg.zeros(n, n)
        for i in range(n):
            for j in range(i, n):
                v = sum((a * b for a, b in zip(flat[i], flat_t[j]) if a and b), ZERO)
                out[i][j] = out[j][i] = v
        return out

    def B(self, x: Sequence, y: Sequence) -> Fraction:
        kx = linalg.matvec(self.killing, y)
        return sum((a * b for a, b in zip(x, kx) if a and b), ZERO)

    # structural identities ------------------------------------------------

    def jacobi_defect(self) -> int:
        """Number of pairs (i, j) with ``ad [b_i, b_j] != [ad b_i, ad b_j]``.

        Zero means the Jacobi identity holds on every basis triple.
        """
        ads = self.ad_basis
        c = self.structure_constants
        bad = 0
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lhs = self.ad(c[i][j])
                rhs = commutator(ads[i], ads[j])
                if lhs != rhs:
                    bad += 1
        return bad

    def antisymmetry_defect(self) -> int:
        c = self.structure_constants
        return sum(1 for i in range(self.dim) for j in range(self.dim) if c[i][j] != [-x for x in c[j][i]])

    def killing_invariance_defect(self) -> int:
        """Number of basis ``x`` with ``ad_x^T B + B ad_x != 0``.

        This is ``B([x,y],z) + B(y,[x,z]) = 0`` on all basis triples.
        """
        b = self.killing
        bad = 0
        for a in self.ad_basis:
            at_b = linalg.matmul(linalg.transpose(a), b)
            b_a = linalg.matmul(b, a)
            if not linalg.is_zero(mat_add(at_b, b_a)):
                bad += 1
        return bad

    def __repr__(self) -> str:
        return f"MatrixLieAlgebra({self.name!r}, dim={self.dim}, size={self.matrix_size})"


# --------------------------------------------------------------------------


@dataclass
class Subspace:
    """Subspace of a Lie algebra, basis given in algebra coordinates.

    ``symbol`` names the subspace in reports; ``complex_pairs`` optionally
    lists ``(u, Ju)`` index pairs of a complex structure on the subspace.
    """

    ambient: MatrixLieAlgebra
    basis_coords: list[Vec]
    symbol: str = ""
    complex_pairs: tuple[tuple[int, int], ...] | None = None
    labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.basis_coords = [[Fraction(x) for x in v] for v in self.basis_coords]
        self._coords = Coordinates(self.basis_coords)

    @property
    def dim(self) -> int:
        return len(self.basis_coords)

    @classmethod
    def from_matrices(cls, g: MatrixLieAlgebra, mats: Sequence[Mat], symbol: str = "", **kw) -> Subspace:
        return cls(g, [g.coords(m) for m in mats], symbol, **kw)

    @classmethod
    def spanned(cls, g: MatrixLieAlgebra, vectors: Sequence[Vec], symbol: str = "") -> Subspace:
        """Subspace spanned by possibly dependent vectors (reduced basis)."""
        vectors = [v for v in vectors if any(v)]
        basis = linalg.row_basis(vectors, g.dim) if vectors else []
        return cls(g, basis, symbol)

    def coords(self, x: Sequence) -> Vec:
        return self._coords(x)

    def contains(self, x: Sequence) -> bool:
        return self._coords.solve(x) is not None

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis_coords)

    def matrices(self) -> list[Mat]:
        return [self.ambient.element(v) for v in self.basis_coords]

    def operator(self, x: Sequence) -> Mat:
        """Matrix of ``ad x`` restricted to this (ad x)-invariant subspace."""
        adx = self.ambient.ad(x)
        cols = [self.coords(linalg.matvec(adx, v)) for v in self.basis_coords]
        return linalg.transpose(cols) if cols else []

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.spanned(self.ambient, self.basis_coords + other.basis_coords)

    def intersect(self, other: Subspace) -> Subspace:
        return Subspace(self.ambient, linalg.intersect(self.basis_coords, other.basis_coords) if self.dim and other.dim else [])

    def is_subalgebra(self) -> bool:
        g = self.ambient
        return all(self.contains(g.bracket(u, v)) for i, u in enumerate(self.basis_coords) for v in self.basis_coords[i + 1:])


@dataclass
class ReductiveDecomposition:
    g: MatrixLieAlgebra
    h: Subspace
    m: Subspace

    def check(self) -> list[str]:
        """Violated conditions (empty list when g = h + m is reductive)."""
        errs = []
        if self.h.dim + self.m.dim != self.g.dim:
            errs.append(f"dim h + dim m = {self.h.dim + self.m.dim} != dim g = {self.g.dim}")
        elif linalg.rank(self.h.basis_coords + self.m.basis_coords, self.g.dim) != self.g.dim:
            errs.append("h and m are not independent")
        if not self.h.is_subalgebra():
            errs.append("[h,h] not in h")
        if not brackets_into(self.h, self.m):
            errs.append("[h,m] not in m")
        return errs


def brackets_into(h: Subspace, m: Subspace) -> bool:
    g = h.ambient
    return all(m.contains(g.bracket(x, y)) for x in h.basis_coords for y in m.basis_coords)


# --------------------------------------------------------------------------
# classical real forms


def _signature(p: int, q: int) -> list[int]:
    return [-1] * p + [1] * q


def _unitary_basis(fld: str, eta: list[int], traceless: bool) -> tuple[list[Mat], list[str]]:
    """Basis of ``{X : X* eta + eta X = 0}`` over R, C or H (optionally traceless)."""
    n = len(eta)
    size = FIELD_SIZE[fld]
    mats, labels = [], []
    for r in range(n):
        for c in range(r + 1, n):
            s = -eta[r] * eta[c]
            for k in range(size):
                q = unit(fld, k)
                mats.append(embed(n, {(r, c): q, (c, r): tuple(s * x for x in conj(q))}, fld))
                labels.append(f"X{r}{c}[{k}]")
    if fld == "C" and traceless:
        for r in range(n - 1):
            mats.append(embed(n, {(r, r): (0, 1), (r + 1, r + 1): (0, -1)}, fld))
            labels.append(f"H{r}")
    else:
        for r in range(n):
            for k in range(1, size):
                mats.append(embed(n, {(r, r): unit(fld, k)}, fld))
                labels.append(f"D{r}[{k}]")
    return mats, labels


def sl(n: int) -> MatrixLieAlgebra:
    mats, labels = [], []
    for r in range(n):
        for c in range(n):
            if r != c:
                mats.append(embed(n, {(r, c): 1}))
                labels.append(f"E{r}{c}")
    for r in range(n - 1):
        mats.append(embed(n, {(r, r): 1, (r + 1, r + 1): -1}))
        labels.append(f"H{r}")
    return MatrixLieAlgebra(f"sl({n},R)", mats, "R", labels)


def so(p: int, q: int) -> MatrixLieAlgebra:
    mats, labels = _unitary_basis("R", _signature(p, q), False)
    return MatrixLieAlgebra(f"so({p},{q})" if p else f"so({q})", mats, "R", labels)


def su(p: int, q: int) -> MatrixLieAlgebra:
    mats, labels = _unitary_basis("C", _signature(p, q), True)
    return MatrixLieAlgebra(f"su({p},{q})" if p else f"su({q})", mats, "C", labels)


def sp(p: int, q: int) -> MatrixLieAlgebra:
    mats, labels = _unitary_basis("H", _signature(p, q), False)
    return MatrixLieAlgebra(f"sp({p},{q})" if p else f"sp({q})", mats, "H", labels)


_SPEC_RE = re.compile(r"^\s*(sl|so|su|sp)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?(?:,\s*R\s*)?\)\s*$", re.IGNORECASE)


def build_classical(spec: str) -> MatrixLieAlgebra:
    """``sl(n)``, ``so(p,q)``, ``su(p,q)``, ``sp(p,q)``; one index means compact.

    ``sl(n,R)`` is accepted as well.
    """
    m = _SPEC_RE.match(spec)
    if not m:
        raise LieAlgebraError(f"unsupported algebra spec {spec!r}")
    kind = m.group(1).lower()
    a = int(m.group(2))
    b = int(m.group(3)) if m.group(3) is not None else None
    if kind == "sl":
        if b is not None or a < 2:
            raise LieAlgebraError(f"unsupported algebra spec {spec!r}")
        return sl(a)
    p, q = (0, a) if b is None else (a, b)
    if p + q < 2 and kind != "sp":
        raise LieAlgebraError(f"unsupported algebra spec {spec!r}")
    if p + q < 1:
        raise LieAlgebraError(f"unsupported algebra spec {spec!r}")
    return {"so": so, "su": su, "sp": sp}[kind](p, q)


# --------------------------------------------------------------------------
# subspace operations


def killing_form(g: MatrixLieAlgebra) -> Mat:
    return g.killing


def killing_complement(g: MatrixLieAlgebra, h: Subspace, within: Subspace | None = None, symbol: str = "m") -> Subspace:
    """B-orthogonal complement of ``h`` (inside ``within`` when given)."""
    big = within.basis_coords if within is not None else linalg.identity(g.dim)
    if not h.dim:
        return Subspace(g, [list(v) for v in big], symbol)
    gram = [[g.B(u, v) for v in big] for u in h.basis_coords]
    if linalg.rank([[g.B(u, v) for v in h.basis_coords] for u in h.basis_coords], h.dim) != h.dim:
        raise LieAlgebraError("Killing form is degenerate on h")
    sols = linalg.nullspace(gram, len(big))
    vecs = [[sum((c * v[k] for c, v in zip(sol, big) if c), ZERO) for k in range(g.dim)] for sol in sols]
    m = Subspace.spanned(g, vecs, symbol)
    target = within.dim if within is not None else g.dim
    if m.dim + h.dim != target:
        raise LieAlgebraError("complement has the wrong dimension")
    return m


def fixed_subspace(h: Subspace, m: Subspace, symbol: str = "") -> Subspace:
    """``{x in m : [y, x] = 0 for all y in h}`` via one stacked nullspace."""
    g = m.ambient
    if not m.dim:
        return Subspace(g, [], symbol)
    rows: list[Vec] = []
    for y in h.basis_coords:
        ady = g.ad(y)
        images = [linalg.matvec(ady, v) for v in m.basis_coords]
        rows.extend(linalg.transpose(images))
    if not rows:
        return Subspace(g, [list(v) for v in m.basis_coords], symbol)
    sols = linalg.nullspace(rows, m.dim)
    vecs = [[sum((c * v[k] for c, v in zip(sol, m.basis_coords) if c), ZERO) for k in range(g.dim)] for sol in sols]
    return Subspace.spanned(g, vecs, symbol)


def fixed_subspace_iterated(h: Subspace, m: Subspace) -> Subspace:
    """Same as :func:`fixed_subspace`, one generator at a time (oracle)."""
    g = m.ambient
    current = [list(v) for v in m.basis_coords]
    for y in h.basis_coords:
        if not current:
            break
        ady = g.ad(y)
        images = [linalg.matvec(ady, v) for v in current]
        sols = linalg.nullspace(linalg.transpose(images), len(current))
        current = [[sum((c * v[k] for c, v in zip(sol, current) if c), ZERO) for k in range(g.dim)] for sol in sols]
    return Subspace.spanned(g, current)


def centralizer(x: Sequence, within: Subspace, symbol: str = "") -> Subspace:
    g = within.ambient
    return fixed_subspace(Subspace(g, [list(x)]), within, symbol)


def cartan_decomposition(g: MatrixLieAlgebra) -> tuple[Subspace, Subspace]:
    """``(k, p)``: skew and symmetric parts (g is closed under transpose)."""
    ks, ps = [], []
    for b in g.basis:
        bt = linalg.transpose(b)
        ks.append(g.coords(mat_scale(mat_add(b, bt, -ONE), Fraction(1, 2))))
        ps.append(g.coords(mat_scale(mat_add(b, bt), Fraction(1, 2))))
    return Subspace.spanned(g, ks, "k"), Subspace.spanned(g, ps, "p")


def positive_form(g: MatrixLieAlgebra, x: Sequence, y: Sequence) -> Fraction:
    """``B_theta(x, y) = -B(x, theta y)``; positive definite, Ad_K-invariant."""
    theta_y = g.coords(mat_scale(linalg.transpose(g.element(y)), -1))
    return -g.B(x, theta_y)


@dataclass
class LorentzGram:
    """Gram matrix of ``-lambda t*(x)t* + sum s_i B_theta|W_i`` on ``m``.

    ``basis`` lists ``t`` first, then the bases of the blocks ``W_i``.
    """

    gram: Mat
    basis: Subspace
    h: Subspace

    def inertia(self) -> tuple[int, int, int]:
        return linalg.inertia(self.gram)

    def is_lorentzian(self) -> bool:
        pos, neg, zero = self.inertia()
        return neg == 1 and zero == 0

    def invariance_defect(self) -> int:
        """Number of ``h`` basis vectors with ``A^T G + G A != 0``."""
        bad = 0
        gt = self.gram
        for x in self.h.basis_coords:
            a = self.basis.operator(x)
            lhs = linalg.matmul(linalg.transpose(a), gt)
            rhs = linalg.matmul(gt, a)
            if any(u + v for ru, rv in zip(lhs, rhs) for u, v in zip(ru, rv)):
                bad += 1
        return bad


def lorentz_gram(
    h: Subspace,
    m: Subspace,
    t: Sequence,
    lam: Fraction = ONE,
    blocks: Sequence[Subspace] | None = None,
    scales: Sequence[Fraction] | None = None,
) -> LorentzGram:
    """Invariant metric with timelike ``t`` in ``m^H`` and ``B_theta`` elsewhere.

    Without ``blocks`` the spacelike part is the ``B_theta``-complement of
    ``t`` in ``m`` with a single scale.
    """
    g = m.ambient
    t = list(t)
    if not m.contains(t):
        raise LieAlgebraError("timelike vector is not in m")
    if blocks is None:
        rows = [[positive_form(g, t, v) for v in m.basis_coords]]
        null = linalg.nullspace(rows, m.dim)
        w = [[sum(c * v[i] for c, v in zip(n_, m.basis_coords)) for i in range(g.dim)] for n_ in null]
        blocks = [Subspace(g, w)]
    scales = list(scales) if scales is not None else [ONE] * len(blocks)
    vecs = [t] + [v for b in blocks for v in b.basis_coords]
    owner = [-1] + [i for i, b in enumerate(blocks) for _ in b.basis_coords]
    if len(vecs) != m.dim or linalg.rank(vecs, g.dim) != m.dim:
        raise LieAlgebraError("t and the blocks do not form a basis of m")
    n = len(vecs)
    gram = linalg.zeros(n, n)
    tt = positive_form(g, t, t)
    gram[0][0] = -Fraction(lam) * tt
    for i in range(1, n):
        for j in range(i, n):
            if owner[i] == owner[j]:
                val = scales[owner[i]] * positive_form(g, vecs[i], vecs[j])
                gram[i][j] = gram[j][i] = val
    return LorentzGram(gram, Subspace(g, vecs, "m"), h)


__all__ = [
    "LorentzGram",
    "lorentz_gram",
    "Coordinates",
    "LieAlgebraError",
    "MatrixLieAlgebra",
    "ReductiveDecomposition",
    "Subspace",
    "brackets_into",
    "build_classical",
    "cartan_decomposition",
    "centralizer",
    "combine",
    "commutator",
    "embed",
    "fixed_subspace",
    "fixed_subspace_iterated",
    "flatten",
    "killing_complement",
    "killing_form",
    "positive_form",
    "sl",
    "so",
    "sp",
    "su",
]
