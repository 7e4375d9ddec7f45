"""Explicit reductive decompositions ``g = h + m`` with named subspaces.

Each case realizes one homogeneous space ``G/H`` of a noncompact simple
group: ``h`` is the isotropy algebra, ``k`` the maximal compact subalgebra,
``m = n + p`` with ``n = k`` minus ``h`` (Killing-orthogonally) and ``p`` the
symmetric part. Distinguished elements are stored under their usual symbols
(``v``, ``b``, ``z``, ``z'``, ``z0``, ``t``).

Case identifiers::

    sl:p,q          SL(p+q, R) / SO(p) x SO(q)
    so1n:n          SO(1,n) / SO(n-1)
    su1n:n          SU(1,n) / U(n-1)
    sp1n:n          Sp(1,n) / Sp(1) x Sp(n-1)
    sopq:p,q,r,k    SO(p,q) / K_v for v = sum_{i<=r} eps_i e_i (x) f_i,
                    eps = (1,..,1,-1,..,-1) with k minus signs
    a:p,q  b+:p,q  b-:p,q  c+:p,q  c-:p,q
                    the rank 1, 2, 3 diagonal vectors of sopq
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .. import linalg
from ..linalg import ZERO, Vec
from .algebra import (
    LieAlgebraError,
    LorentzGram,
    MatrixLieAlgebra,
    ReductiveDecomposition,
    Subspace,
    cartan_decomposition,
    embed,
    fixed_subspace,
    killing_complement,
    lorentz_gram,
    sl,
    so,
    sp,
    su,
)


@dataclass
class Case:
    case_id: str
    title: str
    g: MatrixLieAlgebra
    decomposition: ReductiveDecomposition
    subspaces: dict[str, Subspace]
    vectors: dict[str, Vec]
    claims: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def h(self) -> Subspace:
        return self.decomposition.h

    @property
    def m(self) -> Subspace:
        return self.decomposition.m

    def fixed(self, name: str) -> Subspace:
        return fixed_subspace(self.h, self.subspaces[name], f"{name}^H")

    def fixed_dims(self) -> dict[str, int]:
        return {f"{k}^H": self.fixed(k).dim for k in ("m", "n", "p")}

    def check_claims(self) -> dict[str, tuple[int, int]]:
        """``{key: (claimed, computed)}`` for every stated fixed dimension."""
        got = self.fixed_dims()
        return {k: (v, got[k]) for k, v in self.claims.items()}

    def timelike(self) -> Vec:
        """The distinguished invariant vector used as the timelike direction."""
        for key in ("b", "v", "t"):
            if key in self.vectors:
                return self.vectors[key]
        raise LieAlgebraError(f"{self.case_id}: no distinguished invariant vector")

    def lorentz_gram(self, lam: Fraction = Fraction(1)) -> LorentzGram:
        return lorentz_gram(self.h, self.m, self.timelike(), lam)


def _finish(case_id, title, g, h, vectors, extra=None, claims=None, notes=None) -> Case:
    k, p = cartan_decomposition(g)
    if not k.contains_subspace(h):
        raise LieAlgebraError(f"{case_id}: h is not inside k")
    m = killing_complement(g, h, symbol="m")
    n = killing_complement(g, h, within=k, symbol="n")
    dec = ReductiveDecomposition(g, h, m)
    errs = dec.check()
    if errs:
        raise LieAlgebraError(f"{case_id}: " + "; ".join(errs))
    subs = {"h": h, "k": k, "m": m, "n": n, "p": p}
    subs.update(extra or {})
    return Case(case_id, title, g, dec, subs, vectors, dict(claims or {}), list(notes or []))


# --------------------------------------------------------------------------
# SL(n, R) / SO(p) x SO(q)


def sl_case(p: int, q: int) -> Case:
    if p < 1 or q < 1:
        raise LieAlgebraError("sl case needs p, q >= 1")
    n = p + q
    g = sl(n)
    U, W = range(p), range(p, n)

    def skew(a, b):
        return embed(n, {(a, b): 1, (b, a): -1})

    def sym(a, b):
        return embed(n, {(a, b): 1, (b, a): 1})

    h = Subspace.from_matrices(g, [skew(a, b) for blk in (U, W) for a in blk for b in blk if a < b], "h")
    b_vec = g.coords(embed(n, {**{(a, a): q for a in U}, **{(c, c): -p for c in W}}))
    uw_wedge = Subspace.from_matrices(g, [skew(a, c) for a in U for c in W], "U^W")
    uw_sym = Subspace.from_matrices(g, [sym(a, c) for a in U for c in W], "UvW")

    def traceless_sym(block):
        block = list(block)
        mats = [sym(a, c) for a in block for c in block if a < c]
        mats += [embed(n, {(block[i], block[i]): 1, (block[i + 1], block[i + 1]): -1}) for i in range(len(block) - 1)]
        return mats

    s2u = Subspace.from_matrices(g, traceless_sym(U), "S2_0U") if p > 1 else Subspace(g, [], "S2_0U")
    s2w = Subspace.from_matrices(g, traceless_sym(W), "S2_0W") if q > 1 else Subspace(g, [], "S2_0W")
    extra = {
        "Rb": Subspace(g, [b_vec], "Rb"),
        "U^W": uw_wedge,
        "UvW": uw_sym,
        "UW2": uw_wedge + uw_sym,
        "S2_0U": s2u,
        "S2_0W": s2w,
    }
    return _finish(
        f"sl:{p},{q}",
        f"SL({n},R)/SO({p})xSO({q})",
        g,
        h,
        {"b": b_vec},
        extra,
        claims={"m^H": 1},
        notes=["module written with U (x) W; the (U (x) V) reading does not fit the dimension count"],
    )


# --------------------------------------------------------------------------
# SO(p, q) with U = R^p (negative) and W = R^q (positive)


class _SOpq:
    def __init__(self, p: int, q: int):
        self.p, self.q, self.n = p, q, p + q
        self.g = so(p, q)

    def e_wedge(self, a, b):
        """e_a ^ e_b in so(U), Euclidean convention on U (0-based)."""
        return embed(self.n, {(a, b): 1, (b, a): -1})

    def f_wedge(self, a, b):
        p = self.p
        return embed(self.n, {(p + a, p + b): 1, (p + b, p + a): -1})

    def tensor(self, a, b):
        """e_a (x) f_b in p = U (x) W."""
        p = self.p
        return embed(self.n, {(a, p + b): 1, (p + b, a): 1})

    def c(self, mat):
        return self.g.coords(mat)


def so1n_case(n: int) -> Case:
    if n < 2:
        raise LieAlgebraError("so(1,n) case needs n >= 2")
    s = _SOpq(1, n)
    g = s.g
    h = Subspace.from_matrices(g, [s.f_wedge(a, b) for a in range(1, n) for b in range(a + 1, n)], "h")
    t = s.c(s.tensor(0, 0))
    extra = {
        "R(e0^e1)": Subspace(g, [t], "R(e0^e1)"),
        "e0^W": Subspace.from_matrices(g, [s.tensor(0, b) for b in range(1, n)], "e0^W"),
        "e1^W": Subspace.from_matrices(g, [s.f_wedge(0, b) for b in range(1, n)], "e1^W"),
    }
    return _finish(f"so1n:{n}", f"SO(1,{n})/SO({n - 1})", g, h, {"t": t, "e0^e1": t}, extra, claims={"m^H": 1})


def _signs(r: int, k: int) -> list[int]:
    return [1] * (r - k) + [-1] * k


def sopq_case(p: int, q: int, r: int, k: int, case_id: str | None = None, claims=None, notes=None) -> Case:
    """Stabilizer of the diagonal vector ``v = sum eps_i e_i (x) f_i`` (``D_k`` signs).

    ``K_v`` is the twisted diagonal ``{(A, D A D)}`` on the first ``r`` basis
    vectors of ``U`` and ``W`` plus ``so`` of both orthogonal complements.
    """
    if not (1 <= r <= min(p, q) and 0 <= k <= r):
        raise LieAlgebraError("need 1 <= r <= min(p,q) and 0 <= k <= r")
    s = _SOpq(p, q)
    g = s.g
    eps = _signs(r, k)
    mats = []
    for a in range(r):
        for b in range(a + 1, r):
            m = linalg.frac_matrix(s.e_wedge(a, b))
            fm = s.f_wedge(a, b)
            sign = eps[a] * eps[b]
            mats.append([[x + sign * y for x, y in zip(r1, r2)] for r1, r2 in zip(m, fm)])
    mats += [s.e_wedge(a, b) for a in range(r, p) for b in range(a + 1, p)]
    mats += [s.f_wedge(a, b) for a in range(r, q) for b in range(a + 1, q)]
    g_h = Subspace.from_matrices(g, mats, "h") if mats else Subspace(g, [], "h")
    v = [ZERO] * g.dim
    for i in range(r):
        v = [x + eps[i] * y for x, y in zip(v, s.c(s.tensor(i, i)))]
    cid = case_id or f"sopq:{p},{q},{r},{k}"
    extra = {"Rv": Subspace(g, [v], "Rv")}
    vectors = {"v": v}
    if r == 2:
        # e1^e2 -/+ f1^f2 and e1 (x) f2 -/+ e2 (x) f1
        sgn = -eps[0] * eps[1]
        anti = [x + sgn * y for x, y in zip(s.c(s.e_wedge(0, 1)), s.c(s.f_wedge(0, 1)))]
        vectors["e1^e2-+f1^f2"] = anti
        vectors["e1f2-+e2f1"] = [x + sgn * y for x, y in zip(s.c(s.tensor(0, 1)), s.c(s.tensor(1, 0)))]
    return _finish(cid, f"SO({p},{q})/K_v, v of rank {r}, {k} negative", g, g_h, vectors, extra, claims, notes)


# --------------------------------------------------------------------------
# SU(1, n) / U(n-1)


def su1n_case(n: int) -> Case:
    if n < 2:
        raise LieAlgebraError("su(1,n) case needs n >= 2")
    N = n + 1
    g = su(1, n)
    W = range(2, N)
    mats = []
    for a in W:
        for b in W:
            if a < b:
                mats.append(embed(N, {(a, b): 1, (b, a): -1}, "C"))
                mats.append(embed(N, {(a, b): (0, 1), (b, a): (0, 1)}, "C"))
    Wl = list(W)
    for i in range(len(Wl) - 1):
        mats.append(embed(N, {(Wl[i], Wl[i]): (0, 1), (Wl[i + 1], Wl[i + 1]): (0, -1)}, "C"))
    h_su = Subspace.from_matrices(g, mats, "su(W)") if mats else Subspace(g, [], "su(W)")
    fr = Fraction(-2, n - 1)
    z = g.coords(embed(N, {(0, 0): (0, 1), (1, 1): (0, 1), **{(a, a): (0, fr) for a in W}}, "C"))
    z_prime = g.coords(embed(N, {(0, 0): (0, 1), (1, 1): (0, -1)}, "C"))
    z0 = g.coords(embed(N, {(0, 0): (0, 1), **{(a, a): (0, Fraction(-1, n)) for a in range(1, N)}}, "C"))
    h = Subspace(g, h_su.basis_coords + [z], "h")

    def herm_pair(row, col, sign):
        # X at (row, col) and sign * X* at (col, row), for X = 1 and X = i
        re_ = embed(N, {(row, col): 1, (col, row): sign}, "C")
        im = embed(N, {(row, col): (0, 1), (col, row): (0, -sign)}, "C")
        return g.coords(re_), g.coords(im)

    v, iv = herm_pair(1, 0, 1)
    p_prime = [herm_pair(a, 0, 1) for a in W]
    n_prime = [herm_pair(a, 1, -1) for a in W]

    def paired(pairs, symbol):
        vecs = [u for u, _ in pairs] + [ju for _, ju in pairs]
        k = len(pairs)
        return Subspace(g, vecs, symbol, complex_pairs=tuple((i, i + k) for i in range(k)))

    extra = {
        "Cv": paired([(v, iv)], "Cv"),
        "p'": paired(p_prime, "p'") if p_prime else Subspace(g, [], "p'"),
        "n'": paired(n_prime, "n'") if n_prime else Subspace(g, [], "n'"),
        "Rz'": Subspace(g, [z_prime], "Rz'"),
        "su(W)": h_su,
    }
    # p as a complex space: X -> iX
    p_pairs = [(v, iv)] + p_prime
    extra["p_C"] = paired(p_pairs, "p")
    return _finish(
        f"su1n:{n}",
        f"SU(1,{n})/U({n - 1})",
        g,
        h,
        {"v": v, "iv": iv, "z": z, "z'": z_prime, "z0": z0},
        extra,
        claims={"n^H": 1, "p^H": 2},
        notes=[
            "z' taken as i*diag(1,-1,0) so that it lies in su(1,n)",
            "n' realized as w(x)e1* - e1(x)w*, the copy of W inside k",
        ],
    )


# --------------------------------------------------------------------------
# Sp(1, n) / Sp(1) x Sp(n-1)


def sp1n_case(n: int) -> Case:
    if n < 2:
        raise LieAlgebraError("sp(1,n) case needs n >= 2")
    N = n + 1
    g = sp(1, n)
    W = range(2, N)
    mats = []
    for u in range(1, 4):
        q = tuple(1 if i == u else 0 for i in range(4))
        mats.append(embed(N, {(0, 0): q, (1, 1): q}, "H"))
        for a in W:
            mats.append(embed(N, {(a, a): q}, "H"))
    for a in W:
        for b in W:
            if a < b:
                for u in range(4):
                    q = tuple(1 if i == u else 0 for i in range(4))
                    qbar = (q[0], -q[1], -q[2], -q[3])
                    mats.append(embed(N, {(a, b): q, (b, a): tuple(-x for x in qbar)}, "H"))
    h = Subspace.from_matrices(g, mats, "h")
    v = g.coords(embed(N, {(1, 0): 1, (0, 1): 1}, "H"))
    Hv = []
    for u in range(4):
        q = tuple(1 if i == u else 0 for i in range(4))
        qbar = (q[0], -q[1], -q[2], -q[3])
        Hv.append(g.coords(embed(N, {(1, 0): q, (0, 1): qbar}, "H")))
    extra = {
        "Rv": Subspace(g, [v], "Rv"),
        "Hv": Subspace(g, Hv, "Hv"),
        "ImH v": Subspace(g, Hv[1:], "ImH v"),
    }
    return _finish(
        f"sp1n:{n}",
        f"Sp(1,{n})/Sp(1)xSp({n - 1})",
        g,
        h,
        {"v": v},
        extra,
        claims={"m^H": 1},
        notes=["quaternionic case: the construction is the Sp(1,n) one, not SU(1,n)"],
    )


# --------------------------------------------------------------------------

_SECTION61 = {
    "a": (1, 0, {"m^H": 1, "p^H": 1}),
    "b+": (2, 0, {"n^H": 1, "p^H": 1}),
    "b-": (2, 1, {"n^H": 1, "p^H": 1}),
    "c+": (3, 0, {"m^H": 1, "p^H": 1}),
    "c-": (3, 1, {}),
}


def build_case(case_id: str) -> Case:
    kind, _, args = case_id.partition(":")
    try:
        nums = [int(x) for x in args.split(",")] if args else []
    except ValueError as exc:
        raise LieAlgebraError(f"bad case id {case_id!r}") from exc
    if kind == "sl" and len(nums) == 2:
        return sl_case(*nums)
    if kind == "so1n" and len(nums) == 1:
        return so1n_case(*nums)
    if kind == "su1n" and len(nums) == 1:
        return su1n_case(*nums)
    if kind == "sp1n" and len(nums) == 1:
        return sp1n_case(*nums)
    if kind == "sopq" and len(nums) == 4:
        return sopq_case(*nums)
    if kind in _SECTION61 and len(nums) == 2:
        r, k, claims = _SECTION61[kind]
        notes = []
        if kind == "c-":
            notes.append("decomposition not spelled out; dimensions only")
        if kind.startswith("b"):
            notes.append("U'', W'' read as the orthogonal complements of span(e1,e2), span(f1,f2)")
        return sopq_case(nums[0], nums[1], r, k, case_id=case_id, claims=claims, notes=notes)
    raise LieAlgebraError(f"unknown case id {case_id!r}")


ACCEPTANCE_CASES = (
    [f"sl:{p},{n - p}" for n in range(2, 6) for p in range(1, n)]
    + [f"so1n:{n}" for n in range(3, 7)]
    + ["su1n:2", "su1n:3", "sp1n:2", "a:2,3", "b+:2,2", "b-:2,2", "c+:3,3"]
)


# --------------------------------------------------------------------------
# spectrum of a central element


def _restricted(z: Vec, w: Subspace) -> list[list[Fraction]]:
    return w.operator(z)


def central_action_spectrum(z: Vec, w: Subspace) -> list[tuple[Fraction, int]]:
    """Eigenvalues of ``ad z`` on ``w`` as ``(c, multiplicity)`` meaning ``c*i``.

    With ``w.complex_pairs`` set, ``ad z`` must commute with the complex
    structure and the spectrum is that of the complex-linear map (dimension
    ``dim w / 2``); otherwise the real map is complexified. The restriction
    must be semisimple with purely imaginary rational spectrum.
    """
    if not w.dim:
        return []
    a = _restricted(z, w)
    if w.complex_pairs is not None:
        pairs = w.complex_pairs
        k = len(pairs)
        if 2 * k != w.dim:
            raise LieAlgebraError("complex pairs must cover the subspace")
        # J on coordinates: u_j -> Ju_j, Ju_j -> -u_j
        jmat = linalg.zeros(w.dim, w.dim)
        for u, ju in pairs:
            jmat[ju][u] = Fraction(1)
            jmat[u][ju] = Fraction(-1)
        if linalg.matmul(a, jmat) != linalg.matmul(jmat, a):
            raise LieAlgebraError("ad z is not complex linear on w")
        m = sympy.zeros(k, k)
        for col, (u, _) in enumerate(pairs):
            for row, (u2, ju2) in enumerate(pairs):
                m[row, col] = sympy.Rational(a[u2][u]) + sympy.I * sympy.Rational(a[ju2][u])
    else:
        m = sympy.Matrix([[sympy.Rational(x) for x in row] for row in a])
    if not m.is_diagonalizable():
        raise LieAlgebraError("ad z is not semisimple on w")
    out = []
    for ev, mult in m.eigenvals().items():
        re_, im = sympy.re(ev), sympy.im(ev)
        if re_ != 0 or not im.is_rational:
            raise LieAlgebraError(f"eigenvalue {ev} is not a rational multiple of i")
        out.append((Fraction(int(im.p), int(im.q)), int(mult)))
    return sorted(out)


__all__ = [
    "ACCEPTANCE_CASES",
    "Case",
    "build_case",
    "central_action_spectrum",
    "sl_case",
    "so1n_case",
    "sopq_case",
    "sp1n_case",
    "su1n_case",
]
