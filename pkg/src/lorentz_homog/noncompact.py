"""Homogeneous Lorentzian manifolds ``G/H`` of noncompact simple groups.

Every record sits over a Riemannian symmetric space ``S = G/K`` with
``H`` inside ``K``; ``m = n + p`` where ``n`` completes ``h`` in ``k``.
The class tags follow the fixed vectors: class I when ``n^H != 0``, class II
when ``p^H != 0``.

Where a matrix realization exists the fixed-subspace dimensions are
computed exactly (``provenance = "computed"``); the exceptional families
carry their module data as given (``provenance = "paper"``), and schematic
families are marked ``"template"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache

from .matrixlie import cases as _cases
from .matrixlie.algebra import Subspace, centralizer, killing_complement
from .orbits import Block, MetricModel, enumerate_compact
from .rootsys import TRIVIAL, SemisimpleType, SimpleType, compact_name, semisimple

PAPER_MAX_DIM = 11


class NoncompactError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetricSpaceRecord:
    g_name: str
    k: SemisimpleType
    k_center: int
    k_name: str
    dim_g: int
    dim_S: int
    p_module: str
    rank_one: bool
    dual_name: str
    compact: bool = False

    @property
    def dim_k(self) -> int:
        return self.k.dimension + self.k_center

    @property
    def name(self) -> str:
        return f"{self.g_name}/{self.k_name}"


@dataclass(frozen=True)
class HomogeneousSpaceRecord:
    g_name: str
    h_name: str
    dim_g: int
    dim_h: int
    dim_d: int
    class_tags: tuple[str, ...]
    dim_nH: int
    dim_pH: int
    fiber: str
    fiber_dim: int
    base: SymmetricSpaceRecord
    metric_blocks: MetricModel
    module_blocks: tuple[int, ...] = ()
    provenance: str = "computed"
    case_id: str = ""
    dual_name: str = ""
    compact: bool = False
    flags: tuple[str, ...] = field(default=())

    @property
    def name(self) -> str:
        return self.g_name if self.h_name == "{e}" else f"{self.g_name}/{self.h_name}"


def classify(rec: HomogeneousSpaceRecord | tuple[int, int]) -> tuple[str, ...]:
    """Class tags from ``(dim n^H, dim p^H)``; empty means not admissible."""
    if isinstance(rec, tuple):
        n_h, p_h = rec
    else:
        n_h, p_h = rec.dim_nH, rec.dim_pH
    if n_h is None or p_h is None:
        raise NoncompactError("fixed-subspace dimensions are missing")
    return tuple(t for t, d in (("I", n_h), ("II", p_h)) if d > 0)


def _check(rec: HomogeneousSpaceRecord) -> HomogeneousSpaceRecord:
    if rec.dim_d != rec.dim_g - rec.dim_h:
        raise NoncompactError(f"{rec.name}: dim_d != dim g - dim h")
    if rec.fiber_dim != rec.dim_d - rec.base.dim_S:
        raise NoncompactError(f"{rec.name}: fiber dimension mismatch")
    if rec.base.dim_S != rec.base.dim_g - rec.base.dim_k:
        raise NoncompactError(f"{rec.base.name}: dim_S != dim g - dim k")
    if rec.metric_blocks.dimension != rec.dim_d:
        raise NoncompactError(f"{rec.name}: metric blocks do not cover m")
    return rec


def duality(rec: HomogeneousSpaceRecord) -> HomogeneousSpaceRecord:
    """Swap a record with its compact dual (same ``h``, same modules)."""
    if not rec.dual_name:
        raise NoncompactError(f"no dual registered for {rec.g_name}")
    b = rec.base
    base = replace(b, g_name=b.dual_name, dual_name=b.g_name, compact=not b.compact)
    return replace(rec, g_name=rec.dual_name, dual_name=rec.g_name, compact=not rec.compact, base=base)


# --------------------------------------------------------------------------
# helpers


def _so_type(n: int) -> tuple[SemisimpleType, int]:
    """Semisimple part and center rank of so(n)."""
    if n <= 1:
        return TRIVIAL, 0
    if n == 2:
        return TRIVIAL, 1
    ss = semisimple("B", (n - 1) // 2) if n % 2 else semisimple("D", n // 2)
    return ss, 0


def _so_name(n: int) -> str:
    return f"SO_{n}" if n >= 2 else ""


def _join(*names: str) -> str:
    names = tuple(x for x in names if x)
    return " x ".join(names) if names else "{e}"


def _sphere(k: int) -> str:
    return f"S^{k}"


def _dim_so(n: int) -> int:
    return n * (n - 1) // 2


def _fixed_dims(case_id: str) -> tuple[int, int]:
    c = _cases.build_case(case_id)
    d = c.fixed_dims()
    return d["n^H"], d["p^H"]


# --------------------------------------------------------------------------
# minimality witness


@dataclass(frozen=True)
class MinimalityWitness:
    """A larger admissible isotropy algebra found from an invariant vector."""

    vector: str
    source: str
    dim_h: int
    dim_larger: int


def minimality_witness(case_id: str) -> MinimalityWitness | None:
    """Look for ``h' > h`` inside ``k`` with ``G/H'`` still admissible.

    For ``t`` in ``n^H`` the algebra ``Z_k(t)`` minus ``t`` (Killing
    orthogonally) keeps ``t`` as an invariant vector of ``n``; for ``t`` in
    ``p^H`` the stabilizer ``k_t`` keeps ``t`` invariant in ``p``. Both
    contain ``h``; a strictly larger one shows ``G/H`` is not minimal.
    Candidates are the basis vectors of ``n^H`` and ``p^H`` and the sum of
    the ``p^H`` basis.
    """
    c = _cases.build_case(case_id)
    g, k = c.g, c.subspaces["k"]
    nH, pH = c.fixed("n"), c.fixed("p")
    cands = [("n^H", t) for t in nH.basis_coords] + [("p^H", t) for t in pH.basis_coords]
    if pH.dim > 1:
        cands.append(("p^H", [sum(col) for col in zip(*pH.basis_coords)]))
    for i, (src, t) in enumerate(cands):
        z = centralizer(t, k)
        if src == "n^H":
            z = killing_complement(g, Subspace(g, [t]), within=z)
        if z.dim > c.h.dim:
            return MinimalityWitness(f"{src}[{i}]", src, c.h.dim, z.dim)
    return None


# --------------------------------------------------------------------------
# SL_n(R)


_REALIZE_SL_MAX = 5


def _sl_base(n: int) -> SymmetricSpaceRecord:
    k, zc = _so_type(n)
    return SymmetricSpaceRecord(
        g_name=f"SL_{n}(R)",
        k=k,
        k_center=zc,
        k_name=f"SO_{n}",
        dim_g=n * n - 1,
        dim_S=n * (n + 1) // 2 - 1,
        p_module=f"S^2_0(R^{n})",
        rank_one=n == 2,
        dual_name=f"SU_{n}",
    )


def sl_family(p: int, q: int) -> HomogeneousSpaceRecord:
    """``M_{p,q} = SL_{p+q}(R) / SO_p x SO_q``."""
    if p < 1 or q < 1:
        raise NoncompactError("sl_family needs p, q >= 1")
    n = p + q
    dim_h = _dim_so(p) + _dim_so(q)
    s2u, s2w = p * (p + 1) // 2 - 1, q * (q + 1) // 2 - 1
    module = (1, 2 * p * q, s2u, s2w)
    blocks = [Block(2 * p * q, "(U(x)W)(x)R^2", 2, 3)]
    if s2u:
        blocks.append(Block(s2u, "S^2_0 U"))
    if s2w:
        blocks.append(Block(s2w, "S^2_0 W"))
    model = MetricModel(1, tuple(blocks), 1 + sum(b.params for b in blocks))
    if n <= _REALIZE_SL_MAX:
        n_h, p_h = _fixed_dims(f"sl:{p},{q}")
        prov, cid = "computed", f"sl:{p},{q}"
    else:
        n_h, p_h = 0, 1
        prov, cid = "paper", ""
    fiber = _sphere(n - 1) if min(p, q) == 1 else f"Gr_{min(p, q)}(R^{n})"
    rec = HomogeneousSpaceRecord(
        g_name=f"SL_{n}(R)",
        h_name=_join(_so_name(max(p, q)), _so_name(min(p, q))),
        dim_g=n * n - 1,
        dim_h=dim_h,
        dim_d=n * n - 1 - dim_h,
        class_tags=classify((n_h, p_h)),
        dim_nH=n_h,
        dim_pH=p_h,
        fiber=fiber,
        fiber_dim=p * q,
        base=_sl_base(n),
        metric_blocks=model,
        module_blocks=module,
        provenance=prov,
        case_id=cid,
        dual_name=f"SU_{n}",
    )
    return _check(rec)


# --------------------------------------------------------------------------
# real rank one

_REALIZE_MAX = {"RH": 7, "CH": 4, "HH": 3}


def rank_one_family(kind: str, n: int) -> HomogeneousSpaceRecord:
    """Minimal class II manifold over the rank one space ``kind H^n``.

    ``kind`` is one of ``RH``, ``CH``, ``HH``, ``OH`` (``OH`` needs ``n = 2``).
    """
    kind = kind.upper()
    if kind == "OH":
        if n != 2:
            raise NoncompactError("OH^n exists only for n = 2")
        return _f4_record()
    if kind not in ("RH", "CH", "HH") or n < 2:
        raise NoncompactError(f"unsupported rank one family ({kind}, {n})")
    realize = n <= _REALIZE_MAX[kind]
    if kind == "RH":
        dim_g, dim_h = _dim_so(n + 1), _dim_so(n - 1)
        k, zc = _so_type(n)
        base = SymmetricSpaceRecord(f"SO_{{1,{n}}}", k, zc, f"SO_{n}", dim_g, n, f"R^{n}", True, f"SO_{n + 1}")
        model = MetricModel(1, (Block(2 * (n - 1), "W(x)R^2", 2, 3),), 4)
        module = (1, n - 1, n - 1)
        g_name, h_name, cid, fiber = f"SO_{{1,{n}}}", _join(_so_name(n - 1)), f"so1n:{n}", _sphere(n - 1)
        paper_dims = (0, 1)
    elif kind == "CH":
        dim_g, dim_h = (n + 1) ** 2 - 1, (n - 1) ** 2
        base = SymmetricSpaceRecord(
            f"SU_{{1,{n}}}", semisimple("A", n - 1), 1, f"U_{n}", dim_g, 2 * n, f"C^{n}", True, f"SU_{n + 1}"
        )
        blocks = (
            Block(1, "Rz'"),
            Block(2 * (n - 1), "n'"),
            Block(1, "R(iv)"),
            Block(2 * (n - 1), "p'"),
        )
        model = MetricModel(1, blocks, None, note="parameter count not asserted")
        module = (1, 2 * (n - 1), 2, 2 * (n - 1))
        g_name, h_name, cid, fiber = f"SU_{{1,{n}}}", f"U_{n - 1}", f"su1n:{n}", _sphere(2 * n - 1)
        paper_dims = (1, 2)
    else:
        dim_g, dim_h = (n + 1) * (2 * n + 3), 3 + (n - 1) * (2 * n - 1)
        base = SymmetricSpaceRecord(
            f"Sp_{{1,{n}}}",
            semisimple("A", 1) * semisimple("C", n, "long" if n == 1 else ""),
            0,
            f"Sp_1 x Sp_{n}",
            dim_g,
            4 * n,
            f"H^{n}",
            True,
            f"Sp_{n + 1}",
        )
        blocks = (Block(6, "sp_1(x)R^2", 2, 3), Block(8 * (n - 1), "H^{n-1}(x)R^2", 2, 3))
        model = MetricModel(1, blocks, 7)
        module = (1, 6, 8 * (n - 1))
        g_name, h_name, cid, fiber = f"Sp_{{1,{n}}}", f"Sp_1 x Sp_{n - 1}", f"sp1n:{n}", _sphere(4 * n - 1)
        paper_dims = (0, 1)
    if realize:
        n_h, p_h = _fixed_dims(cid)
        prov = "computed"
    else:
        (n_h, p_h), prov, cid = paper_dims, "paper", ""
    rec = HomogeneousSpaceRecord(
        g_name=g_name,
        h_name=h_name,
        dim_g=dim_g,
        dim_h=dim_h,
        dim_d=dim_g - dim_h,
        class_tags=classify((n_h, p_h)),
        dim_nH=n_h,
        dim_pH=p_h,
        fiber=fiber,
        fiber_dim=dim_g - dim_h - base.dim_S,
        base=base,
        metric_blocks=model,
        module_blocks=module,
        provenance=prov,
        case_id=cid,
        dual_name=base.dual_name,
    )
    return _check(rec)


def _f4_record() -> HomogeneousSpaceRecord:
    # p = R v + m1^8 + m2^7 under Spin_7; n = T(S^15) = 8 + 7 again
    base = SymmetricSpaceRecord("F_4(-20)", semisimple("B", 4), 0, "Spin_9", 52, 16, "R^16 (spinor)", True, "F_4")
    blocks = (Block(16, "m1^8(x)R^2", 2, 3), Block(14, "m2^7(x)R^2", 2, 3))
    model = MetricModel(1, blocks, 7, note="isotropy pairs n and p summands; three-parameter formula covers p only")
    rec = HomogeneousSpaceRecord(
        g_name="F_4(-20)",
        h_name="Spin_7",
        dim_g=52,
        dim_h=21,
        dim_d=31,
        class_tags=("II",),
        dim_nH=0,
        dim_pH=1,
        fiber=_sphere(15),
        fiber_dim=15,
        base=base,
        metric_blocks=model,
        module_blocks=(1, 8, 7),
        provenance="paper",
        dual_name="F_4",
    )
    return _check(rec)


def g2_record() -> HomogeneousSpaceRecord:
    """``G_2 / SU_2^diag`` with ``m = R^2 + 3 su_2`` and ``m^H = C Id``."""
    base = SymmetricSpaceRecord(
        "G_2(2)", semisimple("A", 1) * semisimple("A", 1), 0, "SU_2 x SU_2", 14, 8, "C^2(x)C^2", False, "G_2"
    )
    blocks = (Block(1, "C Id (spacelike part)"), Block(9, "3 su_2", 3, 6))
    model = MetricModel(1, blocks, None, note="parameter count not asserted")
    rec = HomogeneousSpaceRecord(
        g_name="G_2(2)",
        h_name="SU_2^diag",
        dim_g=14,
        dim_h=3,
        dim_d=11,
        class_tags=("II",),
        dim_nH=0,
        dim_pH=2,
        fiber=_sphere(3),
        fiber_dim=3,
        base=base,
        metric_blocks=model,
        module_blocks=(2, 3, 3, 3),
        provenance="paper",
        dual_name="G_2",
    )
    return _check(rec)


# --------------------------------------------------------------------------
# SO(p, q), p, q >= 2


def _sopq_dim_h(p: int, q: int, r: int) -> int:
    return _dim_so(r) + _dim_so(p - r) + _dim_so(q - r)


def so_pq_diagonal_stabilizer(p: int, q: int, r: int, k: int) -> HomogeneousSpaceRecord:
    """``SO(p,q) / K_v`` for ``v = sum_{i<=r} eps_i e_i (x) f_i`` with ``D_k`` signs."""
    if not (1 <= r <= min(p, q) and 0 <= k <= r):
        raise NoncompactError("need 1 <= r <= min(p, q) and 0 <= k <= r")
    cid = f"sopq:{p},{q},{r},{k}"
    c = _cases.build_case(cid)
    dims = c.fixed_dims()
    n_h, p_h = dims["n^H"], dims["p^H"]
    dim_g = _dim_so(p + q)
    dim_h = _sopq_dim_h(p, q, r)
    if c.h.dim != dim_h:
        raise NoncompactError(f"{cid}: stabilizer dimension {c.h.dim} != {dim_h}")
    kp, zp = _so_type(p)
    kq, zq = _so_type(q)
    base = SymmetricSpaceRecord(
        f"SO_{{{p},{q}}}", kp * kq, zp + zq, _join(_so_name(p), _so_name(q)), dim_g, p * q, f"R^{p}(x)R^{q}", False, f"SO_{p + q}"
    )
    if r == 1:
        h_name = _join(_so_name(q - 1), _so_name(p - 1))
        if h_name != "{e}" and p - 1 < 2:
            h_name = "{e} x " + h_name
    else:
        diag = f"SO_{r}^{'diag' if k in (0, r) else 'tw'}"
        h_name = _join(diag, _so_name(p - r), _so_name(q - r))
    dim_d = dim_g - dim_h
    rest = dim_d - 1
    model = MetricModel(1, (Block(rest, "m minus R v"),), None, note="parameter count not asserted")
    rec = HomogeneousSpaceRecord(
        g_name=f"SO_{{{p},{q}}}",
        h_name=h_name,
        dim_g=dim_g,
        dim_h=dim_h,
        dim_d=dim_d,
        class_tags=classify((n_h, p_h)),
        dim_nH=n_h,
        dim_pH=p_h,
        fiber=f"({base.k_name})/{h_name}",
        fiber_dim=dim_d - p * q,
        base=base,
        metric_blocks=model,
        module_blocks=(),
        provenance="computed",
        case_id=cid,
        dual_name=f"SO_{p + q}",
        flags=("decomposition not spelled out; dimensions only",) if (p, q, r, k) == (3, 3, 3, 1) else (),
    )
    return _check(rec)


# --------------------------------------------------------------------------
# SU(1, n) class I families


def su_class_I_records(n: int) -> list[HomogeneousSpaceRecord]:
    """Class I shapes over ``CH^n``: a) ``SU_n``; b) ``T^1_a . Z(a)``; c) ``T^1_0 . H'``.

    Family b is instantiated for regular ``a`` (``Z(a)`` a maximal torus);
    family c runs over the maximal admissible ``H'`` of compact ``SU_n``.
    """
    if n < 2:
        raise NoncompactError("su_class_I_records needs n >= 2")
    dim_g = (n + 1) ** 2 - 1
    base = SymmetricSpaceRecord(
        f"SU_{{1,{n}}}", semisimple("A", n - 1), 1, f"U_{n}", dim_g, 2 * n, f"C^{n}", True, f"SU_{n + 1}"
    )

    def make(h_name, dim_h, tag, note):
        d = dim_g - dim_h
        model = MetricModel(1, (Block(d - 1, "m minus R t"),), None, note="parameter count not asserted")
        return _check(
            HomogeneousSpaceRecord(
                g_name=f"SU_{{1,{n}}}",
                h_name=h_name,
                dim_g=dim_g,
                dim_h=dim_h,
                dim_d=d,
                class_tags=("I",),
                dim_nH=1,
                dim_pH=0,
                fiber=f"U_{n}/{h_name}",
                fiber_dim=d - 2 * n,
                base=base,
                metric_blocks=model,
                provenance="template",
                dual_name=f"SU_{n + 1}",
                flags=(tag,) + ((note,) if note else ()),
            )
        )

    out = [make(f"SU_{n}", n * n - 1, "family a", "")]
    out.append(make(f"T^1_a . T^{n - 1}", n, "family b", "a regular; Z(a) a maximal torus"))
    for rec in enumerate_compact(SimpleType("A", n - 1)):
        hp = rec.stabilizer_semisimple
        out.append(make(f"T^1_0 . {compact_name(hp)}", 1 + hp.dimension, "family c", f"H' from node {rec.deleted_node}"))
    return out


# --------------------------------------------------------------------------
# infinite center


def infinite_center_record(g_name: str, dim_g: int, k: SemisimpleType, k_name: str, dim_S: int) -> HomogeneousSpaceRecord:
    """``M = G/K`` over a Hermitian symmetric ``G/K.R`` when ``G`` has infinite center.

    Metrics are ``-lambda theta^2 + g_p``: one timelike scale plus the
    symmetric metric on ``p``.
    """
    dim_h = k.dimension
    if dim_g - dim_h != dim_S + 1:
        raise NoncompactError("K must have a one-dimensional center complement")
    base = SymmetricSpaceRecord(g_name, k, 1, f"{k_name}.R", dim_g, dim_S, f"p (dim {dim_S})", False, "")
    model = MetricModel(1, (Block(dim_S, "p"),), 2)
    return _check(
        HomogeneousSpaceRecord(
            g_name=g_name,
            h_name=k_name,
            dim_g=dim_g,
            dim_h=dim_h,
            dim_d=dim_S + 1,
            class_tags=("I",),
            dim_nH=1,
            dim_pH=0,
            fiber="R",
            fiber_dim=1,
            base=base,
            metric_blocks=model,
            provenance="template",
            flags=("infinite center",),
        )
    )


# --------------------------------------------------------------------------
# products


@dataclass(frozen=True)
class GroupFactor:
    """What the product theorem needs to know about one factor ``G_i``."""

    name: str
    dim_g: int
    h_name: str
    dim_h: int  # a maximal admissible subgroup
    k_name: str
    dim_k: int  # a maximal compact subgroup
    z_name: str = ""
    dim_z: int = 0  # centralizer Z_k(t) of a torus element t


@dataclass(frozen=True)
class ProductShape:
    kind: str
    description: str
    dim_h: int
    dim_d: int
    complement: str


def product_reduction(f1: GroupFactor, f2: GroupFactor) -> list[ProductShape]:
    """Minimal admissible shapes for ``G_1 x G_2``.

    Consistent ``H = H_1 x H_2``: one factor maximal admissible, the other
    maximal compact (both orders). Otherwise ``h = h_1 + h_2 + R(t_1 + t_2)``
    with ``h_i + R t_i = Z_{k_i}(t_i)`` and complement ``m_1 + m_2 + R(t_1 - t_2)``.
    """
    dim_g = f1.dim_g + f2.dim_g
    out = []
    for a, b in ((f1, f2), (f2, f1)):
        dh = a.dim_h + b.dim_k
        out.append(ProductShape("product", f"{a.name}/{a.h_name} x {b.name}/{b.k_name}", dh, dim_g - dh, "m_1 + m_2"))
    if f1.dim_z and f2.dim_z:
        dh = (f1.dim_z - 1) + (f2.dim_z - 1) + 1
        out.append(
            ProductShape(
                "twisted",
                f"({f1.name} x {f2.name})/(h_1 + h_2 + R(t_1+t_2)), h_i + R t_i = {f1.z_name}, {f2.z_name}",
                dh,
                dim_g - dh,
                "m_1 + m_2 + R(t_1 - t_2)",
            )
        )
    return out


# --------------------------------------------------------------------------
# local isomorphisms


@dataclass(frozen=True)
class SymEntry:
    g_name: str
    k_name: str
    dim_g: int
    dim_k: int

    @property
    def dim_S(self) -> int:
        return self.dim_g - self.dim_k


# each tuple lists locally isomorphic symmetric spaces
LOCAL_ISOMORPHISMS: tuple[tuple[SymEntry, ...], ...] = (
    (
        SymEntry("SU_{1,1}", "U_1", 3, 1),
        SymEntry("SO*_4", "U_2", 6, 4),
        SymEntry("Sp_1(R)", "U_1", 3, 1),
        SymEntry("SL_2(R)", "SO_2", 3, 1),
        SymEntry("SO_{1,2}", "SO_2", 3, 1),
    ),
    (SymEntry("Sp_{1,1}", "Sp_1 x Sp_1", 10, 6), SymEntry("SO_{1,4}", "SO_4", 10, 6)),
    (SymEntry("SO*_6", "U_3", 15, 9), SymEntry("SU_{1,3}", "U_3", 15, 9)),
    (SymEntry("Sp_2(R)", "U_2", 10, 4), SymEntry("SO_{2,3}", "SO_2 x SO_3", 10, 4)),
)

# algebra-level isomorphisms used for record deduplication (SO*_4 is not simple)
_ALGEBRA_ISO = {
    "SO_{1,2}": "SL_2(R)",
    "SU_{1,1}": "SL_2(R)",
    "Sp_1(R)": "SL_2(R)",
    "Sp_{1,1}": "SO_{1,4}",
    "SO*_6": "SU_{1,3}",
    "Sp_2(R)": "SO_{2,3}",
    "SO_{3,3}": "SL_4(R)",
    "SO_{2,4}": "SU_{2,2}",
}


def local_iso_consistent() -> list[str]:
    """Problems in the local-isomorphism table (empty when consistent)."""
    errs = []
    for group in LOCAL_ISOMORPHISMS:
        dims = {e.dim_S for e in group}
        if len(dims) != 1:
            errs.append(f"{[e.g_name for e in group]}: symmetric dimensions {sorted(dims)} differ")
    return errs


def canonical_algebra(g_name: str) -> str:
    return _ALGEBRA_ISO.get(g_name, g_name)


def _dedup(records: list[HomogeneousSpaceRecord]) -> list[HomogeneousSpaceRecord]:
    seen: dict[tuple, HomogeneousSpaceRecord] = {}
    for rec in records:
        key = (canonical_algebra(rec.g_name), rec.dim_h, rec.dim_d, rec.base.dim_S)
        seen.setdefault(key, rec)
    return list(seen.values())


# --------------------------------------------------------------------------
# class II enumeration


def _sl_candidates(max_dim: int):
    n = 2
    while (n * n - 1) - _dim_so(n - 1) <= max_dim:
        for p in range(1, n // 2 + 1):
            q = n - p
            if n * n - 1 - _dim_so(p) - _dim_so(q) <= max_dim:
                yield sl_family(p, q)
        n += 1


def _rank_one_candidates(max_dim: int):
    for kind, d in (("RH", lambda n: 2 * n - 1), ("CH", lambda n: 4 * n - 1), ("HH", lambda n: 8 * n - 1)):
        n = 2
        while d(n) <= max_dim:
            yield rank_one_family(kind, n)
            n += 1
    if 31 <= max_dim:
        yield rank_one_family("OH", 2)


@lru_cache(maxsize=None)
def _sopq_minimal(p: int, q: int, r: int, k: int) -> bool:
    return minimality_witness(f"sopq:{p},{q},{r},{k}") is None


def _sopq_candidates(max_dim: int):
    p = 2
    while p * p + 1 <= max_dim:
        q = p
        while p * q + 1 <= max_dim:
            if (p, q) not in ((2, 2),) and canonical_algebra(f"SO_{{{p},{q}}}") == f"SO_{{{p},{q}}}":
                for r in range(1, p + 1):
                    if _dim_so(p + q) - _sopq_dim_h(p, q, r) > max_dim:
                        continue
                    for k in range(0, r // 2 + 1):
                        rec = so_pq_diagonal_stabilizer(p, q, r, k)
                        if rec.dim_pH and _sopq_minimal(p, q, r, k):
                            yield rec
            q += 1
        p += 1


def enumerate_class_II(max_dim: int) -> list[HomogeneousSpaceRecord]:
    """Minimal admissible class II records with ``dim_d <= max_dim``.

    Ordered by ``(dim_d, g_name)``; records past the covered range
    (``dim_d > 11``) are flagged ``"beyond paper"``.
    """
    cands: list[HomogeneousSpaceRecord] = []
    cands += _sl_candidates(max_dim)
    cands += _rank_one_candidates(max_dim)
    cands += _sopq_candidates(max_dim)
    if 11 <= max_dim:
        cands.append(g2_record())
    out = []
    for rec in cands:
        if rec.dim_d > max_dim or "II" not in rec.class_tags:
            continue
        if rec.case_id and minimality_witness(rec.case_id) is not None:
            continue
        if rec.dim_d > PAPER_MAX_DIM:
            rec = replace(rec, flags=rec.flags + ("beyond paper",))
        out.append(rec)
    out = _dedup(out)
    return sorted(out, key=lambda r: (r.dim_d, r.g_name, r.h_name))


__all__ = [
    "GroupFactor",
    "HomogeneousSpaceRecord",
    "LOCAL_ISOMORPHISMS",
    "MinimalityWitness",
    "NoncompactError",
    "PAPER_MAX_DIM",
    "ProductShape",
    "SymEntry",
    "SymmetricSpaceRecord",
    "canonical_algebra",
    "classify",
    "duality",
    "enumerate_class_II",
    "g2_record",
    "infinite_center_record",
    "local_iso_consistent",
    "minimality_witness",
    "product_reduction",
    "rank_one_family",
    "sl_family",
    "so_pq_diagonal_stabilizer",
    "su_class_I_records",
]
