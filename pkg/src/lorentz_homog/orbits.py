"""Minimal adjoint orbits of compact simple groups and their T^1-bundles.

For a node ``a`` of the Dynkin diagram, ``H_a`` is the semisimple part of the
centraliser of the fundamental coweight; ``M_a = G/H_a`` fibres over the
minimal orbit ``F_a = G/(H_a . T^1)``. The tangent space of ``F_a`` splits by
the ``a``-coordinate ``k`` of the positive roots into levels
``p_1 + ... + p_m`` with ``m`` the Dynkin mark of ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .rootsys import (
    TRIVIAL,
    Factor,
    RootSystem,
    SemisimpleType,
    SimpleType,
    build_root_system,
    canonical_simple,
    compact_name,
    delete_vertex,
    node_orbit_representatives,
    semisimple,
)


@dataclass(frozen=True)
class Block:
    """One isotypic block of an invariant metric (``dim`` real dimensions)."""

    dim: int
    label: str
    multiplicity: int = 1
    params: int = 1


@dataclass(frozen=True)
class MetricModel:
    """Invariant Lorentzian metrics ``-lambda theta^2 + sum of block metrics``.

    ``parameter_count`` is ``None`` when no count is asserted (sphere-bundle
    cases, where extra equivalences between isotropy summands appear).
    """

    timelike_block: int
    riemannian_blocks: tuple[Block, ...]
    parameter_count: int | None
    note: str = ""

    @property
    def dimension(self) -> int:
        return self.timelike_block + sum(b.dim for b in self.riemannian_blocks)

    def gram(self, lam: Fraction = Fraction(1), scales=None) -> list[list[Fraction]]:
        """Diagonal Gram matrix of the model in a block-adapted basis."""
        scales = list(scales) if scales is not None else [Fraction(1)] * len(self.riemannian_blocks)
        diag = [-Fraction(lam)] * self.timelike_block
        for b, s in zip(self.riemannian_blocks, scales):
            diag += [Fraction(s)] * b.dim
        n = len(diag)
        return [[diag[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class MinimalOrbitRecord:
    group: SimpleType
    deleted_node: int
    stabilizer_semisimple: SemisimpleType
    mark: int
    dim_M: int
    dim_F: int
    levels: tuple[int, ...]
    exceptional: tuple[str, ...] = field(default=())

    @property
    def stabilizer_name(self) -> str:
        return compact_name(self.stabilizer_semisimple, spin=self.group.family in "EFG")


def level_grading(rs: RootSystem, node: int) -> tuple[int, ...]:
    """Real dimensions of the levels ``p_k``, ``k = 1..m(node)``."""
    if not 1 <= node <= rs.rank:
        raise ValueError(f"node {node} out of range")
    counts: dict[int, int] = {}
    for beta in rs.positive_roots:
        c = beta[node - 1]
        if c:
            counts[c] = counts.get(c, 0) + 1
    top = max(counts)
    return tuple(2 * counts.get(k, 0) for k in range(1, top + 1))


# --------------------------------------------------------------------------
# Sphere bundles over compact rank-one symmetric spaces


@dataclass(frozen=True)
class SphereBundlePattern:
    """One entry of the sphere-bundle exception list, instantiated per rank."""

    key: str
    display: str
    anchor: str

    def instances(self, max_rank: int = 8) -> list[tuple[SimpleType, SemisimpleType, str]]:
        return list(_PATTERN_INSTANCES[self.key](max_rank))


def _so(n: int, tag: str = "") -> SemisimpleType:
    return semisimple("B", (n - 1) // 2, tag) if n % 2 else semisimple("D", n // 2, tag)


def _simple_so(n: int) -> SimpleType | None:
    t = _so(n)
    return t.factors[0].type if len(t.factors) == 1 else None


def _s_sn(max_rank):
    # S(S^n) = SO_{n+1}/SO_{n-1}; SO_4 is not simple (see S(S^3) below).
    for n in range(2, 2 * max_rank + 1):
        g = _simple_so(n + 1)
        if g is None or g.rank > max_rank:
            continue
        # SO_3 inside SO_5 is the short-root SU_2
        h = _so(n - 1, "short" if n == 4 else "")
        yield g, h, f"S(S^{n})"


def _spin7_su3(max_rank):
    if max_rank >= 3:
        yield SimpleType("B", 3), semisimple("A", 2, "long"), "Spin_7/SU_3"


def _s_cpn(max_rank):
    for n in range(1, max_rank + 1):
        yield SimpleType("A", n), semisimple("A", n - 1), f"S(CP^{n})"


def _s_hpn(max_rank):
    # printed as Sp_{n+1}/Sp_1 x Sp_{n-2}; rank count forces Sp_{n-1}.
    for n in range(1, max_rank):
        g = canonical_simple("C", n + 1)
        sp1 = semisimple("A", 1, "short")
        for variant, k in (("n-1", n - 1), ("n-2", n - 2)):
            if k < 0:
                continue
            rest = semisimple("C", k, "long" if k == 1 else "")
            yield g, sp1 * rest, f"S(HP^{n}) [{variant}]"


def _s_op2(max_rank):
    if max_rank >= 4:
        yield SimpleType("F", 4), semisimple("B", 3), "S(OP^2)"


_PATTERN_INSTANCES = {
    "S(S^n)": _s_sn,
    "Spin7/SU3": _spin7_su3,
    "S(CP^n)": _s_cpn,
    "S(HP^n)": _s_hpn,
    "S(OP^2)": _s_op2,
}

SPHERE_BUNDLE_PATTERNS = (
    SphereBundlePattern("S(S^n)", "S(S^n) = SO_{n+1}/SO_{n-1}", "S(S^n) = SO_{n+1}/SO_{n-1}"),
    SphereBundlePattern("Spin7/SU3", "Spin_7/SU_3 = S(S^7) = S^7 x S^6", "Spin_7/SU_3 = S(S^7)= S^7 \\times S^6"),
    SphereBundlePattern("S(CP^n)", "S(CP^n) = SU_{n+1}/SU_n", "S(\\bC P^n) = SU_{n+1}/ SU_n"),
    SphereBundlePattern("S(HP^n)", "S(HP^n) = Sp_{n+1}/Sp_1 x Sp_{n-2}", "S(\\bH^n)= Sp_{n+1}/Sp_1 \\times Sp_{n-2}"),
    SphereBundlePattern("S(OP^2)", "S(OP^2) = F_4/Spin_7", "S(\\bO P^2)= F_4/Spin_7"),
)

# Product-group entry, handled by noncompact.product_reduction rather than here.
PRODUCT_SPHERE_BUNDLE = "S(S^3) = SU_2 x SU_2/T^1 = S^3 x S^2"


def _same_stabilizer(pattern: SemisimpleType, computed: SemisimpleType) -> bool:
    # tags are compared only where the pattern pins them down
    if not pattern.tagged:
        return pattern == computed.untagged()
    if len(pattern.factors) != len(computed.factors):
        return False
    left = list(computed.factors)
    for f in sorted(pattern.factors, key=lambda f: not f.tag):
        for i, g in enumerate(left):
            if f.type == g.type and (not f.tag or f.tag == g.tag):
                del left[i]
                break
        else:
            return False
    return True


def exception_tags(group: SimpleType, stabilizer: SemisimpleType) -> tuple[str, ...]:
    tags = []
    for pat in SPHERE_BUNDLE_PATTERNS:
        for g, h, label in pat.instances(group.rank):
            if g == group and _same_stabilizer(h, stabilizer):
                tags.append(label)
    return tuple(tags)


# --------------------------------------------------------------------------


def minimal_orbit(group: SimpleType, node: int) -> MinimalOrbitRecord:
    rs = build_root_system(group)
    h = delete_vertex(group, node)
    levels = level_grading(rs, node)
    dim_m = group.dimension - h.dimension
    return MinimalOrbitRecord(
        group=group,
        deleted_node=node,
        stabilizer_semisimple=h,
        mark=rs.marks[node - 1],
        dim_M=dim_m,
        dim_F=dim_m - 1,
        levels=levels,
        exceptional=exception_tags(group, h),
    )


def metric_model(rec: MinimalOrbitRecord) -> MetricModel:
    blocks = tuple(Block(d, f"p_{k}") for k, d in enumerate(rec.levels, start=1))
    if rec.exceptional:
        return MetricModel(1, blocks, None, note="parameter count not asserted: " + ", ".join(rec.exceptional))
    return MetricModel(1, blocks, 1 + len(blocks))


def enumerate_compact(group: SimpleType) -> list[MinimalOrbitRecord]:
    """One record per node, up to diagram automorphisms."""
    return [minimal_orbit(group, node) for node in node_orbit_representatives(group)]


__all__ = [
    "Block",
    "MetricModel",
    "MinimalOrbitRecord",
    "PRODUCT_SPHERE_BUNDLE",
    "SPHERE_BUNDLE_PATTERNS",
    "TRIVIAL",
    "Factor",
    "enumerate_compact",
    "exception_tags",
    "level_grading",
    "metric_model",
    "minimal_orbit",
]
