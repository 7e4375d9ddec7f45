"""Compact classical algebras with an explicit fundamental coweight.

Independent check of the root-bucketing level grading: for the compact form
``g`` of type A-D and a node ``a``, take ``t`` = the fundamental coweight of
``a`` inside the diagonal torus. Then ``ker ad t = h_a + R t`` and ``ad t``
acts on the ``k``-th level with eigenvalues ``+-k i``, so level ``k`` is the
kernel of ``(ad t)^2 + k^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .. import linalg
from ..rootsys import SimpleType
from .algebra import (
    LieAlgebraError,
    LorentzGram,
    MatrixLieAlgebra,
    Subspace,
    centralizer,
    embed,
    killing_complement,
    lorentz_gram,
    so,
    sp,
    su,
)

HALF = Fraction(1, 2)


def coweight(t: SimpleType, node: int) -> list[Fraction]:
    """Coordinates of the fundamental coweight in the standard ``eps`` basis."""
    n, a = t.rank, node
    if not 1 <= a <= n:
        raise LieAlgebraError(f"node {node} out of range")
    if t.family == "A":
        N = n + 1
        return [Fraction(N - a, N)] * a + [Fraction(-a, N)] * (N - a)
    ones = [Fraction(1)] * a + [Fraction(0)] * (n - a)
    if t.family == "B":
        return ones
    if t.family == "C":
        return [HALF] * n if a == n else ones
    if t.family == "D":
        if a == n - 1:
            return [HALF] * (n - 1) + [-HALF]
        if a == n:
            return [HALF] * n
        return ones
    raise LieAlgebraError(f"no matrix realization for {t}")


def compact_algebra(t: SimpleType) -> MatrixLieAlgebra:
    n = t.rank
    return {"A": lambda: su(0, n + 1), "B": lambda: so(0, 2 * n + 1), "C": lambda: sp(0, n), "D": lambda: so(0, 2 * n)}[t.family]()


def torus_element(t: SimpleType, c: list[Fraction]) -> list[list[Fraction]]:
    n = t.rank
    if t.family == "A":
        return embed(n + 1, {(j, j): (0, x) for j, x in enumerate(c) if x}, "C")
    if t.family == "C":
        return embed(n, {(j, j): (0, x) for j, x in enumerate(c) if x}, "H")
    size = 2 * n + 1 if t.family == "B" else 2 * n
    return embed(size, {**{(2 * j, 2 * j + 1): x for j, x in enumerate(c) if x}, **{(2 * j + 1, 2 * j): -x for j, x in enumerate(c) if x}})


@dataclass(frozen=True)
class CompactOrbitCheck:
    group: SimpleType
    node: int
    dim_h: int
    levels: tuple[int, ...]


def compact_orbit_check(t: SimpleType, node: int) -> CompactOrbitCheck:
    g = compact_algebra(t)
    x = g.coords(torus_element(t, coweight(t, node)))
    adx = g.ad(x)
    dim_ker = g.dim - linalg.rank(adx, g.dim)
    sq = linalg.matmul(adx, adx)
    levels = []
    remaining = g.dim - dim_ker
    k = 1
    while remaining > 0:
        shifted = [[v + (k * k if i == j else 0) for j, v in enumerate(row)] for i, row in enumerate(sq)]
        d = g.dim - linalg.rank(shifted, g.dim)
        levels.append(d)
        remaining -= d
        k += 1
        if k > 10:
            raise LieAlgebraError("ad t has a non-integral spectrum")
    # the centralizer of t is h + R t
    return CompactOrbitCheck(t, node, dim_ker - 1, tuple(levels))


def compact_orbit_gram(t: SimpleType, node: int, lam: Fraction = Fraction(1)) -> LorentzGram:
    """``-lambda theta^2 + sum_k b_k`` on ``m = R t + p_1 + ... + p_m``, all scales 1."""
    g = compact_algebra(t)
    x = g.coords(torus_element(t, coweight(t, node)))
    z = centralizer(x, Subspace(g, linalg.identity(g.dim)))
    h = killing_complement(g, Subspace(g, [x]), within=z, symbol="h")
    m = killing_complement(g, h)
    sq = linalg.matmul(g.ad(x), g.ad(x))
    blocks = []
    k = 1
    covered = 1
    while covered < m.dim:
        shifted = [[v + (k * k if i == j else 0) for j, v in enumerate(row)] for i, row in enumerate(sq)]
        level = linalg.nullspace(shifted, g.dim)
        if level:
            blocks.append(Subspace(g, level, f"p_{k}"))
            covered += len(level)
        k += 1
        if k > 10:
            raise LieAlgebraError("ad t has a non-integral spectrum")
    return lorentz_gram(h, m, x, lam, blocks=blocks)


__all__ = ["CompactOrbitCheck", "compact_algebra", "compact_orbit_check", "compact_orbit_gram", "coweight", "torus_element"]
