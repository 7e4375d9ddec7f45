from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lorentz_homog import linalg
from lorentz_homog.matrixlie import (
    ACCEPTANCE_CASES,
    LieAlgebraError,
    Subspace,
    build_case,
    build_classical,
    central_action_spectrum,
    embed,
    fixed_subspace,
    fixed_subspace_iterated,
    killing_complement,
    killing_form,
    so,
)


@pytest.mark.parametrize(
    "spec,dim",
    [("so(1,2)", 3), ("sl(5)", 24), ("su(1,2)", 8), ("sp(1,2)", 21), ("so(2,3)", 10), ("su(3)", 8), ("sl(2,R)", 3)],
)
def test_build_dimensions(spec, dim):
    g = build_classical(spec)
    assert g.dim == dim
    assert g.jacobi_defect() == 0
    assert g.antisymmetry_defect() == 0
    assert g.killing_invariance_defect() == 0


def test_unsupported_spec():
    with pytest.raises(LieAlgebraError):
        build_classical("g2")


def test_killing_signatures():
    assert linalg.inertia(killing_form(build_classical("so(1,2)"))) == (2, 1, 0)
    assert linalg.inertia(killing_form(build_classical("su(3)"))) == (0, 8, 0)
    g = build_classical("sl(2)")
    h = g.coords(embed(2, {(0, 0): 1, (1, 1): -1}))
    assert g.B(h, h) == 8


def test_killing_complement_examples():
    g = so(1, 3)
    h = Subspace.from_matrices(g, [embed(4, {(2, 3): 1, (3, 2): -1})])
    m = killing_complement(g, h)
    assert m.dim == 5
    assert m.contains(g.coords(embed(4, {(0, 1): 1, (1, 0): 1})))
    full = Subspace(g, linalg.identity(g.dim))
    assert killing_complement(g, full).dim == 0


@pytest.mark.parametrize("cid", ACCEPTANCE_CASES)
def test_case_decompositions(cid):
    c = build_case(cid)
    assert c.h.dim + c.m.dim == c.g.dim
    assert c.decomposition.check() == []
    assert c.subspaces["n"].dim + c.subspaces["p"].dim == c.m.dim


def test_fixed_subspace_examples():
    for n in range(3, 7):
        c = build_case(f"so1n:{n}")
        mh = c.fixed("m")
        assert mh.dim == 1 and mh.contains(c.vectors["t"])
    c = build_case("sl:2,3")
    mh = c.fixed("m")
    assert mh.dim == 1 and mh.contains(c.vectors["b"])
    c = build_case("su1n:3")
    assert c.fixed("p").dim == 2 and c.fixed("p").contains_subspace(c.subspaces["Cv"])
    assert c.fixed("n").dim == 1 and c.fixed("n").contains(c.vectors["z'"])


def test_section61_cases():
    a = build_case("a:2,3").fixed_dims()
    assert a["p^H"] >= 1
    for sign in "+-":
        c = build_case(f"b{sign}:2,2")
        assert c.fixed("n").contains(c.vectors["e1^e2-+f1^f2"])
        assert c.fixed("p").contains(c.vectors["v"])
    c = build_case("c+:3,3")
    assert c.fixed_dims()["m^H"] == 1


def _subsets(case_ids):
    return st.sampled_from(case_ids).flatmap(
        lambda cid: st.tuples(st.just(cid), st.lists(st.booleans(), min_size=build_case(cid).h.dim, max_size=build_case(cid).h.dim))
    )


@settings(max_examples=25, deadline=None)
@given(_subsets(["sl:2,3", "su1n:3", "so1n:5", "sp1n:2", "b+:2,2"]))
def test_fixed_subspace_oracle_and_monotonicity(arg):
    cid, mask = arg
    c = build_case(cid)
    m = c.m
    sub = Subspace(c.g, [v for v, keep in zip(c.h.basis_coords, mask) if keep])
    stacked = fixed_subspace(sub, m)
    iterated = fixed_subspace_iterated(sub, m)
    assert stacked.dim == iterated.dim and stacked.contains_subspace(iterated)
    # a smaller algebra fixes more
    assert stacked.contains_subspace(fixed_subspace(c.h, m))


@pytest.mark.parametrize("n", [2, 3])
def test_su_chain_monotone(n):
    c = build_case(f"su1n:{n}")
    small = fixed_subspace(c.subspaces["su(W)"], c.m)
    assert small.contains_subspace(c.fixed("m"))


def test_central_spectrum():
    c = build_case("su1n:3")
    z = c.vectors["z"]
    assert central_action_spectrum(z, c.subspaces["p'"]) == [(Fraction(-2), 2)]
    assert central_action_spectrum(z, c.subspaces["Cv"]) == [(Fraction(0), 1)]
    assert central_action_spectrum(z, Subspace(c.g, [z])) == [(Fraction(0), 1)]
    # z0 acts on p as -(n+1)/n i
    assert central_action_spectrum(c.vectors["z0"], c.subspaces["p_C"]) == [(Fraction(-4, 3), 3)]


def test_spectrum_rejects_non_imaginary():
    c = build_case("sl:1,2")
    with pytest.raises(LieAlgebraError):
        central_action_spectrum(c.vectors["b"], c.subspaces["p"])


@pytest.mark.parametrize("cid", ["sl:1,1", "sl:2,3", "so1n:5", "su1n:2", "sp1n:2", "sopq:2,3,2,1", "c+:3,3"])
def test_realized_gram_lorentzian(cid):
    g = build_case(cid).lorentz_gram()
    assert g.is_lorentzian() and g.invariance_defect() == 0
