import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lorentz_homog import linalg
from lorentz_homog.matrixlie import compact_orbit_check, compact_orbit_gram
from lorentz_homog.orbits import (
    SPHERE_BUNDLE_PATTERNS,
    enumerate_compact,
    level_grading,
    metric_model,
    minimal_orbit,
)
from lorentz_homog.rootsys import SimpleType, all_simple_types, build_root_system, compact_name, semisimple

types = st.sampled_from(all_simple_types(8))


def test_so7_node1_is_sphere_bundle():
    rec = minimal_orbit(SimpleType("B", 3), 1)
    assert rec.stabilizer_semisimple == semisimple("B", 2)
    assert rec.dim_M == 11
    assert "S(S^6)" in rec.exceptional


def test_su4_node1_is_s_cp3():
    rec = minimal_orbit(SimpleType("A", 3), 1)
    assert rec.stabilizer_semisimple == semisimple("A", 2)
    assert rec.dim_M == 7 and "S(CP^3)" in rec.exceptional


def test_f4_sp3():
    rec = minimal_orbit(SimpleType("F", 4), 1)
    assert compact_name(rec.stabilizer_semisimple) == "Sp_3"
    assert (rec.dim_M, rec.mark, rec.exceptional) == (31, 2, ())
    assert metric_model(rec).parameter_count == 3


def test_level_grading_examples():
    assert level_grading(build_root_system(SimpleType("A", 2)), 1) == (4,)
    assert len(level_grading(build_root_system(SimpleType("G", 2)), 1)) == 3
    assert level_grading(build_root_system(SimpleType("A", 1)), 1) == (2,)


def test_metric_models():
    assert metric_model(minimal_orbit(SimpleType("A", 1), 1)).parameter_count is None
    su3 = metric_model(minimal_orbit(SimpleType("A", 2), 1))
    assert su3.parameter_count is None and "not asserted" in su3.note
    e8 = metric_model(minimal_orbit(SimpleType("E", 8), 2))
    assert e8.parameter_count == 4


def test_enumerate_examples():
    g2 = enumerate_compact(SimpleType("G", 2))
    assert {r.stabilizer_name for r in g2} == {"SU_2^short", "SU_2^long"}
    assert all(r.dim_M == 11 for r in g2)
    e6 = enumerate_compact(SimpleType("E", 6))
    assert sorted(r.stabilizer_name for r in e6) == sorted(["Spin_10", "SU_5 x SU_2", "SU_3 x SU_3 x SU_2", "SU_6"])
    assert len(enumerate_compact(SimpleType("E", 8))) == 8


@settings(max_examples=80, deadline=None)
@given(types, st.data())
def test_record_invariants(t, data):
    rec = minimal_orbit(t, data.draw(st.integers(1, t.rank)))
    assert len(rec.levels) == rec.mark
    assert sum(rec.levels) == rec.dim_F == t.dimension - rec.stabilizer_semisimple.dimension - 1
    mm = metric_model(rec)
    assert mm.dimension == rec.dim_M
    if not rec.exceptional:
        assert mm.parameter_count == rec.mark + 1


def test_every_pattern_instance_matched_once():
    for pat in SPHERE_BUNDLE_PATTERNS:
        for g, h, label in pat.instances(8):
            hits = [r for r in enumerate_compact(g) if label in r.exceptional]
            if label.endswith("[n-2]"):
                continue
            assert len(hits) == 1, label


SMALL = [SimpleType("A", n) for n in (1, 2, 3)] + [SimpleType("B", 2), SimpleType("B", 3), SimpleType("C", 3), SimpleType("D", 4)]


@pytest.mark.parametrize("t", SMALL, ids=str)
def test_matrix_oracle_matches_root_bucketing(t):
    rs = build_root_system(t)
    for node in range(1, t.rank + 1):
        chk = compact_orbit_check(t, node)
        assert chk.dim_h == t.dimension - minimal_orbit(t, node).dim_M
        assert chk.levels == level_grading(rs, node)


@pytest.mark.parametrize("t,node", [(SimpleType("A", 2), 1), (SimpleType("B", 3), 2), (SimpleType("C", 3), 3)], ids=str)
def test_realized_metric_is_lorentzian_and_invariant(t, node):
    gram = compact_orbit_gram(t, node)
    assert gram.is_lorentzian()
    assert gram.invariance_defect() == 0


def test_block_model_gram_signature():
    mm = metric_model(minimal_orbit(SimpleType("E", 7), 4))
    pos, neg, zero = linalg.inertia(mm.gram())
    assert (neg, zero) == (1, 0) and pos == mm.dimension - 1
