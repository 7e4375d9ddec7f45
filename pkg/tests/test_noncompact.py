import pytest

from lorentz_homog.matrixlie import build_case
from lorentz_homog.noncompact import (
    LOCAL_ISOMORPHISMS,
    GroupFactor,
    NoncompactError,
    classify,
    duality,
    enumerate_class_II,
    g2_record,
    infinite_center_record,
    local_iso_consistent,
    minimality_witness,
    product_reduction,
    rank_one_family,
    sl_family,
    so_pq_diagonal_stabilizer,
    su_class_I_records,
)
from lorentz_homog.rootsys import semisimple


def test_sl_family_formula():
    rec = sl_family(2, 3)
    assert rec.dim_d == 20 and rec.module_blocks == (1, 12, 2, 5)
    assert sl_family(1, 1).dim_d == 3 and sl_family(1, 1).h_name == "{e}"
    assert sl_family(1, 2).dim_d == 7 and sl_family(1, 2).h_name == "SO_2"
    c = build_case("sl:2,3")
    assert rec.dim_d == c.m.dim


def test_rank_one_examples():
    assert rank_one_family("RH", 4).dim_d == 7
    f4 = rank_one_family("OH", 2)
    assert (f4.dim_d, f4.module_blocks, f4.provenance) == (31, (1, 8, 7), "paper")
    assert rank_one_family("CH", 3).dim_d == 11
    with pytest.raises(NoncompactError):
        rank_one_family("OH", 3)
    with pytest.raises(NoncompactError):
        rank_one_family("RH", 1)


def test_classify_examples():
    assert classify(rank_one_family("CH", 2)) == ("I", "II")
    assert classify(rank_one_family("RH", 5)) == ("II",)
    assert classify(rank_one_family("HH", 2)) == ("II",)
    assert classify((0, 0)) == ()


def test_duality():
    rec = rank_one_family("CH", 2)
    d = duality(rec)
    assert d.g_name == "SU_3" and d.h_name == "U_1" and d.compact
    assert (d.dim_nH, d.dim_pH, d.module_blocks) == (rec.dim_nH, rec.dim_pH, rec.module_blocks)
    assert duality(sl_family(1, 1)).base.name == "SU_2/SO_2"
    for r in enumerate_class_II(11):
        assert duality(duality(r)) == r


def test_su_class_I_templates():
    recs = su_class_I_records(2)
    a = [r for r in recs if "family a" in r.flags][0]
    assert a.dim_d == 5
    b = [r for r in recs if "family b" in r.flags][0]
    assert b.dim_h == 2
    c3 = [r for r in su_class_I_records(3) if "family c" in r.flags]
    assert {r.h_name for r in c3} == {"T^1_0 . SU_2"}


def test_product_reduction():
    su2 = GroupFactor("SU_2", 3, "{e}", 0, "SU_2", 3, "T^1", 1)
    shapes = product_reduction(su2, su2)
    tw = [s for s in shapes if s.kind == "twisted"]
    assert len(tw) == 1 and tw[0].dim_d == 5 and "t_1 - t_2" in tw[0].complement
    sl2 = GroupFactor("SL_2(R)", 3, "{e}", 0, "SO_2", 1, "SO_2", 1)
    assert [s.dim_d for s in product_reduction(sl2, sl2) if s.kind == "twisted"] == [5]
    g1 = GroupFactor("SU_3", 8, "SU_2", 3, "SU_3", 8)
    prod = [s for s in product_reduction(g1, sl2) if s.kind == "product"][0]
    assert prod.dim_d == 5 + 3 - 1


def test_so_pq_examples():
    assert so_pq_diagonal_stabilizer(2, 2, 2, 0).dim_d == 5
    assert so_pq_diagonal_stabilizer(2, 3, 1, 0).dim_d == 9
    assert so_pq_diagonal_stabilizer(2, 2, 2, 1).dim_d == 5
    with pytest.raises(NoncompactError):
        so_pq_diagonal_stabilizer(2, 2, 3, 0)


def test_m9_is_not_minimal():
    w = minimality_witness("sopq:2,3,1,0")
    assert w is not None and w.dim_larger == 3
    assert minimality_witness("sopq:2,3,2,0") is None


def test_enumeration_small():
    recs = enumerate_class_II(3)
    assert [r.name for r in recs] == ["SL_2(R)"]


def test_enumeration_contains_g2():
    recs = enumerate_class_II(11)
    g2 = [r for r in recs if r.g_name.startswith("G_2")]
    assert len(g2) == 1 and (g2[0].dim_d, g2[0].base.dim_S, g2[0].fiber) == (11, 8, "S^3")
    assert g2_record().dim_pH == 2


def test_enumeration_invariants_and_order():
    recs = enumerate_class_II(15)
    assert [(r.dim_d, r.g_name) for r in recs] == sorted((r.dim_d, r.g_name) for r in recs)
    for r in recs:
        assert r.dim_d == r.dim_g - r.dim_h
        assert r.fiber_dim == r.dim_d - r.base.dim_S == r.base.dim_k - r.dim_h
        assert ("beyond paper" in r.flags) == (r.dim_d > 11)


def test_stored_tags_match_recomputed():
    for r in enumerate_class_II(11):
        if r.case_id:
            d = build_case(r.case_id).fixed_dims()
            assert classify((d["n^H"], d["p^H"])) == r.class_tags


def test_local_isomorphism_table():
    assert local_iso_consistent() == []
    for group in LOCAL_ISOMORPHISMS:
        assert len({(e.dim_S) for e in group}) == 1


def test_infinite_center_template():
    rec = infinite_center_record("SU_{1,2}~", 8, semisimple("A", 1), "SU_2", 4)
    assert rec.dim_d == 5 and rec.metric_blocks.parameter_count == 2
    with pytest.raises(NoncompactError):
        infinite_center_record("SU_{1,2}~", 8, semisimple("A", 1), "SU_2", 3)
