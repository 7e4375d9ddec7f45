import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lorentz_homog import catalog
from lorentz_homog.catalog import CatalogError, parse, serialize
from lorentz_homog.noncompact import enumerate_class_II, rank_one_family, sl_family
from lorentz_homog.orbits import enumerate_compact, metric_model, minimal_orbit
from lorentz_homog.rootsys import SimpleType, all_simple_types


def test_table_i_clean():
    r = catalog.verify("TABLE_I")
    assert r.clean and r.matched == 9


def test_e7_exact_e8_annotated():
    e7 = catalog.verify("SECTION4_LIST", "E_7")
    assert e7.clean and e7.exact and e7.matched == 7
    e8 = catalog.verify("SECTION4_LIST", "E_8")
    assert e8.matched == 7 and e8.paper_not_in_computed == ()
    assert len(e8.computed_not_in_paper) == 1 and "SU_8" in e8.computed_not_in_paper[0]
    assert e8.clean and any("SU_8" in n for n in e8.notes)


def test_verify_all_clean_and_deterministic():
    a = catalog.verify_all()
    assert [r.table_id for r in a] == list(catalog.TABLE_IDS)
    assert all(r.clean for r in a)
    assert serialize(a, "json") == serialize(catalog.verify_all(), "json")


def test_unknown_table():
    with pytest.raises(CatalogError):
        catalog.verify("TABLE_II")
    with pytest.raises(CatalogError):
        catalog.verify("TABLE_I", "E_8")


def test_golden_anchors_nonempty():
    for t in catalog.GOLDEN_TABLES.values():
        assert t.rows
        assert all(r.anchor and r.key for r in t.rows)


def test_empty_enumeration_json():
    assert serialize(enumerate_class_II(2), "json") == "[]"


def test_g2_orbit_json():
    data = json.loads(serialize(minimal_orbit(SimpleType("G", 2), 1), "json"))
    assert data["dim_M"] == 11


def test_table_i_columns():
    head = serialize(enumerate_class_II(11), "table").splitlines()[0].split()
    assert head == ["d", "M", "K", "m", "fiber"]
    assert catalog.table_i_golden_text().splitlines()[0].split() == head


def test_fractions_as_strings():
    assert catalog.frac_str(Fraction(-4, 3)) == "-4/3"
    assert catalog.frac_str(Fraction(2)) == "2/1"
    assert catalog.parse_frac("-4/3") == Fraction(-4, 3)
    with pytest.raises(CatalogError):
        catalog.parse_frac("1.5")


def test_round_trip_class2():
    recs = enumerate_class_II(11)
    assert parse(serialize(recs, "json")) == recs


_RECORDS = [r for g in all_simple_types(4) for r in enumerate_compact(g)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_RECORDS))
def test_round_trip_orbits(rec):
    entry = catalog.OrbitEntry(rec, metric_model(rec))
    assert parse(serialize(entry, "json")) == entry
    assert parse(serialize([rec], "json")) == [rec]


@settings(max_examples=20, deadline=None)
@given(st.one_of(
    st.builds(sl_family, st.integers(1, 4), st.integers(1, 4)),
    st.builds(rank_one_family, st.sampled_from(["RH", "CH", "HH"]), st.integers(2, 3)),
))
def test_round_trip_homogeneous(rec):
    assert parse(serialize(rec, "json")) == rec


def test_schema_rejects_extra_fields():
    data = json.loads(serialize(sl_family(1, 1), "json"))
    data["extra"] = 1
    with pytest.raises(CatalogError):
        parse(json.dumps(data))
