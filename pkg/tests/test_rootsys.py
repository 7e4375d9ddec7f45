import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lorentz_homog.rootsys import (
    TRIVIAL,
    RootSystemError,
    SimpleType,
    all_labels,
    all_simple_types,
    build_root_system,
    canonical_simple,
    compact_name,
    delete_vertex,
    diagram_automorphisms,
    dynkin_marks,
    gram_matrix,
    label_dimension,
    node_orbit_representatives,
    parse_group,
    parse_semisimple,
    parse_simple,
    parse_type,
    positive_root_count,
    root_closure,
    semisimple,
)

# Bourbaki highest-root coefficients, independent of the closure code
BOURBAKI_MARKS = {
    ("B", 4): (1, 2, 2, 2),
    ("C", 4): (2, 2, 2, 1),
    ("D", 4): (1, 2, 1, 1),
    ("D", 6): (1, 2, 2, 2, 1, 1),
    ("E", 6): (1, 2, 2, 3, 2, 1),
    ("E", 7): (2, 2, 3, 4, 3, 2, 1),
    ("E", 8): (2, 3, 4, 6, 5, 4, 3, 2),
    ("F", 4): (2, 3, 4, 2),
    ("G", 2): (3, 2),
}


def classical_positive_count(family, n):
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}.get(family) or {
        ("E", 6): 36,
        ("E", 7): 63,
        ("E", 8): 120,
        ("F", 4): 24,
        ("G", 2): 6,
    }[(family, n)]


types = st.sampled_from(all_simple_types(8))


@pytest.mark.parametrize("label", all_labels(8), ids=lambda lab: f"{lab[0]}{lab[1]}")
def test_positive_root_count_matches_dimension(label):
    fam, n = label
    count = positive_root_count(fam, n)
    assert 2 * count == label_dimension(fam, n) - n
    if not (fam == "D" and n < 4):
        assert count == classical_positive_count(fam, n)


@pytest.mark.parametrize("key,marks", sorted(BOURBAKI_MARKS.items()))
def test_marks_match_bourbaki_table(key, marks):
    assert dynkin_marks(build_root_system(SimpleType(*key))) == marks


def test_small_cases():
    a1 = build_root_system(SimpleType("A", 1))
    assert a1.positive_roots == ((1,),) and a1.highest_root == (1,) and a1.marks == (1,)
    g2 = build_root_system(SimpleType("G", 2))
    assert len(g2.positive_roots) == 6 and g2.highest_root == (3, 2)
    assert len(build_root_system(SimpleType("E", 8)).positive_roots) == 120


@pytest.mark.parametrize("n", range(1, 9))
def test_marks_of_a_are_one(n):
    assert build_root_system(SimpleType("A", n)).marks == (1,) * n


@settings(max_examples=40, deadline=None)
@given(types)
def test_closure_is_idempotent(t):
    rs = build_root_system(t)
    again = root_closure(gram_matrix(t), list(rs.positive_roots))
    assert tuple(again) == rs.positive_roots


@settings(max_examples=40, deadline=None)
@given(types)
def test_roots_nonnegative_and_highest_dominates(t):
    rs = build_root_system(t)
    assert all(c >= 0 for b in rs.positive_roots for c in b)
    assert all(m >= 1 for m in rs.marks)
    assert all(all(c <= h for c, h in zip(b, rs.highest_root)) for b in rs.positive_roots)


@settings(max_examples=40, deadline=None)
@given(types)
def test_marks_invariant_under_diagram_automorphisms(t):
    marks = build_root_system(t).marks
    for perm in diagram_automorphisms(t):
        assert tuple(marks[perm[i]] for i in range(t.rank)) == marks


@settings(max_examples=60, deadline=None)
@given(types, st.data())
def test_delete_vertex_dimension_identity(t, data):
    node = data.draw(st.integers(1, t.rank))
    rs = build_root_system(t)
    touching = sum(1 for b in rs.positive_roots if b[node - 1])
    assert delete_vertex(t, node).dimension == t.dimension - 1 - 2 * touching


def test_delete_vertex_examples():
    assert delete_vertex(SimpleType("A", 3), 2) == semisimple("A", 1) * semisimple("A", 1)
    assert delete_vertex(SimpleType("E", 6), 4).untagged() == parse_semisimple("SU_3 x SU_3 x SU_2")
    assert compact_name(delete_vertex(SimpleType("F", 4), 4)) == "Spin_7"
    with pytest.raises(RootSystemError):
        delete_vertex(SimpleType("A", 3), 4)


def test_compact_names():
    assert compact_name(semisimple("A", 2)) == "SU_3"
    assert compact_name(semisimple("D", 5)) == "Spin_10"
    assert compact_name(semisimple("C", 3)) == "Sp_3"
    assert compact_name(TRIVIAL) == "{e}"


def test_low_rank_canonicalization():
    assert semisimple("B", 1) == semisimple("C", 1) == semisimple("A", 1)
    assert semisimple("C", 2) == semisimple("B", 2)
    assert semisimple("D", 2) == semisimple("A", 1) * semisimple("A", 1)
    assert canonical_simple("D", 3) == SimpleType("A", 3)
    assert semisimple("D", 1) == TRIVIAL


def test_illegal_types_rejected():
    for fam, n in (("E", 5), ("F", 3), ("G", 3), ("A", 0)):
        with pytest.raises(RootSystemError):
            build_root_system(SimpleType(fam, n))


def test_orbit_representatives():
    assert node_orbit_representatives(SimpleType("D", 4)) == [1, 2]
    assert len(node_orbit_representatives(SimpleType("E", 6))) == 4
    assert len(node_orbit_representatives(SimpleType("E", 8))) == 8


@pytest.mark.parametrize(
    "name,expected",
    [("A3", SimpleType("A", 3)), ("SU4", SimpleType("A", 3)), ("Spin10", SimpleType("D", 5)), ("SO_6", SimpleType("A", 3)), ("e8", SimpleType("E", 8))],
)
def test_parse_simple(name, expected):
    assert parse_simple(name) == expected


def test_parse_errors():
    with pytest.raises(RootSystemError):
        parse_group("XY3")
    with pytest.raises(RootSystemError):
        parse_simple("SO4")


@settings(max_examples=60, deadline=None)
@given(types, st.data())
def test_type_label_round_trip(t, data):
    node = data.draw(st.integers(1, t.rank))
    h = delete_vertex(t, node)
    assert parse_type(str(h)) == h
