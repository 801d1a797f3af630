import json
from fractions import Fraction

import pytest

from conftest import system
from coxex import build_root_system, load_root_system, parse_descriptor, save_root_system
from coxex.rootsystem import root_label, root_system_from_json


def _frac_vec(*xs):
    return tuple(Fraction(x) for x in xs)


def test_a2_has_three_positive_roots():
    assert system("A2").num_positive == 3


def test_b3_roots_match_the_standard_list():
    # oracle: enumerate the forms e_i - e_j, e_i + e_j (i < j) and e_i directly
    expected = set()
    for i in range(3):
        for j in range(i + 1, 3):
            for sj in (1, -1):
                v = [0, 0, 0]
                v[i], v[j] = 1, sj
                expected.add(_frac_vec(*v))
        v = [0, 0, 0]
        v[i] = 1
        expected.add(_frac_vec(*v))
    rs = system("B3")
    assert set(rs.positive_roots) == expected
    assert rs.num_positive == 9


def test_d4_roots_match_the_standard_list():
    expected = set()
    for i in range(4):
        for j in range(i + 1, 4):
            for sj in (1, -1):
                v = [0, 0, 0, 0]
                v[i], v[j] = 1, sj
                expected.add(_frac_vec(*v))
    rs = system("D4")
    assert set(rs.positive_roots) == expected
    assert rs.num_positive == 12


@pytest.mark.parametrize("token,count", [
    ("A4", 10), ("B4", 16), ("D5", 20), ("I2(5)", 5), ("I2(8)", 8),
    ("H3", 15), ("H4", 60), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120),
])
def test_positive_root_counts(token, count):
    assert system(token).num_positive == count


def test_each_generator_negates_exactly_its_simple_root():
    for token in ["A3", "B3", "D4", "H3", "I2(7)", "F4"]:
        rs = system(token)
        for r, table in enumerate(rs.gen_tables):
            negated = [i for i, v in enumerate(table) if v < 0]
            assert negated == [rs.simple_indices[r]]


def test_tables_are_signed_permutations():
    for token in ["B3", "H3"]:
        rs = system(token)
        for table in rs.gen_tables:
            assert sorted(abs(v) for v in table) == list(range(1, rs.num_positive + 1))


def test_root_labels():
    rs = system("B3")
    assert rs.root_label(rs.index_of(_frac_vec(1, -1, 0))) == "e1-e2"
    assert rs.root_label(rs.index_of(_frac_vec(0, 1, 1))) == "e2+e3"
    assert rs.root_label(rs.index_of(_frac_vec(0, 0, 1))) == "e3"
    assert rs.index_of_label("e1+e3") == rs.index_of(_frac_vec(1, 0, 1))
    with pytest.raises(ValueError):
        root_label((Fraction(1, 2), Fraction(0)))


def test_serialization_round_trip_exact(tmp_path):
    rs = system("B3")
    path = tmp_path / "b3.json"
    save_root_system(rs, path)
    doc = json.loads(path.read_text())
    assert doc["schema"] == "coxex.rootsystem/1"
    loaded = load_root_system(path)
    assert loaded.positive_roots == rs.positive_roots
    assert loaded.gen_tables == rs.gen_tables
    assert loaded.coeffs == rs.coeffs
    assert loaded.simple_indices == rs.simple_indices
    assert loaded.name == "B3"


def test_serialization_round_trip_float(tmp_path):
    rs = build_root_system(parse_descriptor("I2(7)"))
    path = tmp_path / "i27.json"
    save_root_system(rs, path)
    loaded = load_root_system(path)
    assert loaded.gen_tables == rs.gen_tables
    assert loaded.num_positive == 7
    for u, v in zip(loaded.positive_roots, rs.positive_roots):
        assert max(abs(a - b) for a, b in zip(u, v)) < 1e-12


def test_schema_field_is_checked():
    with pytest.raises(ValueError):
        root_system_from_json({"schema": "bogus/9"})


def test_reflection_tables_through_non_simple_roots():
    # images of reflections through non-simple roots are computed along a
    # different float path than the stored coordinates; the lookup must not
    # depend on rounded keys matching exactly
    from coxex.elements import compose_tables, identity_table
    for token in ["H4", "H3", "I2(7)", "F4"]:
        rs = system(token)
        for i in range(rs.num_positive):
            t = rs.reflection_table(i)
            assert sorted(abs(v) for v in t) == list(range(1, rs.num_positive + 1))
            assert t[i] == -(i + 1)
            assert compose_tables(t, t) == identity_table(rs.num_positive)


def test_product_root_system():
    rs = system("A2xA1")
    assert rs.num_positive == 4
    assert rs.rank == 3
    assert rs.order() == 12
    with pytest.raises(ValueError):
        build_root_system([parse_descriptor("A2"), parse_descriptor("H3")])
