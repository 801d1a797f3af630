import pytest

from coxex.descriptors import CoxeterDescriptor, parse_descriptor


def test_rank_constraints():
    with pytest.raises(ValueError):
        CoxeterDescriptor("A", 0)
    with pytest.raises(ValueError):
        CoxeterDescriptor("B", 1)
    with pytest.raises(ValueError):
        CoxeterDescriptor("D", 3)
    with pytest.raises(ValueError):
        CoxeterDescriptor("H3", 4)
    with pytest.raises(ValueError):
        CoxeterDescriptor("I2", 2, 4)
    with pytest.raises(ValueError):
        CoxeterDescriptor("B", 3, 6)  # m only for dihedrals
    with pytest.raises(ValueError):
        CoxeterDescriptor("Z", 3)


def test_coxeter_matrix_shape():
    for tok in ["A3", "B4", "D5", "I2(7)", "H3", "H4", "F4", "E6", "E7", "E8"]:
        d = parse_descriptor(tok)
        mat = d.coxeter_matrix()
        n = d.rank
        assert len(mat) == n
        for i in range(n):
            assert mat[i][i] == 1
            for j in range(n):
                assert mat[i][j] == mat[j][i]
                if i != j:
                    assert mat[i][j] >= 2


def test_coxeter_matrix_bonds():
    b3 = CoxeterDescriptor("B", 3).coxeter_matrix()
    assert b3[1][2] == 4 and b3[0][1] == 3
    d4 = CoxeterDescriptor("D", 4).coxeter_matrix()
    # branch: generator 4 bonds to generator 2, not 3
    assert d4[1][3] == 3 and d4[2][3] == 2
    f4 = CoxeterDescriptor("F4", 4).coxeter_matrix()
    assert [f4[i][i + 1] for i in range(3)] == [3, 4, 3]
    i27 = CoxeterDescriptor("I2", 2, 7).coxeter_matrix()
    assert i27[0][1] == 7


def test_orders():
    assert parse_descriptor("A2").order() == 6
    assert parse_descriptor("A3").order() == 24
    assert parse_descriptor("B3").order() == 48
    assert parse_descriptor("B4").order() == 384
    assert parse_descriptor("D4").order() == 192
    assert parse_descriptor("I2(6)").order() == 12
    assert parse_descriptor("H3").order() == 120
    assert parse_descriptor("E7").order() == 2903040


def test_parse_round_trip():
    for tok in ["A4", "B12", "D12", "I2(5)", "H3", "H4", "F4", "E6", "E7", "E8"]:
        assert parse_descriptor(tok).name == tok
    with pytest.raises(ValueError):
        parse_descriptor("Q9")
    with pytest.raises(ValueError):
        parse_descriptor("I2")


def test_degree():
    assert parse_descriptor("A4").degree == 5
    assert parse_descriptor("B4").degree == 4
    assert parse_descriptor("D12").degree == 12
    with pytest.raises(ValueError):
        _ = parse_descriptor("H3").degree
