import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import system
from coxex import (GuardExceeded, centralizer_elements, centralizer_generators,
                   constructive_inverter, group_elements)
from coxex.signedperm import (SignedPermutation, from_root_perm, parse,
                              to_root_perm)

D12_W = "(+2 +4 +6 +8 +10 -12 +11 +9 +7 +5 -3)"


def signed_perms(max_n=8):
    def build(draw_data):
        perm, signs = draw_data
        return SignedPermutation(tuple(p if s else -p for p, s in zip(perm, signs)))
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.tuples(st.permutations(range(1, n + 1)),
                            st.lists(st.booleans(), min_size=n, max_size=n))
    ).map(build)


def test_parse_goldens():
    sp = parse("(+1 +2)", 2)
    assert sp.images == (2, 1)
    sp = parse("(-5)", 5)
    assert sp.images == (1, 2, 3, 4, -5)
    w = parse(D12_W, 12)
    assert w.images == (1, 4, -2, 6, 3, 8, 5, 10, 7, 12, 9, -11)


def test_parse_errors():
    with pytest.raises(ValueError):
        parse("(+1 +1)", 3)          # repeated point
    with pytest.raises(ValueError):
        parse("(+1 +9)", 3)          # out of range
    with pytest.raises(ValueError):
        parse("(+1 2)", 3)           # missing sign
    with pytest.raises(ValueError):
        parse("(+1 +2", 3)           # unbalanced
    with pytest.raises(ValueError):
        parse("junk(+1 +2)", 3)


def test_format_canonical():
    w = parse(D12_W, 12)
    assert w.format() == D12_W
    assert parse("(+3 +5 +2)", 5).format() == "(+2 +3 +5)"
    assert SignedPermutation.identity(4).format() == "()"
    assert parse("()", 4) == SignedPermutation.identity(4)
    # positive 1-cycles are accepted on parse and suppressed on format
    assert parse("(+2)(+1 +3)", 3).format() == "(+1 +3)"


@settings(max_examples=200)
@given(signed_perms())
def test_parse_format_round_trip(sp):
    assert parse(sp.format(), sp.degree) == sp


@settings(max_examples=100)
@given(signed_perms(), signed_perms())
def test_group_laws(a, b):
    if a.degree != b.degree:
        a = SignedPermutation.identity(b.degree) if a.degree < b.degree else a
        b = SignedPermutation.identity(a.degree)
    prod = a * b
    assert (prod * prod.inverse()).is_identity()
    assert prod.inverse() == b.inverse() * a.inverse()


def test_sign_and_support():
    assert SignedPermutation.identity(5).is_positive()
    assert not parse("(-5)", 5).is_positive()
    w = parse(D12_W, 12)
    assert w.is_positive() and w.in_D()
    assert w.positive_support() == frozenset(range(2, 13))
    assert SignedPermutation.identity(5).positive_support() == frozenset()
    assert parse("(-5)", 5).positive_support() == {5}


def test_sign_multiplicativity_exhaustive_b3():
    rs = system("B3")
    sps = [from_root_perm(w) for w in group_elements(rs)]
    for a in sps:
        for b in sps:
            assert (a * b).is_positive() == (a.is_positive() == b.is_positive())


def test_composition_golden_sym5():
    assert (parse("(+2 +3)", 5) * parse("(+2 +5)", 5)).format() == "(+2 +3 +5)"


def test_cycle_decomposition():
    assert parse("()", 3).cycles().cycles == ()
    dec = parse("(+1 +2 +3 +4)(+5 +6 +7)", 7).cycles()
    assert dec.lengths() == (4, 3)
    assert all(c.sign_type == 1 for c in dec.cycles)
    w = parse(D12_W, 12).cycles()
    assert w.lengths() == (11,)
    assert w.cycles[0].points[0] == 2
    assert 1 not in {p for c in w.cycles for p in c.points}
    neg = parse("(+1 -2)", 2).cycles().cycles[0]
    assert neg.sign_type == -1


def test_to_root_perm_goldens():
    rs = system("A1")
    t = to_root_perm(parse("(+1 +2)", 2), rs)
    assert t.inversions() == 1  # negates the only root e1 - e2
    rs5 = system("A4")
    w = to_root_perm(parse("(+2 +3 +5)", 5), rs5)
    assert rs5.labels_of_bits(w.inversions()) == {"e2-e5", "e3-e4", "e3-e5", "e4-e5"}
    # both roots of the D2 subsystem {e1-e2, e1+e2} are negated by (-1)(-2)
    rsb2 = system("B2")
    z = to_root_perm(parse("(-1)(-2)", 2), rsb2)
    neg = rsb2.labels_of_bits(z.inversions())
    assert {"e1-e2", "e1+e2"} <= neg


def test_to_root_perm_rejects_bad_elements():
    with pytest.raises(ValueError):
        to_root_perm(parse("(-1)", 4), system("D4"))  # negative, not in D
    with pytest.raises(ValueError):
        to_root_perm(parse("(-1)", 5), system("A4"))  # signs not in A
    with pytest.raises(ValueError):
        to_root_perm(parse("(+1 +2)", 3), system("B4"))  # degree mismatch


@pytest.mark.parametrize("token", ["A3", "B3", "D4"])
def test_from_root_perm_round_trip(token):
    rs = system(token)
    for w in group_elements(rs):
        sp = from_root_perm(w)
        assert to_root_perm(sp, rs) == w


def test_homomorphism_exhaustive_b3():
    rs = system("B3")
    elems = group_elements(rs)
    sps = [from_root_perm(w) for w in elems]
    for a, pa in zip(elems, sps):
        assert from_root_perm(a.inverse()) == pa.inverse()
        for b, pb in zip(elems, sps):
            assert to_root_perm(pa * pb, rs) == a * b


def test_homomorphism_b4_exhaustive_by_generators():
    # products with every generator for every element, plus all inverses;
    # this pins the full homomorphism by induction on word length
    rs = system("B4")
    elems = group_elements(rs)
    simple = [e for e in elems if e.length() == 1]
    gens = [from_root_perm(g) for g in simple]
    for w in elems:
        sp = from_root_perm(w)
        assert from_root_perm(w.inverse()) == sp.inverse()
        for g, gsp in zip(simple, gens):
            assert from_root_perm(w * g) == sp * gsp


def _brute_centralizer(sp, ambient_sps):
    return sorted((g.images for g in ambient_sps
                   if (g * sp) == (sp * g)))


def test_centralizer_matches_brute_force_b3():
    rs = system("B3")
    all_sps = [from_root_perm(w) for w in group_elements(rs)]
    for sp in all_sps:
        brute = _brute_centralizer(sp, all_sps)
        closed = sorted(g.images for g in centralizer_elements(sp, "B"))
        assert closed == brute


def test_centralizer_matches_brute_force_b4():
    rs = system("B4")
    all_sps = [from_root_perm(w) for w in group_elements(rs)]
    for sp in all_sps:
        brute = _brute_centralizer(sp, all_sps)
        closed = sorted(g.images for g in centralizer_elements(sp, "B"))
        assert closed == brute


def test_centralizer_matches_brute_force_d4():
    rs = system("D4")
    all_sps = [from_root_perm(w) for w in group_elements(rs)]
    for sp in all_sps:
        brute = _brute_centralizer(sp, all_sps)
        closed = sorted(g.images for g in centralizer_elements(sp, "D"))
        assert closed == brute


def test_centralizer_of_n_cycle_has_order_2n():
    # oracle for n = 3, 4: brute force over the whole hyperoctahedral group
    for n in (3, 4):
        rs = system(f"B{n}")
        all_sps = [from_root_perm(w) for w in group_elements(rs)]
        cyc = parse("(" + " ".join(f"+{i}" for i in range(1, n + 1)) + ")", n)
        assert len(_brute_centralizer(cyc, all_sps)) == 2 * n
        assert len(centralizer_elements(cyc, "B")) == 2 * n


def test_centralizer_of_identity_is_everything():
    assert len(centralizer_elements(SignedPermutation.identity(3), "B")) == 48
    assert len(centralizer_elements(SignedPermutation.identity(4), "D")) == 192


def test_centralizer_d12_order_44():
    w = parse(D12_W, 12)
    assert len(centralizer_elements(w, "B")) == 44


def test_centralizer_guard():
    with pytest.raises(GuardExceeded):
        centralizer_elements(SignedPermutation.identity(6), "B", guard=100)


@settings(max_examples=60)
@given(signed_perms(max_n=6))
def test_centralizer_generators_commute(sp):
    for ambient in ("B", "D"):
        for g in centralizer_generators(sp, ambient):
            assert g * sp == sp * g
            if ambient == "D":
                assert g.is_positive()


def test_constructive_inverter_golden():
    out = constructive_inverter(parse("(+2 +3 +5)", 5))
    assert out.format() == "(+3 +5)"


def test_constructive_inverter_exhaustive_b4():
    rs = system("B4")
    for w in group_elements(rs):
        sp = from_root_perm(w)
        x = constructive_inverter(sp)
        assert x.is_involution() or x.is_identity()
        assert sp.conjugated_by(x) == sp.inverse()


@settings(max_examples=200)
@given(signed_perms(max_n=8))
def test_constructive_inverter_property(sp):
    x = constructive_inverter(sp)
    assert (x * x).is_identity()
    assert sp.conjugated_by(x) == sp.inverse()


def test_constructive_inverter_d12():
    w = parse(D12_W, 12)
    x = constructive_inverter(w)
    assert (x * x).is_identity()
    assert w.conjugated_by(x) == w.inverse()
