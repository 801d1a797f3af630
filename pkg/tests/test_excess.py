import pytest

from conftest import data, system
from coxex import (DnCondition, dn_condition_check, excess,
                   excess_report, group_elements, identity_element,
                   inverting_involutions, inverting_involutions_structured,
                   involutions_inverting, j_set, n_of_inverting_set,
                   overlap_check, parabolic_context, parabolic_excess,
                   parabolic_reflection_excess, reflection_excess,
                   spartan_pairs, spartan_support_check, swapcycle_check)
from coxex.elements import reflection
from coxex.signedperm import from_root_perm, parse, to_root_perm


def _elt(token, text):
    rs = system(token)
    return rs, to_root_perm(parse(text, rs.components[0].degree), rs)


def test_iw_golden_sym5():
    rs, w = _elt("A4", "(+2 +3 +5)")
    iw = inverting_involutions(rs, w)
    names = {from_root_perm(x).format() for x in iw.elements}
    assert names == {"(+2 +3)", "(+3 +5)", "(+2 +5)",
                     "(+1 +4)(+2 +3)", "(+1 +4)(+3 +5)", "(+1 +4)(+2 +5)"}
    assert iw.source == "exhaustive"
    for x in iw.elements:
        assert x.is_involution()
        assert w.conjugated_by(x) == w.inverse()


def test_iw_of_reflection_contains_itself_and_identity():
    rs = system("B3")
    r = reflection(rs, 0)
    iw = inverting_involutions(rs, r)
    assert identity_element(rs) in iw.elements
    assert r in iw.elements


def test_iw_of_identity_is_all_involutions():
    rs = system("A3")
    iw = inverting_involutions(rs, identity_element(rs))
    expected = [w for w in group_elements(rs) if w.is_involution()]
    assert set(iw.elements) == set(expected)


def test_iw_always_non_empty():
    for token in ["A3", "B3", "D4", "H3", "I2(7)"]:
        rs = system(token)
        for w in group_elements(rs):
            assert inverting_involutions(rs, w).elements


def test_j_set_golden_sym5():
    rs, w = _elt("A4", "(+2 +3 +5)")
    iw = inverting_involutions(rs, w)
    jw = j_set(w, iw)
    names = {from_root_perm(x).format() for x in jw.elements}
    assert names == {"(+2 +3)", "(+3 +5)", "(+2 +5)"}


def test_j_set_of_identity():
    rs = system("B3")
    ident = identity_element(rs)
    jw = j_set(ident, inverting_involutions(rs, ident))
    assert [x for x in jw.elements] == [ident]


def test_j_set_reflection_length_equivalence():
    for token in ["A3", "B3"]:
        rs = system(token)
        for w in group_elements(rs):
            iw = inverting_involutions(rs, w)
            jw = set(j_set(w, iw).elements)
            via_length = {x for x in iw.elements
                          if w.reflection_length()
                          == x.reflection_length() + (x * w).reflection_length()}
            assert jw == via_length


def test_excess_goldens():
    rs, w = _elt("A4", "(+2 +3 +5)")
    iw = inverting_involutions(rs, w)
    assert excess(w, iw) == 0
    pairs = spartan_pairs(w, iw)
    texts = [(from_root_perm(p.x).format(), from_root_perm(p.y).format())
             for p in pairs]
    assert ("(+3 +5)", "(+2 +3)") in texts
    x35 = to_root_perm(parse("(+3 +5)", 5), rs)
    x23 = to_root_perm(parse("(+2 +3)", 5), rs)
    assert x35.inversions() & x23.inversions() == 0
    assert all(p.defect == 0 for p in pairs)
    jw = j_set(w, iw)
    assert reflection_excess(w, jw) == 0


def test_excess_of_involutions_is_zero():
    rs = system("B3")
    for w in group_elements(rs):
        if w.is_involution():
            iw = inverting_involutions(rs, w)
            assert excess(w, iw) == 0
            assert reflection_excess(w, j_set(w, iw)) == 0


def test_reflection_excess_dominates():
    rs = system("B3")
    for w in group_elements(rs):
        iw = inverting_involutions(rs, w)
        assert reflection_excess(w, j_set(w, iw)) >= excess(w, iw)


def test_parabolic_full_is_ambient():
    rs, w = _elt("A4", "(+2 +3 +5)")
    iw = inverting_involutions(rs, w)
    full = parabolic_context(rs, range(rs.rank))
    assert parabolic_excess(w, full, iw) == excess(w, iw)
    assert parabolic_reflection_excess(w, full, iw) == reflection_excess(w, j_set(w, iw))


def test_parabolic_requires_membership():
    rs, w = _elt("A4", "(+2 +3 +5)")
    iw = inverting_involutions(rs, w)
    ctx = parabolic_context(rs, (0,))
    with pytest.raises(ValueError):
        parabolic_excess(w, ctx, iw)


def test_parabolic_excess_dominates_ambient():
    # factorizations inside W_J are a subset, so e <= e_J always
    from coxex.parabolic import all_generator_subsets
    for token in ["A4", "B4", "D4"]:
        gd = data(token)
        for J in all_generator_subsets(gd.rs):
            ctx = parabolic_context(gd.rs, J)
            for wi in range(len(gd)):
                if ctx.contains_table(gd.bits[wi]):
                    assert gd.excess_in(wi, ctx.mask) >= gd.excess_of(wi)


def test_structured_matches_exhaustive_b3():
    rs = system("B3")
    for w in group_elements(rs):
        ex = inverting_involutions(rs, w)
        st = inverting_involutions_structured(rs, from_root_perm(w))
        assert st.source == "structured-coset"
        assert set(st.elements) == set(ex.elements)


def test_involutions_inverting_picks_a_path():
    rs, w = _elt("B3", "(+1 +2 +3)")
    assert involutions_inverting(rs, w).source == "exhaustive"
    assert involutions_inverting(rs, w, guard=10).source == "structured-coset"


def test_n_of_inverting_set():
    rs, w = _elt("A4", "(+2 +3 +5)")
    iw = inverting_involutions(rs, w)
    niw = n_of_inverting_set(iw)
    assert w.inversions() & ~niw == 0
    # no single member covers N(w)
    assert all(w.inversions() & ~x.inversions() for x in iw.elements)
    # a cuspidal element sees every positive root
    cox = to_root_perm(parse("(+1 +2 +3 +4 +5)", 5), rs)
    assert n_of_inverting_set(inverting_involutions(rs, cox)) == rs.full_mask()


def test_support_checks():
    w = parse("(+2 +3 +5)", 5)
    x = parse("(+3 +5)", 5)
    y = parse("(+2 +3)", 5)
    assert spartan_support_check(x, y, w, "A")
    assert spartan_support_check(w, parse("()", 5), w, "A")
    bad = parse("(+1 +4)", 5)
    assert not spartan_support_check(bad, y, w, "A")
    # D rule: one extra support point is allowed when both maps negate it
    wd = parse("(+1 +2)(+3 +4)", 4)
    xd = parse("(-1 -2)", 4)
    assert spartan_support_check(xd, xd * wd.inverse(), wd, "D") in (True, False)


def test_support_check_d12_golden():
    w = parse("(+2 +4 +6 +8 +10 -12 +11 +9 +7 +5 -3)", 12)
    x = parse("(-1)(+2 +3)(+4 +5)(+6 +7)(+8 +9)(+10 +11)(-12)", 12)
    y = parse("(-1)(-2)(+3 +4)(+5 +6)(+7 +8)(+9 +10)(+11 +12)", 12)
    assert spartan_support_check(x, y, w, "D")
    assert x.positive_support() - w.positive_support() == {1}
    assert y.positive_support() - w.positive_support() == {1}
    assert y.images[0] == -1 and x.images[0] == -1


def test_overlap_check():
    x = parse("(+1 +2)", 5)
    assert overlap_check(x, x, 2)
    assert not overlap_check(x, x, 1)
    assert overlap_check(parse("()", 5), parse("()", 5), 3)


def test_swapcycle_check():
    # interleaved cycles: y swaps (1 3 5) onto the inverse of (2 4 6)
    w = parse("(+1 +3 +5)(+2 +4 +6)", 6)
    y = parse("(+1 +2)(+3 +6)(+4 +5)", 6)
    assert w.conjugated_by(y) == w.inverse()
    assert swapcycle_check(y * w, y, w)
    # blockwise cycles: max{1,2,3} < min{4,5,6}, so the pair must be rejected
    w2 = parse("(+1 +2 +3)(+4 +5 +6)", 6)
    y2 = parse("(+1 +4)(+2 +6)(+3 +5)", 6)
    assert w2.conjugated_by(y2) == w2.inverse()
    assert not swapcycle_check(y2 * w2, y2, w2)


def test_dn_condition_check():
    w = parse("(+1 +2)", 5)
    assert dn_condition_check(w, 5) is DnCondition.M_EQUALS_N
    assert dn_condition_check(w, 2) is DnCondition.HAS_ONE_CYCLE  # 3,4,5 fixed
    w2 = parse("(+1 +2)(+3 +4 +5)", 5)
    assert dn_condition_check(w2, 2) is DnCondition.NONE
    # (+5 -6) carries one minus sign: an even negative cycle in the block
    w3 = parse("(+3 +4)(+5 -6)", 6)
    assert dn_condition_check(w3, 2) is DnCondition.NONE
    # (-5 -6) carries two: even positive, as is (+3 +4)
    w4 = parse("(+3 +4)(-5 -6)", 6)
    assert dn_condition_check(w4, 2) is DnCondition.EVEN_POSITIVE_CYCLES
    with pytest.raises(ValueError):
        dn_condition_check(parse("(+2 +3)", 4), 2)  # straddles the split
    d12 = parse("(+2 +4 +6 +8 +10 -12 +11 +9 +7 +5 -3)", 12)
    assert dn_condition_check(d12, 1) is DnCondition.NONE


def test_group_data_matches_function_level():
    token = "B3"
    gd = data(token)
    rs = gd.rs
    for wi in range(0, len(gd), 5):
        w = gd.element(wi)
        iw = inverting_involutions(rs, w)
        assert gd.excess_of(wi) == excess(w, iw)
        assert gd.refl_excess_of(wi) == reflection_excess(w, j_set(w, iw))
        assert gd.niw_bits(wi) == n_of_inverting_set(iw)
        assert {gd.perms[x] for x, _ in gd.pairs[wi]} == {x.perm for x in iw.elements}


def test_group_data_parabolic_matches_function_level():
    gd = data("B3")
    rs = gd.rs
    ctx = parabolic_context(rs, (0, 1))
    for wi in range(len(gd)):
        if not ctx.contains_table(gd.bits[wi]):
            continue
        w = gd.element(wi)
        iw = inverting_involutions(rs, w)
        assert gd.excess_in(wi, ctx.mask) == parabolic_excess(w, ctx, iw)
        assert (gd.refl_excess_in(wi, ctx.J, ctx.mask)
                == parabolic_reflection_excess(w, ctx, iw))


def test_excess_report_d12():
    rs = system("D12")
    sp = parse("(+2 +4 +6 +8 +10 -12 +11 +9 +7 +5 -3)", 12)
    w = to_root_perm(sp, rs)
    iw = inverting_involutions_structured(rs, sp)
    ctx = parabolic_context(rs, tuple(range(1, 12)))
    report = excess_report(rs, w, (ctx,), iw)
    assert report.length == 28
    assert report.excess == 46
    assert report.parabolic[0][1] == 60
    doc = report.to_json_dict()
    assert doc["parabolic"][0]["e_J"] == 60
    assert doc["element"].startswith("(+2 +4")
    rows = report.csv_rows()
    assert rows[0][2] == "28"
