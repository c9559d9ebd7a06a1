from fractions import Fraction

import pytest

from knotcosmetic.core.diagram import flip_crossing, mirror, resolve
from knotcosmetic.core.ftinv import (
    KnotInvariants,
    crossing_change_report,
    hoste_check,
    invariants,
    murakami_link_checks,
    w3_crossing_change_check,
    w3_from_derivatives,
)
from knotcosmetic.exceptions import InvariantViolation, NotAKnot, WrongComponentCount


def test_right_trefoil_normalization(trefoil):
    inv = invariants(trefoil)
    assert (inv.a2, inv.v2, inv.v3) == (1, 1, 1)
    assert inv.Vpp1 == -6
    assert inv.Vppp1 == -18
    assert inv.w3 == Fraction(-1, 2)


def test_left_trefoil_has_opposite_v3(left_trefoil):
    inv = invariants(left_trefoil)
    assert (inv.a2, inv.v3) == (1, -1)


def test_figure_eight(figure_eight):
    inv = invariants(figure_eight)
    assert (inv.a2, inv.v3) == (-1, 0)
    assert inv.Vppp1 == -18


def test_unknot(unknot):
    inv = invariants(unknot)
    assert (inv.a2, inv.v3, inv.Vpp1, inv.Vppp1) == (0, 0, 0, 0)


def test_to_dict_writes_rationals_as_text(trefoil):
    assert invariants(trefoil).to_dict() == {
        "a2": 1,
        "V1": "1/1",
        "dV1": "0/1",
        "d2V1": "-6/1",
        "d3V1": "-18/1",
        "w3": "-1/2",
        "v2": 1,
        "v3": 1,
    }


def test_mirror_flips_v3_and_keeps_v2(small_knots):
    for d in small_knots.values():
        inv, mirrored = invariants(d), invariants(mirror(d))
        assert mirrored.v2 == inv.v2
        assert mirrored.v3 == -inv.v3


def test_closed_forms_match_diagram(trefoil):
    assert KnotInvariants.from_closed_forms(1, 1) == invariants(trefoil)


def test_inconsistent_record_is_rejected():
    with pytest.raises(InvariantViolation):
        KnotInvariants(1, Fraction(1), Fraction(0), Fraction(0), Fraction(0),
                       Fraction(0), 1, 0)
    with pytest.raises(InvariantViolation):
        KnotInvariants(0, Fraction(2), Fraction(0), Fraction(0), Fraction(0),
                       Fraction(0), 0, 0)


def test_w3_from_derivatives():
    assert w3_from_derivatives(Fraction(-6), Fraction(-18)) == Fraction(-1, 2)


def test_links_are_rejected(hopf):
    with pytest.raises(NotAKnot):
        invariants(hopf)


def test_trefoil_crossing_change(trefoil):
    for i in range(3):
        report = crossing_change_report(resolve(trefoil, i))
        assert report.lk == 1
        assert report.lhs == Fraction(-1, 2)
        assert report.rhs == Fraction(-1, 2)
        assert report.holds
        assert report.hoste_holds


def test_crossing_change_on_every_site(small_knots):
    for d in small_knots.values():
        for i in range(d.n_crossings):
            triple = resolve(d, i)
            assert w3_crossing_change_check(triple)
            assert hoste_check(triple)


def test_two_component_identities(small_knots):
    for d in small_knots.values():
        for i in range(d.n_crossings):
            report = murakami_link_checks(resolve(d, i))
            assert report.passed, report.failures()


def test_two_component_identities_on_trefoil_resolution(trefoil):
    report = murakami_link_checks(resolve(trefoil, 0))
    assert report.lk == 1
    assert (report.a2_first, report.a2_second) == (0, 0)
    assert [check.rhs for check in report.checks] == [-2, -3, Fraction(-7, 2)]


def test_wrong_component_count(hopf):
    triple = resolve(hopf, 0)
    assert triple.resolved.is_knot
    with pytest.raises(WrongComponentCount):
        murakami_link_checks(triple)
    with pytest.raises(WrongComponentCount):
        crossing_change_report(triple)


def test_flipping_a_trefoil_crossing_unknots_it(trefoil):
    assert invariants(flip_crossing(trefoil, 1)).v3 == 0
