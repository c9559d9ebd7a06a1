from fractions import Fraction

import pytest

from knotcosmetic.core.alexander import alexander
from knotcosmetic.core.ftinv import KnotInvariants, invariants
from knotcosmetic.core.jones import kauffman_bracket
from knotcosmetic.core.poly import HalfIntLaurent
from knotcosmetic.cosmetic import (
    REFERENCE_EXCEPTIONS,
    SLOPE_CONSTRAINTS,
    SlopePair,
    VerdictStatus,
    admissible_slopes,
    compare_with_reference,
    lambda2_difference,
    verdict,
    whitehead_verdict,
)
from knotcosmetic.exceptions import InvalidParameters, InvalidSlope
from knotcosmetic.families import ConwayFormParams, WhiteheadParams, closed_form_invariants
from knotcosmetic.verify import brute_force_slopes


def test_trefoil_is_obstructed_by_second_derivative(trefoil):
    v = verdict(invariants(trefoil))
    assert v.status is VerdictStatus.OBSTRUCTED_JONES
    assert v.witness == ("d2V1", "-6/1")
    assert v.delta_second_derivative == 2


def test_jones_obstruction_ignores_tau(trefoil):
    assert verdict(invariants(trefoil), tau=0).status is VerdictStatus.OBSTRUCTED_JONES


def test_third_derivative_witness():
    v = verdict(KnotInvariants.from_closed_forms(0, -2))
    assert v.status is VerdictStatus.OBSTRUCTED_JONES
    assert v.witness == ("d3V1", "72/1")


def test_9_44_is_obstructed_by_third_derivative(knot_9_44):
    assert knot_9_44.n_crossings == 9
    assert knot_9_44.is_knot
    assert alexander(knot_9_44).delta == HalfIntLaurent.from_t_terms({2: 1, 1: -4, 0: 7, -1: -4, -2: 1})
    assert kauffman_bracket(knot_9_44, "naive") == kauffman_bracket(knot_9_44, "contraction")
    inv = invariants(knot_9_44)
    assert inv.a2 == 0
    assert inv.Vpp1 == 0
    assert inv.Vppp1 != 0
    result = verdict(inv, 0)
    assert result.status is VerdictStatus.OBSTRUCTED_JONES
    assert result.witness[0] == "d3V1"


def test_tau_obstruction(unknot):
    v = verdict(invariants(unknot), tau=1)
    assert v.status is VerdictStatus.OBSTRUCTED_TAU
    assert v.witness == ("tau", "1")


def test_inconclusive_reports_constraints():
    inv = closed_form_invariants(ConwayFormParams.from_sequence((1, 1, -2, 1)))
    known = verdict(inv, tau=0)
    assert known.status is VerdictStatus.INCONCLUSIVE
    assert known.witness is None
    assert known.constraints == SLOPE_CONSTRAINTS

    unknown = verdict(inv)
    assert unknown.status is VerdictStatus.INCONCLUSIVE
    assert "tau unknown" in unknown.constraints

    assert verdict(inv, tau=2).status is VerdictStatus.OBSTRUCTED_TAU


def test_verdict_to_dict(trefoil):
    assert verdict(invariants(trefoil)).to_dict() == {
        "status": "OBSTRUCTED_JONES",
        "witness": {"quantity": "d2V1", "value": "-6/1"},
        "constraints": None,
        "d2Delta1": 2,
    }


@pytest.mark.parametrize("n, companion_a2, status", [
    (0, 0, VerdictStatus.INCONCLUSIVE),
    (0, 1, VerdictStatus.OBSTRUCTED_JONES),
    (2, 0, VerdictStatus.OBSTRUCTED_JONES),
    (-1, 3, VerdictStatus.OBSTRUCTED_JONES),
])
def test_whitehead_verdicts(n, companion_a2, status):
    assert whitehead_verdict(WhiteheadParams(n, companion_a2)).status is status


def test_admissible_slopes():
    assert [s.to_list() for s in admissible_slopes(5)] == [[2, 1], [5, 2], [5, 3]]
    assert [(s.p, s.q) for s in admissible_slopes(500)] == brute_force_slopes(500)
    with pytest.raises(InvalidParameters):
        admissible_slopes(0)


def test_slope_pair_validation():
    assert SlopePair(5, 2).slopes == (Fraction(5, 2), Fraction(-5, 2))
    with pytest.raises(InvalidSlope):
        SlopePair(5, 1)
    with pytest.raises(InvalidSlope):
        SlopePair(0, 1)
    with pytest.raises(InvalidSlope):
        SlopePair(5, 0)


def test_lambda2_difference():
    assert lambda2_difference(Fraction(-1, 2), SlopePair(5, 2)) == Fraction(-2, 5)
    assert lambda2_difference(Fraction(0), SlopePair(13, 5)) == 0


def test_compare_with_reference():
    names = sorted(REFERENCE_EXCEPTIONS)
    assert compare_with_reference(names) == {"missing": [], "unexpected": []}
    difference = compare_with_reference(names[1:] + ["4_1"])
    assert difference == {"missing": [names[0]], "unexpected": ["4_1"]}
