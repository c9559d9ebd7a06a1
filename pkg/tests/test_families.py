import itertools
from fractions import Fraction

import pytest

from knotcosmetic.core.diagram import linking_number, resolve
from knotcosmetic.core.ftinv import invariants
from knotcosmetic.core.jones import jones
from knotcosmetic.core.poly import HalfIntLaurent
from knotcosmetic.families import (
    ConwayFormParams,
    WhiteheadParams,
    a2_closed,
    build_twobridge,
    closed_form_invariants,
    continued_fraction,
    genus2_form_check,
    genus3_family,
    recursion_checks,
    twist_knot_diagram,
    twobridge_diagram,
    v3_closed,
    whitehead_invariants,
    whitehead_knot_invariants,
)
from knotcosmetic.exceptions import InvalidParameters, WrongGenus


def _params(*values):
    return ConwayFormParams.from_sequence(values)


def test_params_validation():
    assert ConwayFormParams.parse("1, 1, -2, 1") == _params(1, 1, -2, 1)
    assert str(_params(1, 1, -2, 1)) == "K(1,1,-2,1)"
    assert _params(1, 2, 3, 4).bs == (1, 3)
    assert _params(1, 2, 3, 4).cs == (2, 4)
    with pytest.raises(InvalidParameters):
        _params(1, 0)
    with pytest.raises(InvalidParameters):
        _params(1, 2, 3)
    with pytest.raises(InvalidParameters):
        ConwayFormParams(())
    with pytest.raises(InvalidParameters):
        ConwayFormParams.parse("1,x")


@pytest.mark.parametrize("values, a2, v3", [
    ((1, 1), -1, 0),
    ((-1, 1), 1, 1),
    ((1, -1), 1, -1),
    ((-1, -1), -1, 0),
    ((1, 1, -2, 1), 0, 0),
    ((2, 1), -2, 1),
])
def test_closed_formulas(values, a2, v3):
    p = _params(*values)
    assert (a2_closed(p), v3_closed(p)) == (a2, v3)
    inv = closed_form_invariants(p)
    assert (inv.a2, inv.v3) == (a2, v3)


def test_continued_fraction():
    assert continued_fraction(_params(1, 1)) == Fraction(5, 2)
    assert continued_fraction(_params(1, -1)) == Fraction(3, 2)


@pytest.mark.parametrize("x", range(1, 6))
def test_genus3_family(x):
    p = genus3_family(x)
    assert p.m == 3
    assert a2_closed(p) == 0
    assert v3_closed(p) == -x


def test_genus2_vanishing_matches_form():
    values = [v for v in range(-3, 4) if v]
    for flat in itertools.product(values, repeat=4):
        p = ConwayFormParams.from_sequence(flat)
        vanishing = a2_closed(p) == 0 and v3_closed(p) == 0
        assert genus2_form_check(p) == vanishing, p


def test_genus2_check_needs_two_pairs():
    with pytest.raises(WrongGenus):
        genus2_form_check(_params(1, 1))


@pytest.mark.parametrize("values", [(1, 1), (1, 2, -1, 1), (-2, 3, 1, -1, 2, 2)])
def test_recursions(values):
    report = recursion_checks(_params(*values))
    assert report.passed, report.failures()


@pytest.mark.parametrize("m", [1, 2])
def test_recursions_on_small_grid(m):
    values = [v for v in range(-2, 3) if v]
    for flat in itertools.product(values, repeat=2 * m):
        report = recursion_checks(_params(*flat))
        assert report.passed, (flat, report.failures())


def test_generated_trefoil_matches_parsed(trefoil):
    d = twobridge_diagram(_params(-1, 1))
    assert d.n_crossings == 4
    assert d.is_knot
    assert jones(d) == jones(trefoil)


def test_generated_signs_follow_regions():
    conway = build_twobridge(_params(1, -1))
    assert conway.diagram.signs == (-1, -1, -1, -1)
    assert sorted(i for region in conway.regions for i in region.crossings) == [0, 1, 2, 3]


@pytest.mark.parametrize("values", [
    flat for m in (1, 2) for flat in itertools.product((-1, 1), repeat=2 * m)
])
def test_diagrams_match_closed_formulas(values):
    p = _params(*values)
    inv = invariants(twobridge_diagram(p))
    assert (inv.a2, inv.v3) == (a2_closed(p), v3_closed(p))


def test_innermost_crossing_linking_number():
    p = _params(1, 2)
    conway = build_twobridge(p)
    assert len(conway.innermost_sites) == 4
    site = conway.innermost_sites[0]
    resolved = resolve(conway.diagram, site).resolved
    assert linking_number(resolved, 0, 1) == -sum(p.bs)


@pytest.mark.parametrize("n", range(-3, 4))
def test_twist_knots(n):
    inv = invariants(twist_knot_diagram(n))
    assert (inv.a2, inv.v3) == (-n, (n * n - n) // 2)


def test_whitehead_doubles():
    a2, v3, delta = whitehead_invariants(WhiteheadParams(2))
    assert (a2, v3) == (-2, 1)
    assert delta == HalfIntLaurent.from_t_terms({1: -2, 0: 5, -1: -2})
    assert whitehead_invariants(WhiteheadParams(0, 1))[:2] == (0, -2)
    assert whitehead_knot_invariants(WhiteheadParams(1)).a2 == -1
