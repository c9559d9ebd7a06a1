"""
Finite-type invariants v2, v3 and w3 from Jones derivatives at t = 1

w3 = V'''(1)/72 + V''(1)/24, v2 = a2 and v3 = -2 w3. The crossing-change
and linking-number reports below recompute the same quantities along a
skein triple and compare both sides of the identities they must satisfy.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from ..exceptions import InvariantViolation, NotAKnot, WrongComponentCount
from .alexander import alexander
from .diagram import PlanarDiagram, SkeinTriple, component_subdiagram, linking_number
from .jones import DEFAULT_METHOD, jones_derivatives
from .poly import format_rational

logger = logging.getLogger(__name__)


def w3_from_derivatives(vpp1: Fraction, vppp1: Fraction) -> Fraction:
    return Fraction(vppp1) / 72 + Fraction(vpp1) / 24


@dataclass(frozen=True)
class KnotInvariants:
    """Jones derivatives at 1, Conway a2 and the order 2 and 3 invariants of a knot"""

    a2: int
    V1: Fraction
    Vp1: Fraction
    Vpp1: Fraction
    Vppp1: Fraction
    w3: Fraction
    v2: int
    v3: int

    def __post_init__(self):
        if self.V1 != 1 or self.Vp1 != 0:
            raise InvariantViolation(f"knot Jones polynomial has V(1) = {self.V1}, V'(1) = {self.Vp1}")
        if self.Vpp1 != -6 * self.a2:
            raise InvariantViolation(f"V''(1) = {self.Vpp1} but -6 a2 = {-6 * self.a2}")
        if self.w3 != w3_from_derivatives(self.Vpp1, self.Vppp1):
            raise InvariantViolation(f"w3 = {self.w3} disagrees with the Jones derivatives")
        if self.v2 != self.a2 or self.v3 != -2 * self.w3:
            raise InvariantViolation(f"v2 = {self.v2}, v3 = {self.v3} inconsistent with a2 and w3")

    @classmethod
    def from_closed_forms(cls, a2: int, v3: int) -> "KnotInvariants":
        """Record implied by a2 and v3 alone (no diagram needed)"""
        vpp1 = Fraction(-6 * a2)
        w3 = Fraction(-v3, 2)
        vppp1 = 72 * w3 - 3 * vpp1
        return cls(a2, Fraction(1), Fraction(0), vpp1, vppp1, w3, a2, v3)

    @property
    def delta_second_derivative(self) -> int:
        """Alexander delta''(1) = 2 a2"""
        return 2 * self.a2

    def to_dict(self) -> Dict[str, object]:
        return {
            "a2": self.a2,
            "V1": format_rational(self.V1),
            "dV1": format_rational(self.Vp1),
            "d2V1": format_rational(self.Vpp1),
            "d3V1": format_rational(self.Vppp1),
            "w3": format_rational(self.w3),
            "v2": self.v2,
            "v3": self.v3,
        }


def invariants(d: PlanarDiagram, method: str = DEFAULT_METHOD) -> KnotInvariants:
    if not d.is_knot:
        raise NotAKnot(f"finite-type invariants need a knot, diagram has {d.component_count} components")

    v1, vp1, vpp1, vppp1 = jones_derivatives(d, method)
    a2 = alexander(d).a2
    w3 = w3_from_derivatives(vpp1, vppp1)
    v3 = -2 * w3
    if v3.denominator != 1:
        raise InvariantViolation(f"v3 = {v3} is not an integer")
    return KnotInvariants(a2, v1, vp1, vpp1, vppp1, w3, a2, v3.numerator)


def _require_two_component_resolution(t: SkeinTriple) -> None:
    count = t.resolved.component_count
    if count != 2:
        raise WrongComponentCount(f"resolved diagram has {count} components, expected 2")


def _require_knots(t: SkeinTriple) -> None:
    for side, diagram in (("L+", t.positive), ("L-", t.negative)):
        if not diagram.is_knot:
            raise WrongComponentCount(f"{side} has {diagram.component_count} components, expected a knot")


@dataclass
class CrossingChangeReport:
    """Both sides of the w3 crossing-change formula and of Hoste's relation at one site"""

    site: int
    w3_positive: Fraction
    w3_negative: Fraction
    a2_positive: int
    a2_negative: int
    a2_first: int
    a2_second: int
    lk: int

    @property
    def lhs(self) -> Fraction:
        return self.w3_positive - self.w3_negative

    @property
    def rhs(self) -> Fraction:
        return (
            Fraction(self.a2_first + self.a2_second, 2)
            - Fraction(self.a2_positive + self.a2_negative + self.lk ** 2, 4)
        )

    @property
    def residual(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.residual == 0

    @property
    def hoste_residual(self) -> int:
        return self.lk - (self.a2_positive - self.a2_negative)

    @property
    def hoste_holds(self) -> bool:
        return self.hoste_residual == 0


def crossing_change_report(t: SkeinTriple, method: str = DEFAULT_METHOD) -> CrossingChangeReport:
    _require_knots(t)
    _require_two_component_resolution(t)

    positive = invariants(t.positive, method)
    negative = invariants(t.negative, method)
    first = alexander(component_subdiagram(t.resolved, 0)).a2
    second = alexander(component_subdiagram(t.resolved, 1)).a2
    lk = linking_number(t.resolved, 0, 1)

    report = CrossingChangeReport(
        t.site, positive.w3, negative.w3, positive.a2, negative.a2, first, second, lk
    )
    if not report.holds:
        logger.warning(f"w3 crossing-change residual {report.residual} at crossing {t.site}")
    return report


def w3_crossing_change_check(t: SkeinTriple, method: str = DEFAULT_METHOD) -> bool:
    return crossing_change_report(t, method).holds


def hoste_check(t: SkeinTriple, method: str = DEFAULT_METHOD) -> bool:
    return crossing_change_report(t, method).hoste_holds


@dataclass
class IdentityCheck:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def residual(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.residual == 0


@dataclass
class MurakamiReport:
    site: int
    lk: int
    a2_first: int
    a2_second: int
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.holds for check in self.checks)

    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.holds]


def murakami_link_checks(t: SkeinTriple, method: str = DEFAULT_METHOD) -> MurakamiReport:
    """Value, first and second derivative at 1 of the Jones polynomial of the resolved 2-component link"""
    _require_two_component_resolution(t)
    link = t.resolved
    v0, vp0, vpp0, _ = jones_derivatives(link, method)
    lk = linking_number(link, 0, 1)
    first = alexander(component_subdiagram(link, 0)).a2
    second = alexander(component_subdiagram(link, 1)).a2

    checks = [
        IdentityCheck("V0(1)", v0, Fraction(-2)),
        IdentityCheck("V0'(1)", vp0, Fraction(-3 * lk)),
        IdentityCheck(
            "V0''(1)",
            vpp0,
            Fraction(-1, 2) + 3 * lk + 12 * (first + second) - 6 * lk ** 2,
        ),
    ]
    return MurakamiReport(t.site, lk, first, second, checks)
