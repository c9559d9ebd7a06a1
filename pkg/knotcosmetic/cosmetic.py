"""
Purely cosmetic surgery obstruction

A knot with V''(1) != 0 or V'''(1) != 0 has no purely cosmetic surgeries, and
neither does a knot with tau != 0. Anything else is reported as
inconclusive together with the constraints a cosmetic pair would have to meet.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from .core.ftinv import KnotInvariants
from .core.poly import format_rational
from .exceptions import InvalidParameters, InvalidSlope
from .families import WhiteheadParams, whitehead_knot_invariants

logger = logging.getLogger(__name__)

REFERENCE_EXCEPTIONS = frozenset({
    "10_33", "10_118", "10_146",
    "11a_91", "11a_138", "11a_285",
    "11n_86", "11n_157",
})

SLOPE_CONSTRAINTS = "r' = -r with r = p/q, q^2 = -1 (mod p), tau = 0"


class VerdictStatus(Enum):
    OBSTRUCTED_JONES = "OBSTRUCTED_JONES"
    OBSTRUCTED_TAU = "OBSTRUCTED_TAU"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    witness: Optional[Tuple[str, str]] = None
    constraints: Optional[str] = None
    delta_second_derivative: int = 0

    def to_dict(self) -> Dict[str, object]:
        return {
            "status": self.status.value,
            "witness": {"quantity": self.witness[0], "value": self.witness[1]} if self.witness else None,
            "constraints": self.constraints,
            "d2Delta1": self.delta_second_derivative,
        }


def verdict(inv: KnotInvariants, tau: Optional[int] = None) -> Verdict:
    delta2 = inv.delta_second_derivative
    if inv.Vpp1 != 0:
        return Verdict(VerdictStatus.OBSTRUCTED_JONES, ("d2V1", format_rational(inv.Vpp1)), None, delta2)
    if inv.Vppp1 != 0:
        return Verdict(VerdictStatus.OBSTRUCTED_JONES, ("d3V1", format_rational(inv.Vppp1)), None, delta2)
    if tau is not None and tau != 0:
        return Verdict(VerdictStatus.OBSTRUCTED_TAU, ("tau", str(tau)), None, delta2)

    note = SLOPE_CONSTRAINTS if tau is not None else f"{SLOPE_CONSTRAINTS}; tau unknown"
    return Verdict(VerdictStatus.INCONCLUSIVE, None, note, delta2)


def whitehead_verdict(w: WhiteheadParams, tau: Optional[int] = None) -> Verdict:
    return verdict(whitehead_knot_invariants(w), tau)


@dataclass(frozen=True)
class SlopePair:
    """The candidate slope pair p/q and -p/q"""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise InvalidSlope(f"p must be positive, got {self.p}")
        if self.q == 0:
            raise InvalidSlope("q must be nonzero")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidSlope(f"p = {self.p} and q = {self.q} are not coprime")
        if (self.q * self.q + 1) % self.p:
            raise InvalidSlope(f"q^2 = {self.q * self.q} is not -1 mod {self.p}")

    @property
    def slopes(self) -> Tuple[Fraction, Fraction]:
        r = Fraction(self.p, self.q)
        return r, -r

    def to_list(self) -> List[int]:
        return [self.p, self.q]


def admissible_slopes(p_max: int) -> List[SlopePair]:
    """All (p, q) with 2 <= p <= p_max, 0 < q <= p, gcd(p, q) = 1 and q^2 = -1 mod p"""
    if p_max < 1:
        raise InvalidParameters(f"p_max must be at least 1, got {p_max}")
    pairs: List[SlopePair] = []
    for p in range(2, p_max + 1):
        q = np.arange(1, p + 1, dtype=np.int64)
        hits = q[(np.gcd(q, p) == 1) & ((q * q + 1) % p == 0)]
        pairs.extend(SlopePair(p, int(v)) for v in hits)
    logger.debug(f"{len(pairs)} admissible slope pairs up to p = {p_max}")
    return pairs


def lambda2_difference(w3: Fraction, s: SlopePair) -> Fraction:
    """lambda_2 of p/q surgery minus that of -p/q surgery"""
    return Fraction(w3) * 2 * s.q / s.p


def compare_with_reference(names: Iterable[str]) -> Dict[str, List[str]]:
    """Names missing from, or not in, the published exception list"""
    found = {name.strip() for name in names}
    return {
        "missing": sorted(REFERENCE_EXCEPTIONS - found),
        "unexpected": sorted(found - REFERENCE_EXCEPTIONS),
    }
