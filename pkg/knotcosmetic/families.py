"""
Two-bridge knots in Conway form and twisted Whitehead doubles

K(b1, c1, ..., bm, cm) is the two-bridge knot with Conway form
C(2b1, 2c1, ..., 2bm, 2cm): |bi| full twists in the i-th b region and |cj|
full twists in the j-th c region. In the generated diagram a b region with
bi > 0 has negative crossings and a c region with cj > 0 positive ones.
Diagrams are generated for any parameters; Whitehead doubles of a
general companion exist only as closed formulas.
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

from .core.diagram import PlanarDiagram, from_pd
from .core.ftinv import IdentityCheck, KnotInvariants
from .core.poly import HalfIntLaurent
from .exceptions import (
    ContinuedFractionError,
    InvalidParameters,
    InvariantViolation,
    WrongGenus,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConwayFormParams:
    """Ordered nonzero pairs (bi, ci), i = 1..m"""

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(b), int(c)) for b, c in self.pairs)
        if not pairs:
            raise InvalidParameters("Conway form needs at least one (b, c) pair")
        if any(b == 0 or c == 0 for b, c in pairs):
            raise InvalidParameters(f"Conway form entries must be nonzero: {pairs}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_sequence(cls, values: Sequence[int]) -> "ConwayFormParams":
        values = list(values)
        if len(values) % 2:
            raise InvalidParameters(f"expected b1,c1,...,bm,cm, got {len(values)} values")
        return cls(tuple(zip(values[0::2], values[1::2])))

    @classmethod
    def parse(cls, text: str) -> "ConwayFormParams":
        """Parse "1,1,-2,1" style text"""
        tokens = [token for token in re.split(r"[\s,]+", text.strip()) if token]
        try:
            values = [int(token) for token in tokens]
        except ValueError:
            raise InvalidParameters(f"Conway form entries must be integers: {text!r}") from None
        return cls.from_sequence(values)

    @property
    def m(self) -> int:
        return len(self.pairs)

    @property
    def bs(self) -> Tuple[int, ...]:
        return tuple(b for b, _ in self.pairs)

    @property
    def cs(self) -> Tuple[int, ...]:
        return tuple(c for _, c in self.pairs)

    @property
    def flat(self) -> Tuple[int, ...]:
        return tuple(v for pair in self.pairs for v in pair)

    def __str__(self) -> str:
        return "K(" + ",".join(str(v) for v in self.flat) + ")"


# closed formulas; zero entries allowed so the recursions can reach x = 0

def _a2(bs: Sequence[int], cs: Sequence[int]) -> int:
    total = 0
    running = 0
    for b, c in zip(bs, cs):
        running += b
        total += c * running
    return -total


def _twice_v3(bs: Sequence[int], cs: Sequence[int]) -> int:
    prefix_b, suffix_c = [], []
    running = 0
    for b in bs:
        running += b
        prefix_b.append(running)
    running = 0
    for c in reversed(cs):
        running += c
        suffix_c.append(running)
    suffix_c.reverse()
    return sum(c * s * s for c, s in zip(cs, prefix_b)) - sum(b * s * s for b, s in zip(bs, suffix_c))


def _v3(bs: Sequence[int], cs: Sequence[int]) -> int:
    twice = _twice_v3(bs, cs)
    if twice % 2:
        raise InvariantViolation(f"v3 closed form is not an integer for b={list(bs)}, c={list(cs)}")
    return twice // 2


def _w3(bs: Sequence[int], cs: Sequence[int]) -> Fraction:
    return Fraction(-_twice_v3(bs, cs), 4)


def a2_closed(p: ConwayFormParams) -> int:
    return _a2(p.bs, p.cs)


def v3_closed(p: ConwayFormParams) -> int:
    return _v3(p.bs, p.cs)


def closed_form_invariants(p: ConwayFormParams) -> KnotInvariants:
    return KnotInvariants.from_closed_forms(a2_closed(p), v3_closed(p))


def continued_fraction(p: ConwayFormParams) -> Fraction:
    """[2b1, 2c1, ..., 2bm, 2cm] = 2b1 + 1/(2c1 + 1/(... + 1/(2cm)))"""
    entries = [2 * v for v in p.flat]
    value = Fraction(entries[-1])
    for position in range(len(entries) - 2, -1, -1):
        if value == 0:
            raise ContinuedFractionError(entries[position + 1:])
        value = entries[position] + 1 / value
    if value.numerator % 2 == 0 or value.denominator % 2:
        raise InvariantViolation(f"{p} gives {value}; expected odd numerator over even denominator")
    return value


# diagram generation

@dataclass(frozen=True)
class TwistRegion:
    kind: str  # "b" (vertical) or "c" (horizontal)
    index: int  # 1-based position in the Conway form
    crossings: Tuple[int, ...]
    sign: int


@dataclass(frozen=True)
class ConwayDiagram:
    diagram: PlanarDiagram
    regions: Tuple[TwistRegion, ...] = field(default_factory=tuple)

    @property
    def innermost_sites(self) -> Tuple[int, ...]:
        """Crossings of the last c region, where the x -> x - 1 step happens"""
        return self.regions[0].crossings if self.regions else ()


class _TangleBuilder:
    """
    Grows a rational tangle one crossing at a time from the 0 tangle.

    Crossing slots are numbered counterclockwise 0 = NW, 1 = SW, 2 = SE,
    3 = NE; slots 0/2 and 1/3 are the two strands through a crossing.
    Virtual ports stand for the arcs of the starting tangle.
    """

    def __init__(self):
        self.link: Dict[tuple, tuple] = {}
        self.inner = {
            ("v", "NW"): ("v", "NE"),
            ("v", "NE"): ("v", "NW"),
            ("v", "SW"): ("v", "SE"),
            ("v", "SE"): ("v", "SW"),
        }
        self.ends = {corner: ("v", corner) for corner in ("NW", "NE", "SW", "SE")}
        self.count = 0

    def _connect(self, p, q):
        self.link[p] = q
        self.link[q] = p

    def twist_right(self):
        x = self.count
        self.count += 1
        self._connect(self.ends["NE"], (x, 0))
        self._connect(self.ends["SE"], (x, 1))
        self.ends["NE"], self.ends["SE"] = (x, 3), (x, 2)

    def twist_below(self):
        x = self.count
        self.count += 1
        self._connect(self.ends["SW"], (x, 0))
        self._connect(self.ends["SE"], (x, 3))
        self.ends["SW"], self.ends["SE"] = (x, 1), (x, 2)

    def close(self):
        self._connect(self.ends["NW"], self.ends["SW"])
        self._connect(self.ends["NE"], self.ends["SE"])

    def _follow(self, port):
        target = self.link[port]
        while target[0] == "v":
            target = self.link[self.inner[target]]
        return target

    def orient(self):
        """Walk the closed curve; returns edge labels per port and entry slot per strand"""
        start = (0, 0)
        labels: Dict[tuple, int] = {}
        entry: Dict[Tuple[int, int], int] = {}
        port = start
        label = 0
        while True:
            x, slot = port
            entry[(x, slot % 2)] = slot
            leaving = (x, (slot + 2) % 4)
            arriving = self._follow(leaving)
            label += 1
            labels[leaving] = label
            labels[arriving] = label
            port = arriving
            if port == start:
                break
        if label != 2 * self.count:
            raise InvariantViolation(f"closure of {self.count} crossings is not a single curve")
        return labels, entry


def _pd_tuple(x: int, under_in: int, labels) -> Tuple[int, int, int, int]:
    return tuple(labels[(x, (under_in + k) % 4)] for k in range(4))


def _assemble(regions: Sequence[Tuple[str, int, int, int]]) -> ConwayDiagram:
    """regions: (kind, index, crossing count, target sign), innermost first"""
    builder = _TangleBuilder()
    placed: List[TwistRegion] = []
    targets: List[int] = []
    for kind, index, count, sign in regions:
        first = builder.count
        for _ in range(count):
            if kind == "c":
                builder.twist_right()
            else:
                builder.twist_below()
            targets.append(sign)
        placed.append(TwistRegion(kind, index, tuple(range(first, builder.count)), sign))
    builder.close()
    labels, entry = builder.orient()

    crossings = []
    for x, sign in enumerate(targets):
        strand_a, strand_b = entry[(x, 0)], entry[(x, 1)]
        # positive iff the over strand enters at the slot just clockwise of the under entry
        if (strand_b == (strand_a + 3) % 4) == (sign > 0):
            crossings.append(_pd_tuple(x, strand_a, labels))
        else:
            crossings.append(_pd_tuple(x, strand_b, labels))

    diagram = from_pd(crossings)
    if list(diagram.signs) != targets:
        raise InvariantViolation("generated crossing signs disagree with the twist template")
    return ConwayDiagram(diagram, tuple(placed))


def _regions_for(bs: Sequence[int], cs: Sequence[int]):
    regions = []
    for index in range(len(bs), 0, -1):
        b, c = bs[index - 1], cs[index - 1]
        if c:
            regions.append(("c", index, 2 * abs(c), 1 if c > 0 else -1))
        if b:
            regions.append(("b", index, 2 * abs(b), -1 if b > 0 else 1))
    return regions


def build_twobridge(p: ConwayFormParams) -> ConwayDiagram:
    conway = _assemble(_regions_for(p.bs, p.cs))
    logger.debug(f"{p}: {conway.diagram.n_crossings} crossings")
    return conway


def twobridge_diagram(p: ConwayFormParams) -> PlanarDiagram:
    return build_twobridge(p).diagram


def twist_knot_diagram(n: int) -> PlanarDiagram:
    """Positive clasp followed by |n| full twists; D+(unknot, n)"""
    return _assemble(_regions_for((int(n),), (1,))).diagram


# recursions

@dataclass
class RecursionReport:
    params: ConwayFormParams
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.holds for check in self.checks)

    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.holds]


def recursion_checks(p: ConwayFormParams) -> RecursionReport:
    """
    Check the last-twist recursions exactly.

    For every x between cm and 0: the single-clasp step
    w3(.., bm, x) - w3(.., bm, x - 1) = -(a2(x) + a2(x - 1) + B^2) / 4 with
    B = b1 + ... + bm, and a2(.., bm, x) = a2(prefix) - x B. Then the whole
    region: w3(K) - w3(prefix) = -(2 cm a2(prefix) - cm^2 B + cm B^2) / 4.
    """
    bs, cs = list(p.bs), list(p.cs)
    prefix_b, prefix_c = bs[:-1], cs[:-1]
    c_m = cs[-1]
    total_b = sum(bs)
    prefix_a2 = _a2(prefix_b, prefix_c)
    prefix_w3 = _w3(prefix_b, prefix_c)

    def with_x(x):
        return prefix_c + [x]

    report = RecursionReport(p)
    steps = range(c_m, 0, -1) if c_m > 0 else range(c_m + 1, 1)
    for x in steps:
        report.checks.append(IdentityCheck(
            f"single clasp x={x}",
            _w3(bs, with_x(x)) - _w3(bs, with_x(x - 1)),
            Fraction(-(_a2(bs, with_x(x)) + _a2(bs, with_x(x - 1)) + total_b ** 2), 4),
        ))
    for x in range(min(c_m, 0), max(c_m, 0) + 1):
        report.checks.append(IdentityCheck(
            f"a2 linear x={x}",
            Fraction(_a2(bs, with_x(x))),
            Fraction(prefix_a2 - x * total_b),
        ))
    report.checks.append(IdentityCheck(
        "untwisted last region",
        _w3(bs, with_x(0)),
        prefix_w3,
    ))
    report.checks.append(IdentityCheck(
        "whole last region",
        _w3(bs, cs) - prefix_w3,
        Fraction(-(2 * c_m * prefix_a2 - c_m ** 2 * total_b + c_m * total_b ** 2), 4),
    ))
    if p.m == 1:
        b, c = bs[0], cs[0]
        report.checks.append(IdentityCheck(
            "genus one base",
            _w3(bs, cs),
            Fraction(-(c * b * b - c * c * b), 4),
        ))
    return report


def genus2_form_check(p: ConwayFormParams) -> bool:
    """True iff p has the form K(x, y, -x-y, x)"""
    if p.m != 2:
        raise WrongGenus(f"genus-2 check needs m = 2, got m = {p.m}")
    (b1, c1), (b2, c2) = p.pairs
    return b1 == c2 and b1 + b2 + c1 == 0


def genus3_family(x: int) -> ConwayFormParams:
    """K(x, 1, -x, x, 1, -x), a genus-3 family with v3 = -x"""
    return ConwayFormParams.from_sequence((x, 1, -x, x, 1, -x))


# Whitehead doubles

@dataclass(frozen=True)
class WhiteheadParams:
    n: int
    companion_a2: int = 0


class WhiteheadInvariants(NamedTuple):
    a2: int
    v3: int
    alexander: HalfIntLaurent


def whitehead_invariants(w: WhiteheadParams) -> WhiteheadInvariants:
    """a2, v3 and Alexander polynomial of the positive n-twisted Whitehead double"""
    n = w.n
    twice = n * n - n
    delta = HalfIntLaurent.from_t_terms({1: -n, 0: 2 * n + 1, -1: -n})
    return WhiteheadInvariants(-n, -2 * w.companion_a2 + twice // 2, delta)


def whitehead_knot_invariants(w: WhiteheadParams) -> KnotInvariants:
    a2, v3, _ = whitehead_invariants(w)
    return KnotInvariants.from_closed_forms(a2, v3)
