"""
Jones polynomial through the Kauffman bracket

Bracket convention: at X(a,b,c,d) the A-smoothing joins (a,b) and (c,d), the
B-smoothing joins (a,d) and (b,c), and a closed loop is worth -A^2 - A^-2.
The Jones polynomial is (-A^3)^(-w) <D> with t = A^-4, so A^k becomes
t^(-k/4), i.e. doubled key -k/2.
"""

import itertools
import logging
from collections import Counter
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..exceptions import InvalidParameters, InvariantViolation
from .diagram import PlanarDiagram, SkeinTriple, writhe
from .poly import ONE, ZERO, HalfIntLaurent

logger = logging.getLogger(__name__)

# -A^2 - A^-2
LOOP_VALUE = HalfIntLaurent({2: -1, -2: -1})

DEFAULT_METHOD = "contraction"


class BracketMethod(Enum):
    CONTRACTION = "contraction"
    NAIVE = "naive"


class BracketPoly(HalfIntLaurent):
    """Kauffman bracket; keys are plain powers of A"""

    __slots__ = ()

    def to_text(self, variable: str = "A", doubled: bool = False) -> str:
        return super().to_text(variable, doubled)

    def __repr__(self) -> str:
        return f"BracketPoly({dict(self.items())!r})"


def contraction_order(d: PlanarDiagram) -> List[int]:
    """
    Greedy crossing order keeping the set of open edge labels small.

    Starts at crossing 0; each step takes the crossing that leaves the fewest
    open labels, lowest index first on ties.
    """
    if not d.crossings:
        return []
    frontier = _toggle(set(), d.crossings[0])
    order = [0]
    remaining = set(range(1, d.n_crossings))
    while remaining:
        best = min(remaining, key=lambda j: (len(_toggle(frontier, d.crossings[j])), j))
        frontier = _toggle(frontier, d.crossings[best])
        order.append(best)
        remaining.remove(best)
    return order


def _toggle(frontier, crossing):
    out = set(frontier)
    for label in crossing:
        out ^= {label}
    return out


def _join(match: Dict[int, int], u: int, v: int) -> int:
    """Connect label ends u and v; returns 1 when that closes a loop"""
    if u == v:
        return 1
    if match.get(u) == v:
        del match[u]
        del match[v]
        return 1
    end_u = match.pop(u, u)
    end_v = match.pop(v, v)
    match[end_u] = end_v
    match[end_v] = end_u
    return 0


def _pack(match: Dict[int, int]) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted((u, v) for u, v in match.items() if u < v))


def _unpack(key) -> Dict[int, int]:
    match = {}
    for u, v in key:
        match[u] = v
        match[v] = u
    return match


class BracketEvaluator:
    """
    Kauffman bracket evaluator.

    "contraction" sweeps crossings in contraction_order, merging partial
    states that leave the open labels connected the same way; "naive" sums
    all 2^n smoothings. states_evaluated and peak_states describe the last
    evaluation.
    """

    def __init__(self, method: str = DEFAULT_METHOD):
        try:
            self.method = BracketMethod(method)
        except ValueError:
            raise InvalidParameters(f"unknown bracket method {method!r}") from None
        self.states_evaluated = 0
        self.peak_states = 0

    def evaluate(self, d: PlanarDiagram) -> BracketPoly:
        self.states_evaluated = 0
        self.peak_states = 0

        if not d.crossings:
            value = LOOP_VALUE ** (d.free_loops - 1)
        elif self.method is BracketMethod.NAIVE:
            value = self._naive(d) * LOOP_VALUE ** d.free_loops
        else:
            value = self._contract(d) * LOOP_VALUE ** d.free_loops

        logger.debug(
            f"Bracket via {self.method.value}: {d.n_crossings} crossings, "
            f"{self.states_evaluated} states, peak {self.peak_states}"
        )
        return BracketPoly(value.terms)

    def _naive(self, d: PlanarDiagram) -> HalfIntLaurent:
        labels = sorted({label for x in d.crossings for label in x})
        tally: Counter = Counter()

        for state in itertools.product((1, -1), repeat=d.n_crossings):
            parent = {label: label for label in labels}

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for (a, b, c, dd), smoothing in zip(d.crossings, state):
                pairs = ((a, b), (c, dd)) if smoothing > 0 else ((a, dd), (b, c))
                for u, v in pairs:
                    parent[find(u)] = find(v)
            loops = len({find(label) for label in labels})
            tally[(sum(state), loops)] += 1
            self.states_evaluated += 1

        self.peak_states = 1
        total = ZERO
        for (exponent, loops), count in tally.items():
            total = total + HalfIntLaurent.monomial(count, exponent) * LOOP_VALUE ** (loops - 1)
        return total

    def _contract(self, d: PlanarDiagram) -> HalfIntLaurent:
        # key: (open-label matching, whether a loop has closed yet); the first
        # closed loop carries no factor
        states = {((), False): ONE}

        for i in contraction_order(d):
            a, b, c, dd = d.crossings[i]
            layer: Dict = {}
            for (key, closed), coefficient in states.items():
                for exponent, pairs in ((1, ((a, b), (c, dd))), (-1, ((a, dd), (b, c)))):
                    match = _unpack(key)
                    loops = 0
                    for u, v in pairs:
                        loops += _join(match, u, v)
                    weighted = loops if closed else max(loops - 1, 0)
                    value = coefficient.shift(exponent) * LOOP_VALUE ** weighted
                    new_key = (_pack(match), closed or loops > 0)
                    layer[new_key] = layer.get(new_key, ZERO) + value
            states = layer
            self.states_evaluated += len(states)
            self.peak_states = max(self.peak_states, len(states))

        leftover = [key for key in states if key != ((), True)]
        if leftover:
            raise InvariantViolation(f"bracket contraction left open labels: {leftover[0]}")
        return states[((), True)]


def kauffman_bracket(d: PlanarDiagram, method: str = DEFAULT_METHOD) -> BracketPoly:
    return BracketEvaluator(method).evaluate(d)


def jones_from_bracket(bracket: HalfIntLaurent, w: int) -> HalfIntLaurent:
    normalized = bracket.shift(-3 * w) * (-1 if w % 2 else 1)
    terms = {}
    for k, c in normalized.items():
        if k % 2:
            raise InvariantViolation(f"bracket term A^{k} has no t = A^-4 image")
        terms[-(k // 2)] = c
    return HalfIntLaurent(terms)


def jones(d: PlanarDiagram, method: str = DEFAULT_METHOD) -> HalfIntLaurent:
    """Jones polynomial in q = t^(1/2), V(unknot) = 1"""
    return jones_from_bracket(kauffman_bracket(d, method), writhe(d))


def jones_derivatives(
    d: PlanarDiagram, method: str = DEFAULT_METHOD, polynomial: Optional[HalfIntLaurent] = None
) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """(V(1), V'(1), V''(1), V'''(1)) exactly"""
    v = polynomial if polynomial is not None else jones(d, method)
    return tuple(v.derivative_at_one(k) for k in range(4))


def skein_residual(triple: SkeinTriple, method: str = DEFAULT_METHOD) -> HalfIntLaurent:
    """t^-1 V(L+) - t V(L-) - (t^(1/2) - t^(-1/2)) V(L0); zero when the skein relation holds"""
    v_pos = jones(triple.positive, method)
    v_neg = jones(triple.negative, method)
    v_zero = jones(triple.resolved, method)
    return v_pos.shift(-2) - v_neg.shift(2) - (v_zero.shift(1) - v_zero.shift(-1))
