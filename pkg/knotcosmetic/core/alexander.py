"""
Normalized Alexander polynomial from the Fox Jacobian of the Wirtinger presentation
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence

from ..exceptions import InvariantViolation, NotAKnot
from .diagram import PlanarDiagram
from .poly import ONE, T, ZERO, HalfIntLaurent

logger = logging.getLogger(__name__)

ONE_MINUS_T = HalfIntLaurent({0: 1, 2: -1})


@dataclass(frozen=True)
class AlexanderData:
    """Symmetric Alexander polynomial with delta(1) = 1 and its Conway a2"""

    delta: HalfIntLaurent
    a2: int

    @property
    def second_derivative(self) -> Fraction:
        """delta''(1), always 2 * a2"""
        return self.delta.derivative_at_one(2)


def _arcs(d: PlanarDiagram) -> Dict[int, int]:
    """Edge label -> arc index; an arc runs between two undercrossings"""
    parent: Dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, dd in d.crossings:
        find(a)
        find(c)
        parent[find(b)] = find(dd)

    roots: Dict[int, int] = {}
    arc_of: Dict[int, int] = {}
    for label in sorted(parent):
        root = find(label)
        if root not in roots:
            roots[root] = len(roots)
        arc_of[label] = roots[root]
    return arc_of


def alexander_matrix(d: PlanarDiagram) -> List[List[HalfIntLaurent]]:
    """
    One row per crossing, one column per arc.

    Positive crossing: 1 - t on the over arc, t on the incoming under arc,
    -1 on the outgoing one. Negative crossings swap the last two.
    """
    arc_of = _arcs(d)
    size = len(set(arc_of.values()))
    rows = []
    for (a, b, c, _), sign in zip(d.crossings, d.signs):
        row = [ZERO] * size
        over, incoming, outgoing = arc_of[b], arc_of[a], arc_of[c]
        row[over] = row[over] + ONE_MINUS_T
        if sign > 0:
            row[incoming] = row[incoming] + T
            row[outgoing] = row[outgoing] - ONE
        else:
            row[incoming] = row[incoming] - ONE
            row[outgoing] = row[outgoing] + T
        rows.append(row)
    return rows


def determinant(matrix: Sequence[Sequence[HalfIntLaurent]]) -> HalfIntLaurent:
    """Fraction-free (Bareiss) determinant over Z[t, t^-1]"""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return ONE
    sign = 1
    previous = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).exact_divide(previous)
        previous = pivot
    return m[n - 1][n - 1] * sign


def normalize(raw: HalfIntLaurent) -> HalfIntLaurent:
    """Multiply by the unit +-t^k making the polynomial symmetric with value 1 at t = 1"""
    if raw.is_zero():
        raise InvariantViolation("Alexander determinant vanished")
    low, high = raw.min_exponent, raw.max_exponent
    if (high - low) % 4:
        raise InvariantViolation(f"Alexander polynomial {raw} has odd span")
    centred = raw.shift(-(low + high) // 2)
    value = centred.evaluate_at_one()
    if value not in (1, -1):
        raise InvariantViolation(f"Alexander polynomial {raw} has value {value} at t = 1")
    if value < 0:
        centred = -centred
    if centred != centred.invert_variable():
        raise InvariantViolation(f"Alexander polynomial {centred} is not symmetric")
    return centred


def alexander(d: PlanarDiagram) -> AlexanderData:
    if d.component_count != 1:
        raise NotAKnot(f"Alexander polynomial needs a knot, diagram has {d.component_count} components")
    if not d.crossings:
        return AlexanderData(ONE, 0)

    matrix = alexander_matrix(d)
    minor = [row[:-1] for row in matrix[:-1]]
    delta = normalize(determinant(minor))

    twice_a2 = delta.derivative_at_one(2)
    if twice_a2.denominator != 1 or twice_a2.numerator % 2:
        raise InvariantViolation(f"delta''(1) = {twice_a2} is not an even integer")
    logger.debug(f"Alexander polynomial {delta} from a {len(minor)}x{len(minor)} minor")
    return AlexanderData(delta, twice_a2.numerator // 2)


def conway_a2(d: PlanarDiagram) -> int:
    return alexander(d).a2
