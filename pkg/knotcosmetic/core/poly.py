"""
Exact Laurent polynomials in q = t^(1/2) with big-integer coefficients
"""

import logging
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

logger = logging.getLogger(__name__)

# Every evaluated quantity (derivatives at t = 1, w3, lambda_2 differences)
ExactRational = Fraction

Scalar = Union[int, "HalfIntLaurent"]

SUPPORTED_DERIVATIVE_ORDERS = (0, 1, 2, 3)


class HalfIntLaurent:
    """
    Immutable Laurent polynomial sum(c_e * q^e) where q = t^(1/2).

    Exponents are stored doubled: key e stands for t^(e/2), so odd keys are
    half-integer powers of t. Coefficients are Python ints and never zero.
    The same container holds Kauffman brackets, where the key is read as a
    power of A instead (see jones.BracketPoly).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        cleaned: Dict[int, int] = {}
        for exponent, coefficient in (terms or {}).items():
            if coefficient:
                cleaned[int(exponent)] = int(coefficient)
        self._terms = cleaned
        self._hash: Optional[int] = None

    # construction

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "HalfIntLaurent":
        """coefficient * q^exponent"""
        return cls({exponent: coefficient})

    @classmethod
    def t_power(cls, k: int, coefficient: int = 1) -> "HalfIntLaurent":
        """coefficient * t^k for integer k"""
        return cls({2 * k: coefficient})

    @classmethod
    def from_t_terms(cls, terms: Mapping[int, int]) -> "HalfIntLaurent":
        """Build from {integer t-exponent: coefficient}"""
        return cls({2 * k: c for k, c in terms.items()})

    @staticmethod
    def _coerce(value) -> Optional["HalfIntLaurent"]:
        if isinstance(value, HalfIntLaurent):
            return value
        if isinstance(value, int):
            return HalfIntLaurent({0: value})
        return None

    # inspection

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[int, int]]:
        """(doubled exponent, coefficient) pairs in increasing exponent order"""
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def has_integer_t_powers(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return HalfIntLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "HalfIntLaurent":
        return HalfIntLaurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return HalfIntLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HalfIntLaurent":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "HalfIntLaurent":
        """Multiply by q^k"""
        return HalfIntLaurent({e + k: c for e, c in self._terms.items()})

    def invert_variable(self) -> "HalfIntLaurent":
        """Substitute t -> t^-1"""
        return HalfIntLaurent({-e: c for e, c in self._terms.items()})

    def exact_divide(self, divisor: "HalfIntLaurent") -> "HalfIntLaurent":
        """
        Quotient of an exact division in the Laurent ring over the integers.

        Raises ValueError when divisor does not divide self with an integer
        Laurent quotient.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO

        lead_exp = divisor.max_exponent
        lead_coef = divisor._terms[lead_exp]
        lowest_shift = self.min_exponent - divisor.min_exponent
        remainder = dict(self._terms)
        quotient: Dict[int, int] = {}

        while remainder:
            top = max(remainder)
            shift = top - lead_exp
            if shift < lowest_shift:
                raise ValueError(f"{divisor} does not divide {self}")
            factor, rest = divmod(remainder[top], lead_coef)
            if rest:
                raise ValueError(f"{divisor} does not divide {self} over the integers")
            quotient[shift] = factor
            for e, c in divisor._terms.items():
                k = e + shift
                value = remainder.get(k, 0) - factor * c
                if value:
                    remainder[k] = value
                else:
                    remainder.pop(k, None)

        return HalfIntLaurent(quotient)

    # evaluation at t = 1

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def derivative_at_one(self, order: int) -> Fraction:
        """
        k-th t-derivative of sum(c_e t^(e/2)) evaluated at t = 1.

        Returns sum(c_e * (e/2)(e/2 - 1)...(e/2 - k + 1)) exactly.
        """
        if order not in SUPPORTED_DERIVATIVE_ORDERS:
            raise ValueError(f"derivative order must be one of {SUPPORTED_DERIVATIVE_ORDERS}, got {order}")
        total = Fraction(0)
        for e, c in self._terms.items():
            x = Fraction(e, 2)
            falling = Fraction(1)
            for j in range(order):
                falling *= x - j
            total += c * falling
        return total

    # comparison and display

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the ints they equal
            if set(self._terms) <= {0}:
                self._hash = hash(self._terms.get(0, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"HalfIntLaurent({dict(self.items())!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, variable: str = "t", doubled: bool = True) -> str:
        """
        Canonical rendering, highest exponent first, e.g. "-t^4 + t^3 + t".

        With doubled=True keys are read as halves (t-powers of a q-polynomial);
        with doubled=False keys are printed as they are (bracket variable A).
        """
        if not self._terms:
            return "0"
        parts: List[str] = []
        for e, c in sorted(self._terms.items(), reverse=True):
            power = _render_power(variable, e, doubled)
            magnitude = abs(c)
            if power and magnitude == 1:
                body = power
            elif power:
                body = f"{magnitude}*{power}"
            else:
                body = str(magnitude)
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)


def _render_power(variable: str, exponent: int, doubled: bool) -> str:
    if doubled and exponent % 2:
        return f"{variable}^({exponent}/2)"
    k = exponent // 2 if doubled else exponent
    if k == 0:
        return ""
    if k == 1:
        return variable
    return f"{variable}^{k}"


ZERO = HalfIntLaurent()
ONE = HalfIntLaurent({0: 1})
Q = HalfIntLaurent({1: 1})
T = HalfIntLaurent({2: 1})


def add(a: HalfIntLaurent, b: HalfIntLaurent) -> HalfIntLaurent:
    return a + b


def mul(a: HalfIntLaurent, b: HalfIntLaurent) -> HalfIntLaurent:
    return a * b


def derivative_at_one(p: HalfIntLaurent, order: int) -> Fraction:
    return p.derivative_at_one(order)


def format_rational(value: Fraction) -> str:
    """Render an exact rational as "num/den" (denominator always shown)"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
