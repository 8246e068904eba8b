"""Exact hyperbolic (split-complex) numbers.

A hyperbolic number ``a + b*k`` with ``k**2 == 1`` is stored in its idempotent
form ``nu1*e + nu2*e+`` where ``e = (1 + k)/2`` and ``e+ = (1 - k)/2`` is its
conjugate.  In that basis every ring operation is componentwise, so the
cartesian coordinates are only ever derived::

    a = (nu1 + nu2) / 2        nu1 = a + b
    b = (nu1 - nu2) / 2        nu2 = a - b

Coefficients are :class:`fractions.Fraction`, so equality is exact and the
zero-divisor tests that drive conditional probability never see rounding.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from numbers import Rational

from .errors import EmptySet, NotInvertible, ParseError

__all__ = [
    "HNum", "ZdClass", "OrderRel",
    "ZERO", "ONE", "E", "EDAG", "K",
    "add", "mul", "conj", "inverse", "classify", "compare",
    "is_nonneg", "is_strictly_positive_invertible", "in_zero_divisor_set",
    "hmod", "sup_d",
    "to_rational", "format_rational", "parse_rational", "parse_hnum",
]


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or rational string to a Fraction.

    Floats are refused: they would smuggle binary rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational coefficient")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``int`` or ``int/positive-int``; the result is in lowest terms."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"malformed rational {text!r}: zero denominator")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class HNum:
    """Immutable hyperbolic number ``nu1*e + nu2*e+``."""

    __slots__ = ("nu1", "nu2")

    def __init__(self, nu1=0, nu2=None):
        nu1 = to_rational(nu1)
        object.__setattr__(self, "nu1", nu1)
        object.__setattr__(self, "nu2", nu1 if nu2 is None else to_rational(nu2))

    @classmethod
    def _raw(cls, nu1: Fraction, nu2: Fraction) -> HNum:
        # Skips coercion; both arguments must already be Fractions.
        obj = object.__new__(cls)
        object.__setattr__(obj, "nu1", nu1)
        object.__setattr__(obj, "nu2", nu2)
        return obj

    @classmethod
    def from_cartesian(cls, a, b=0) -> HNum:
        a, b = to_rational(a), to_rational(b)
        return cls._raw(a + b, a - b)

    @classmethod
    def real(cls, x) -> HNum:
        x = to_rational(x)
        return cls._raw(x, x)

    def __setattr__(self, name, value):
        raise AttributeError("HNum is immutable")

    def __reduce__(self):
        return (HNum, (self.nu1, self.nu2))

    # cartesian view
    @property
    def a(self) -> Fraction:
        return (self.nu1 + self.nu2) / 2

    @property
    def b(self) -> Fraction:
        return (self.nu1 - self.nu2) / 2

    @property
    def cartesian(self) -> tuple[Fraction, Fraction]:
        return self.a, self.b

    @property
    def idempotent(self) -> tuple[Fraction, Fraction]:
        return self.nu1, self.nu2

    def is_real(self) -> bool:
        return self.nu1 == self.nu2

    def is_zero(self) -> bool:
        return not self.nu1 and not self.nu2

    # ring operations
    @staticmethod
    def _coerce(other):
        if isinstance(other, HNum):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            q = Fraction(other)
            return HNum._raw(q, q)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HNum._raw(self.nu1 + other.nu1, self.nu2 + other.nu2)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HNum._raw(self.nu1 - other.nu1, self.nu2 - other.nu2)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HNum._raw(self.nu1 * other.nu1, self.nu2 * other.nu2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return HNum._raw(-self.nu1, -self.nu2)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** -n
        return HNum._raw(self.nu1 ** n, self.nu2 ** n)

    def conj(self) -> HNum:
        return HNum._raw(self.nu2, self.nu1)

    def inverse(self) -> HNum:
        if not self.nu1 or not self.nu2:
            raise NotInvertible(f"{self.idempotent_str()} is not invertible "
                                f"({classify(self).value})")
        return HNum._raw(1 / self.nu1, 1 / self.nu2)

    def norm_sq(self) -> Fraction:
        """``z * conj(z)``, the real number ``a**2 - b**2``."""
        return self.nu1 * self.nu2

    # comparisons are structural; the partial order lives in compare()
    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.nu1 == other.nu1 and self.nu2 == other.nu2

    def __hash__(self):
        if self.nu1 == self.nu2:
            return hash(self.nu1)
        return hash((self.nu1, self.nu2))

    def __bool__(self):
        return not self.is_zero()

    # text
    def idempotent_str(self) -> str:
        return f"{format_rational(self.nu1)}*e + {format_rational(self.nu2)}*e+"

    def cartesian_str(self) -> str:
        return f"{format_rational(self.a)} + {format_rational(self.b)}*j"

    def __str__(self):
        return f"{self.idempotent_str()} = {self.cartesian_str()}"

    def __repr__(self):
        return f"HNum({format_rational(self.nu1)!r}, {format_rational(self.nu2)!r})"


ZERO = HNum(0, 0)
ONE = HNum(1, 1)
E = HNum(1, 0)
EDAG = HNum(0, 1)
K = HNum.from_cartesian(0, 1)


class ZdClass(enum.Enum):
    ZERO = "zero"
    INVERTIBLE = "invertible"
    ZD_E = "zd-e"
    ZD_EDAG = "zd-edag"


class OrderRel(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def add(x: HNum, y: HNum) -> HNum:
    return x + y


def mul(x: HNum, y: HNum) -> HNum:
    return x * y


def conj(z: HNum) -> HNum:
    return z.conj()


def inverse(z: HNum) -> HNum:
    return z.inverse()


def classify(z: HNum) -> ZdClass:
    if z.nu1:
        return ZdClass.INVERTIBLE if z.nu2 else ZdClass.ZD_E
    return ZdClass.ZD_EDAG if z.nu2 else ZdClass.ZERO


def in_zero_divisor_set(z: HNum) -> bool:
    """Membership in the zero-divisors together with 0."""
    return classify(z) is not ZdClass.INVERTIBLE


def is_nonneg(z: HNum) -> bool:
    return z.nu1 >= 0 and z.nu2 >= 0


def is_strictly_positive_invertible(z: HNum) -> bool:
    return z.nu1 > 0 and z.nu2 > 0


def compare(x: HNum, y: HNum) -> OrderRel:
    """Relate ``x`` to ``y`` under the componentwise partial order."""
    d1 = y.nu1 - x.nu1
    d2 = y.nu2 - x.nu2
    if d1 >= 0 and d2 >= 0:
        return OrderRel.EQUAL if not d1 and not d2 else OrderRel.LESS
    if d1 <= 0 and d2 <= 0:
        return OrderRel.GREATER
    return OrderRel.INCOMPARABLE


def hmod(z: HNum) -> HNum:
    """Hyperbolic-valued modulus ``|nu1|*e + |nu2|*e+``."""
    return HNum._raw(abs(z.nu1), abs(z.nu2))


def sup_d(values) -> HNum:
    values = list(values)
    if not values:
        raise EmptySet("sup_d of an empty collection")
    return HNum._raw(max(v.nu1 for v in values), max(v.nu2 for v in values))


_RAT = r"-?\d+(?:/\d+)?"
_IDEMPOTENT_RE = re.compile(rf"^\s*({_RAT})\s*\*\s*e\s*\+\s*({_RAT})\s*\*\s*e\+\s*$")
_CARTESIAN_RE = re.compile(rf"^\s*({_RAT})\s*\+\s*({_RAT})\s*\*\s*j\s*$")
_REAL_RE = re.compile(rf"^\s*({_RAT})\s*$")


def _parse_single(text: str) -> HNum:
    m = _IDEMPOTENT_RE.match(text)
    if m:
        return HNum(parse_rational(m.group(1)), parse_rational(m.group(2)))
    m = _CARTESIAN_RE.match(text)
    if m:
        return HNum.from_cartesian(parse_rational(m.group(1)),
                                   parse_rational(m.group(2)))
    m = _REAL_RE.match(text)
    if m:
        return HNum.real(parse_rational(m.group(1)))
    raise ParseError(f"cannot parse hyperbolic number {text!r}")


def parse_hnum(text: str) -> HNum:
    """Parse idempotent ``"p*e + q*e+"``, cartesian ``"a + b*j"``, a bare
    rational, or the dual rendering ``"<idempotent> = <cartesian>"``.

    For the dual rendering both halves must denote the same number.
    """
    if "=" in text:
        left, sep, right = text.partition("=")
        x, y = _parse_single(left), _parse_single(right)
        if x != y:
            raise ParseError(f"inconsistent dual rendering {text!r}")
        return x
    return _parse_single(text)
