"""Exact arithmetic in Q(sqrt 5) on the basis {1, phi}.

Every element is stored as ``a + b*phi`` with rational ``a`` and ``b``.
Because ``phi`` is irrational the pair ``(a, b)`` is unique, so equality and
the zero test are exact and component-wise.  Products are reduced with
``phi**2 = phi + 1``; inverses go through the field conjugate
``(a + b) - b*phi`` and the norm ``a**2 + a*b - b**2``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

from .errors import ParseError
from .fibonacci import fib_pair

PHI_FLOAT = (1.0 + math.sqrt(5.0)) / 2.0
_SQRT5 = math.sqrt(5.0)


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a valid coefficient")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid rational {value!r}") from exc
    raise TypeError(f"coefficient must be rational, got {type(value).__name__}")


class GoldenNumber:
    """An exact element ``a + b*phi`` of Q(sqrt 5).

    >>> phi = GoldenNumber(0, 1)
    >>> phi * phi
    GoldenNumber('1 + 1*phi')
    >>> 1 / phi
    GoldenNumber('-1 + 1*phi')
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "_a", _frac(a))
        object.__setattr__(self, "_b", _frac(b))

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction) -> GoldenNumber:
        obj = object.__new__(cls)
        object.__setattr__(obj, "_a", a)
        object.__setattr__(obj, "_b", b)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNumber is immutable")

    def __reduce__(self):
        return (GoldenNumber, (self._a, self._b))

    @property
    def a(self) -> Fraction:
        """Rational coefficient of 1."""
        return self._a

    @property
    def b(self) -> Fraction:
        """Rational coefficient of phi."""
        return self._b

    @classmethod
    def coerce(cls, value) -> GoldenNumber:
        """Return ``value`` as a GoldenNumber (accepts ints, Fractions, strings)."""
        if isinstance(value, GoldenNumber):
            return value
        if isinstance(value, str):
            return parse_golden(value)
        return cls._raw(_frac(value), Fraction(0))

    # field structure

    def conjugate(self) -> GoldenNumber:
        """Image under phi -> 1 - phi, i.e. ``(a + b) - b*phi``."""
        return GoldenNumber._raw(self._a + self._b, -self._b)

    def norm(self) -> Fraction:
        """Field norm ``a**2 + a*b - b**2`` (product with the conjugate)."""
        a, b = self._a, self._b
        return a * a + a * b - b * b

    def inverse(self) -> GoldenNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GoldenNumber division by zero")
        return GoldenNumber._raw((self._a + self._b) / n, -self._b / n)

    def times_phi(self) -> GoldenNumber:
        """Multiply by phi: ``(a + b*phi)*phi = b + (a + b)*phi``."""
        return GoldenNumber._raw(self._b, self._a + self._b)

    def scale(self, k) -> GoldenNumber:
        """Multiply both coefficients by the rational ``k``."""
        return GoldenNumber._raw(self._a * k, self._b * k)

    def is_rational(self) -> bool:
        return self._b == 0

    def sign(self) -> int:
        """Exact sign (-1, 0 or 1) of the real number ``a + b*phi``."""
        # 2*(a + b*phi) = p + q*sqrt(5)
        p = 2 * self._a + self._b
        q = self._b
        sp = (p > 0) - (p < 0)
        sq = (q > 0) - (q < 0)
        if sp == 0 or sq == 0 or sp == sq:
            return sp or sq
        return sp if p * p > 5 * q * q else sq

    # arithmetic protocol

    def __add__(self, other):
        if not isinstance(other, GoldenNumber):
            try:
                other = GoldenNumber.coerce(other)
            except TypeError:
                return NotImplemented
        return GoldenNumber._raw(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GoldenNumber):
            try:
                other = GoldenNumber.coerce(other)
            except TypeError:
                return NotImplemented
        return GoldenNumber._raw(self._a - other._a, self._b - other._b)

    def __rsub__(self, other):
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GoldenNumber._raw(-self._a, -self._b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, GoldenNumber):
            if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
                return self.scale(other)
            try:
                other = GoldenNumber.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        bb = b1 * b2
        return GoldenNumber._raw(a1 * a2 + bb, a1 * b2 + a2 * b1 + bb)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = ONE
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GoldenNumber):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def _cmp(self, other):
        if not isinstance(other, GoldenNumber):
            if not isinstance(other, (int, Fraction)) or isinstance(other, bool):
                return None
            other = GoldenNumber.coerce(other)
        return (self - other).sign()

    def __lt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s >= 0

    def __bool__(self):
        return bool(self._a) or bool(self._b)

    def __float__(self):
        return golden_to_float(self)

    def __complex__(self):
        return complex(golden_to_float(self))

    def __str__(self):
        a, b = self._a, self._b
        if b == 0:
            return str(a)
        if a == 0:
            return f"{b}*phi"
        if b < 0:
            return f"{a} - {-b}*phi"
        return f"{a} + {b}*phi"

    def __repr__(self):
        return f"GoldenNumber('{self}')"


ZERO = GoldenNumber._raw(Fraction(0), Fraction(0))
ONE = GoldenNumber._raw(Fraction(1), Fraction(0))
PHI = GoldenNumber._raw(Fraction(0), Fraction(1))


def golden_add(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return x + y


def golden_mul(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return x * y


def golden_inv(x: GoldenNumber) -> GoldenNumber:
    """Multiplicative inverse; raises ``ZeroDivisionError`` for zero."""
    return x.inverse()


def golden_to_float(x: GoldenNumber) -> float:
    """Evaluate ``a + b*phi`` as a double.

    Opposite-signed terms are combined through the norm so that values
    such as ``phi**-40`` keep full relative precision.
    """
    p = 2 * x.a + x.b
    q = x.b
    if p == 0 or q == 0 or (p > 0) == (q > 0):
        return (float(p) + float(q) * _SQRT5) / 2.0
    # (p + q*sqrt5)/2 = (p**2 - 5 q**2) / (2 (p - q*sqrt5)), no cancellation
    num = p * p - 5 * q * q
    return float(num) / (2.0 * (float(p) - float(q) * _SQRT5))


def phi_power(n: int) -> GoldenNumber:
    """Exact ``phi**n`` as ``F(n-1) + F(n)*phi``, for any integer ``n``."""
    f_prev, f_n = fib_pair(n - 1)
    return GoldenNumber._raw(Fraction(f_prev), Fraction(f_n))


_NUM = r"\d+(?:\.\d*)?(?:/\d+)?|\.\d+(?:/\d+)?"
_TERM = re.compile(
    rf"\s*(?P<sign>[+-])?\s*(?:(?P<coef>{_NUM})\s*(?P<star>\*)?\s*)?(?P<phi>phi)?\s*",
    re.IGNORECASE,
)


def parse_golden(text: str) -> GoldenNumber:
    """Parse ``"a + b*phi"`` (either term order, optional whitespace).

    >>> parse_golden("2*phi - 3/2")
    GoldenNumber('-3/2 + 2*phi')
    >>> parse_golden("phi + 1") == parse_golden("1 + 1*phi")
    True
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    s = text.strip()
    if not s:
        raise ParseError("empty GoldenNumber literal")
    a = Fraction(0)
    b = Fraction(0)
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"cannot parse GoldenNumber {text!r} at offset {pos}")
        sign, coef, star, phi = m.group("sign", "coef", "star", "phi")
        if sign is None and not first:
            raise ParseError(f"missing operator in {text!r} at offset {pos}")
        if coef is None and phi is None:
            raise ParseError(f"dangling sign in {text!r}")
        if star and not phi:
            raise ParseError(f"'*' must be followed by phi in {text!r}")
        try:
            value = Fraction(coef) if coef is not None else Fraction(1)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid coefficient {coef!r} in {text!r}") from exc
        if sign == "-":
            value = -value
        if phi:
            b += value
        else:
            a += value
        pos = m.end()
        first = False
    return GoldenNumber._raw(a, b)
