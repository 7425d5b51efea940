"""Exact arithmetic on numbers of the form (a + b*sqrt(d)) / c.

Every value is kept in a canonical form: integer ``a``, ``b``, positive
``c``, square-free ``d >= 0``, ``gcd(a, b, c) == 1`` (zero is stored as
0/1), and ``d == 0`` whenever ``b == 0``.  Canonical form makes equality
structural and lets comparison, floor and fractional part be decided
with integer arithmetic only -- no floating point is involved anywhere.

Two irrational values can be combined only when they live in the same
quadratic field (equal radicand); a rational operand is compatible with
everything.
"""

from __future__ import annotations

import math
import re
from functools import total_ordering

from .errors import DomainError, FieldMismatchError, ParseError


def _squarefree_split(n: int) -> tuple[int, int]:
    """Write ``n = s*s*f`` with ``f`` square-free; return ``(s, f)``."""
    s, f = 1, 1
    k = 2
    while k * k <= n:
        if n % k == 0:
            e = 0
            while n % k == 0:
                n //= k
                e += 1
            s *= k ** (e // 2)
            if e % 2:
                f *= k
        k += 1 if k == 2 else 2
    return s, f * n


@total_ordering
class QuadNumber:
    """An exact real (a + b*sqrt(d)) / c with integer coefficients."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int = 0, d: int = 0, c: int = 1) -> None:
        for name, value in (("a", a), ("b", b), ("d", d), ("c", c)):
            if not isinstance(value, int):
                raise TypeError(f"coefficient {name} must be an int, got {value!r}")
        if c == 0:
            raise DomainError("denominator of a quadratic number cannot be zero")
        if d < 0:
            raise DomainError("radicand of a quadratic number cannot be negative")
        if c < 0:
            a, b, c = -a, -b, -c
        if b == 0:
            d = 0
        elif d == 0:
            b = 0
        else:
            s, d = _squarefree_split(d)
            b *= s
            if d == 1:
                a, b, d = a + b, 0, 0
        g = math.gcd(math.gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    # -- construction ----------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "QuadNumber":
        return cls(n)

    @classmethod
    def from_fraction(cls, numerator: int, denominator: int) -> "QuadNumber":
        return cls(numerator, 0, 0, denominator)

    _RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")
    _QUAD_RE = re.compile(
        r"^\(([+-]?\d+)([+-]\d+)\*sqrt\((\d+)\)\)(?:/([+-]?\d+))?$"
    )

    @classmethod
    def parse(cls, text: str) -> "QuadNumber":
        """Parse ``"(a+b*sqrt(d))/c"`` or ``"p/q"`` or a bare integer."""
        compact = "".join(text.split())
        m = cls._RATIONAL_RE.match(compact)
        if m:
            p, q = m.group(1), m.group(2)
            return cls(int(p), 0, 0, int(q) if q is not None else 1)
        m = cls._QUAD_RE.match(compact)
        if m:
            a, b, d, c = m.groups()
            return cls(int(a), int(b), int(d), int(c) if c is not None else 1)
        bad = next((ch for ch in compact if ch not in "0123456789+-*/()sqrt"), None)
        if bad is not None:
            raise ParseError(f"invalid token {bad!r} in quadratic literal {text!r}")
        raise ParseError(
            f"malformed quadratic literal {text!r}; expected '(a+b*sqrt(d))/c' or 'p/q'"
        )

    # -- predicates ------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.c == 1

    def __bool__(self) -> bool:
        return not (self.a == 0 and self.b == 0)

    # -- field compatibility ---------------------------------------------

    def _common_d(self, other: "QuadNumber") -> int:
        if self.d == other.d:
            return self.d
        if self.d == 0:
            return other.d
        if other.d == 0:
            return self.d
        raise FieldMismatchError(
            f"cannot combine sqrt({self.d}) with sqrt({other.d})"
        )

    @staticmethod
    def _coerce(value: "QuadNumber | int") -> "QuadNumber | None":
        if isinstance(value, QuadNumber):
            return value
        if isinstance(value, int):
            return QuadNumber(value)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QuadNumber | int") -> "QuadNumber":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        d = self._common_d(rhs)
        return QuadNumber(
            self.a * rhs.c + rhs.a * self.c,
            self.b * rhs.c + rhs.b * self.c,
            d,
            self.c * rhs.c,
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadNumber":
        return QuadNumber(-self.a, -self.b, self.d, self.c)

    def __sub__(self, other: "QuadNumber | int") -> "QuadNumber":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: "QuadNumber | int") -> "QuadNumber":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: "QuadNumber | int") -> "QuadNumber":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        d = self._common_d(rhs)
        return QuadNumber(
            self.a * rhs.a + self.b * rhs.b * d,
            self.a * rhs.b + self.b * rhs.a,
            d,
            self.c * rhs.c,
        )

    __rmul__ = __mul__

    def _inverse(self) -> "QuadNumber":
        if not self:
            raise ZeroDivisionError("division by zero quadratic number")
        norm = self.a * self.a - self.b * self.b * self.d
        return QuadNumber(self.a * self.c, -self.b * self.c, self.d, norm)

    def __truediv__(self, other: "QuadNumber | int") -> "QuadNumber":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        self._common_d(rhs)
        return self * rhs._inverse()

    def __rtruediv__(self, other: "QuadNumber | int") -> "QuadNumber":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    # -- order -------------------------------------------------------------

    def _sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: decided by a*a versus b*b*d (never equal for
        # square-free d >= 2 with b != 0)
        lhs, rhs = a * a, b * b * d
        if a > 0:
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other) if isinstance(other, (QuadNumber, int)) else None
        if rhs is None:
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (rhs.a, rhs.b, rhs.c, rhs.d)

    def __lt__(self, other: "QuadNumber | int") -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs)._sign() < 0

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    # -- floor / fractional part -------------------------------------------

    def floor(self) -> int:
        """The unique integer ``n`` with ``n <= self < n + 1``."""
        t = self.b * self.b * self.d
        s = math.isqrt(t)
        if self.b >= 0:
            numerator = self.a + s
        else:
            numerator = self.a - s - (0 if s * s == t else 1)
        return numerator // self.c

    def frac(self) -> "QuadNumber":
        """Fractional part ``self - floor(self)``, always in [0, 1)."""
        return QuadNumber(self.a - self.floor() * self.c, self.b, self.d, self.c)

    # -- conversions ---------------------------------------------------------

    def __float__(self) -> float:
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"
        return f"({self.a}{self.b:+d}*sqrt({self.d}))/{self.c}"

    def __repr__(self) -> str:
        return f"QuadNumber({self.a}, {self.b}, {self.d}, {self.c})"


ZERO = QuadNumber(0)
ONE = QuadNumber(1)
