"""Exact arithmetic over the quadratic field Q[sqrt(d)].

Every geometric decision downstream (unit length, orientation, crossing)
reduces to sign computations on values ``a + b*sqrt(d)`` with rational
``a, b``.  Signs are decided by integer comparisons only; no floating
point is ever consulted.
"""

from __future__ import annotations

from fractions import Fraction

# Rationals are plain ``fractions.Fraction``: arbitrary precision,
# positive denominator, always reduced.
Rational = Fraction


class DiscriminantMismatch(ValueError):
    """Two operands live in different quadratic fields Q[sqrt(d)]."""


def is_square_free(d: int) -> bool:
    if d % 4 == 0:
        return False
    p = 3
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 2
    return True


def _check_discriminant(d: int) -> None:
    if d < 2 or not is_square_free(d):
        raise ValueError(f"discriminant must be 0 or a square-free integer >= 2, got {d}")


class QuadExt:
    """The real number a + b*sqrt(d), immutable and canonical.

    Canonical form: ``b == 0`` iff ``d == 0`` (a pure rational always has
    d = 0), and d = 1 is folded into the rational part on construction.
    Values with d = 0 mix freely with any discriminant; two values with
    distinct nonzero discriminants do not combine.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if b == 0:
            d = 0
        elif d == 0:
            raise ValueError("nonzero irrational part requires a discriminant")
        else:
            _check_discriminant(d)
        self.a = a
        self.b = b
        self.d = d

    # -- coercion ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other)
        return None

    def _join(self, other: "QuadExt") -> int:
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise DiscriminantMismatch(f"cannot combine sqrt({self.d}) with sqrt({other.d})")

    # -- field arithmetic ----------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self._join(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self._join(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._join(o)
        return QuadExt(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # norm a^2 - b^2 d vanishes only at 0 because d is square-free
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero in Q[sqrt(d)]")
        return QuadExt(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- sign and order ------------------------------------------------

    def sign(self) -> int:
        """Sign of a + b*sqrt(d), decided by integer comparisons."""
        if self.b == 0:
            return 0 if self.a == 0 else (1 if self.a > 0 else -1)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        sa = 1 if self.a > 0 else -1
        sb = 1 if self.b > 0 else -1
        if sa == sb:
            return sa
        # Opposite signs: |a| vs |b|sqrt(d), i.e. a^2 vs b^2 d cross-multiplied.
        lhs = self.a.numerator**2 * self.b.denominator**2
        rhs = self.b.numerator**2 * self.a.denominator**2 * self.d
        # lhs == rhs would force sqrt(d) rational; impossible for square-free d.
        return sa if lhs > rhs else sb

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.d == o.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- views ----------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def __float__(self) -> float:
        # display/diagnostics only; never used in predicates
        return float(self.a) + float(self.b) * self.d**0.5

    def __repr__(self):
        if self.b == 0:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        sep = "+" if self.b > 0 else "-"
        return f"{self.a}{sep}{abs(self.b)}*sqrt({self.d})"
