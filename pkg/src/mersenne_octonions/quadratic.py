"""Exact arithmetic in the quotient ring Q[L] / (L^2 - 3k*L + 2).

The residue class of L stands for the larger root lam1 of the
characteristic polynomial x^2 - 3k*x + 2, and its conjugate 3k - L
stands for the smaller root lam2.  Working in the quotient ring keeps
every Binet-style closed form exact.  This includes k = 1, where the
discriminant 9k^2 - 8 equals 1 and the ring splits with zero divisors
(L - 1)(L - 2) = 0; for that reason no general division is provided,
only the specific inversions the closed forms need (by the root
difference, via the discriminant, and by rational scalars).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class NonRationalError(ValueError):
    """Raised when a rational value is demanded of an element with a
    nonzero L-coordinate.  Carries the offending element."""

    def __init__(self, elem: "QuadElem"):
        self.elem = elem
        super().__init__(f"element is not rational: {elem}")


class RingMismatchError(ValueError):
    """Raised when two elements from rings with different k are combined."""


def discriminant(k: int) -> int:
    """Square of the root difference lam1 - lam2, always 9k^2 - 8."""
    return 9 * k * k - 8


@dataclass(frozen=True, eq=False)
class QuadElem:
    """Element a + b*L of Q[L]/(L^2 - 3k*L + 2), stored exactly.

    Immutable; all operations return new elements.  Mixed-k arithmetic
    raises RingMismatchError since it silently corrupts results
    otherwise.  int and Fraction operands are coerced to constants of
    the same ring; a rational-valued element (b = 0) compares and
    hashes equal to its rational value.
    """

    k: int
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            if self.k != other.k:
                # only rational values are comparable across rings
                return self.b == other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.k, self.a, self.b))

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.k != self.k:
                raise RingMismatchError(
                    f"cannot combine elements with k={self.k} and k={other.k}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(self.k, Fraction(other), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.k, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.k, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadElem(self.k, -self.a, -self.b)

    def __mul__(self, other):
        # (a1 + b1 L)(a2 + b2 L) with L^2 reduced to 3k L - 2.
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        bb = self.b * o.b
        return QuadElem(
            self.k,
            self.a * o.a - 2 * bb,
            self.a * o.b + self.b * o.a + 3 * self.k * bb,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadElem":
        if n < 0:
            raise ValueError("negative powers are not defined in this ring")
        result = one(self.k)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "QuadElem":
        """Swap the two roots: L -> 3k - L.  An involution fixing
        exactly the rational elements."""
        return QuadElem(self.k, self.a + 3 * self.k * self.b, -self.b)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational(self) -> Fraction:
        """Rational value of an element with zero L-coordinate."""
        if self.b != 0:
            raise NonRationalError(self)
        return self.a

    def __str__(self):
        return f"({self.a} + {self.b}*L | k={self.k})"


def lam(k: int) -> QuadElem:
    """The class of L, playing the larger characteristic root."""
    return QuadElem(k, Fraction(0), Fraction(1))


def one(k: int) -> QuadElem:
    return QuadElem(k, Fraction(1), Fraction(0))


def zero(k: int) -> QuadElem:
    return QuadElem(k, Fraction(0), Fraction(0))


def root_diff(k: int) -> QuadElem:
    """lam1 - lam2 = 2L - 3k; its square is the rational 9k^2 - 8."""
    return QuadElem(k, Fraction(-3 * k), Fraction(2))


def div_by_root_diff(x: QuadElem) -> QuadElem:
    """Exact division by lam1 - lam2.

    Multiplies by (2L - 3k)/(9k^2 - 8), the inverse of root_diff; works
    for every k >= 1 since the discriminant never vanishes on integers.
    """
    d = discriminant(x.k)
    y = x * root_diff(x.k)
    return QuadElem(x.k, y.a / d, y.b / d)
