"""Exact rational arithmetic on the projective line.

Every invariant computed by this package is one of these values: a reduced
fraction p/q with arbitrary-precision integer parts, or the single point at
infinity, stored exactly as 1/0. There is no signed infinity; the projective
line has one. Values are immutable and safe to share between threads.
"""

from __future__ import annotations

from math import gcd

from .errors import IndeterminateSum, ZeroOverZero


class Fraction:
    """A reduced p/q with den >= 0; den == 0 encodes the infinite point.

    Construction normalizes: the sign lives on the numerator, gcd is
    divided out, any q = 0 collapses to the canonical 1/0, and (0, 0)
    is rejected.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if num == 0 and den == 0:
            raise ZeroOverZero("0/0 does not name a point on the projective line")
        if den == 0:
            num = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = gcd(num, den)
            if g > 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Fraction is immutable")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"Fraction({self.num}, {self.den})"

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __add__(self, other: "Fraction") -> "Fraction":
        if self.is_infinite and other.is_infinite:
            raise IndeterminateSum("inf + inf is not a projective point")
        if self.is_infinite or other.is_infinite:
            return INF
        return Fraction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "Fraction") -> "Fraction":
        return self + (-other)

    def __neg__(self) -> "Fraction":
        if self.is_infinite:
            return INF
        return Fraction(-self.num, self.den)

    def reciprocal(self) -> "Fraction":
        """1/x, with 1/0 = inf and 1/inf = 0."""
        if self.num == 0:
            return INF
        return Fraction(self.den, self.num)

    def neg_reciprocal(self) -> "Fraction":
        """-1/x, the quarter-turn map; sends 0 to inf and inf to 0."""
        return -self.reciprocal()

    def to_json(self) -> dict:
        # numerator/denominator as strings so big integers survive JSON
        return {"num": str(self.num), "den": str(self.den)}

    @classmethod
    def from_json(cls, obj: dict) -> "Fraction":
        return cls(int(obj["num"]), int(obj["den"]))


ZERO = Fraction(0, 1)
ONE = Fraction(1, 1)
INF = Fraction(1, 0)


def star(x: Fraction, y: Fraction) -> Fraction:
    """The harmonic-style product 1/(1/x + 1/y).

    Total on the projective line: a zero operand absorbs (result 0) and
    inf is the identity, so the inner sum never sees inf + inf.
    """
    if x.is_zero or y.is_zero:
        return ZERO
    return (x.reciprocal() + y.reciprocal()).reciprocal()
