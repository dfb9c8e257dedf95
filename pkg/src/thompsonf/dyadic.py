"""Exact dyadic rational numbers p / 2**k.

Breakpoint coordinates of the piecewise linear maps in this package are
always dyadic.  General rationals (fractions.Fraction) appear only as
evaluation inputs and outputs; arithmetic is done in Fraction and converted
back, so no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Dyadic:
    """A rational with a power-of-two denominator, normalized on construction.

    The value is numerator / 2**exponent with exponent >= 0.  Normalization
    makes the exponent minimal, so equal values have equal field pairs and
    instances can be compared and hashed structurally.
    """

    numerator: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError(f"exponent must be non-negative, got {self.exponent}")
        n, e = self.numerator, self.exponent
        if n == 0:
            e = 0
        else:
            while n % 2 == 0 and e > 0:
                n //= 2
                e -= 1
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "Dyadic":
        fr = Fraction(value)
        den = fr.denominator
        if den & (den - 1) != 0:
            raise ValueError(f"{fr} is not dyadic (denominator {den})")
        return cls(fr.numerator, den.bit_length() - 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def in_unit_interval(self) -> bool:
        return 0 <= self.numerator <= (1 << self.exponent)

    def __lt__(self, other: "Dyadic") -> bool:
        return self.as_fraction() < other.as_fraction()

    def __le__(self, other: "Dyadic") -> bool:
        return self.as_fraction() <= other.as_fraction()

    def __gt__(self, other: "Dyadic") -> bool:
        return other < self

    def __ge__(self, other: "Dyadic") -> bool:
        return other <= self

    def __str__(self) -> str:
        return str(self.as_fraction())


ZERO = Dyadic(0)
ONE = Dyadic(1)
