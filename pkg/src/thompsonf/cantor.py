"""Rational points of the Cantor set {0,1}^omega and the action of F on them.

A rational point is an eventually periodic binary sequence v w w w ..., kept
in canonical form: the period w is primitive and letters of v are absorbed
into the period until the last letter of v differs from the last letter of w.
Canonical forms are unique, so structural equality decides point equality.

The generators of F act by rewriting a short prefix of the sequence; each
rule touches at most three leading letters, so the period is unrolled by at
most three letters before matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import Letter, Word


class PointSyntaxError(ValueError):
    """Raised for text that parses as neither v(w) form nor a fraction p/q."""

    def __init__(self, text: str, position: int, message: str):
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


def _check_binary(name: str, s: str) -> None:
    for ch in s:
        if ch not in "01":
            raise ValueError(f"{name} must be a binary string, got {s!r}")


def primitive_root(w: str) -> str:
    """Shortest u with w = u repeated; w itself when w is primitive."""
    for d in range(1, len(w) + 1):
        if len(w) % d == 0 and w[:d] * (len(w) // d) == w:
            return w[:d]
    raise AssertionError("unreachable: every word is a power of itself")


@dataclass(frozen=True)
class RationalPoint:
    """Canonical eventually periodic sequence preperiod (period)^infinity."""

    preperiod: str
    period: str

    def __post_init__(self) -> None:
        _check_binary("preperiod", self.preperiod)
        _check_binary("period", self.period)
        if not self.period:
            raise ValueError("period must be nonempty")
        if primitive_root(self.period) != self.period:
            raise ValueError(f"period {self.period!r} is a proper power; use canonicalize()")
        if self.preperiod and self.preperiod[-1] == self.period[-1]:
            raise ValueError(
                f"({self.preperiod!r}, {self.period!r}) is not canonical; use canonicalize()"
            )

    def prefix(self, n: int) -> str:
        """The first n letters of the sequence."""
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        reps = -(-(n - len(self.preperiod)) // len(self.period))
        return (self.preperiod + self.period * reps)[:n]

    def value(self) -> Fraction:
        """The rational number with this binary expansion."""
        v, w = self.preperiod, self.period
        top = (1 << len(w)) - 1
        head = int(v, 2) if v else 0
        return Fraction(head * top + int(w, 2), (1 << len(v)) * top)

    def is_endpoint(self) -> bool:
        """True for the two globally fixed sequences 0^inf and 1^inf."""
        return self.preperiod == "" and self.period in ("0", "1")

    def __str__(self) -> str:
        return f"{self.preperiod}({self.period})"


def canonicalize(preperiod: str, period: str) -> RationalPoint:
    """Canonical form of the sequence preperiod + period^infinity.

    Replaces the period by its primitive root, then repeatedly absorbs the
    last letter of the preperiod into the period (rotating the period right)
    while it matches the period's last letter.
    """
    _check_binary("preperiod", preperiod)
    _check_binary("period", period)
    if not period:
        raise ValueError("period must be nonempty")
    w = primitive_root(period)
    v = preperiod
    while v and v[-1] == w[-1]:
        v = v[:-1]
        w = w[-1] + w[:-1]
    return RationalPoint(v, w)


ZERO_POINT = RationalPoint("", "0")
ONE_POINT = RationalPoint("", "1")

# Prefix rewriting rules for the four letters; the rule sets are complete
# prefix codes, so exactly one rule matches any binary sequence.
_RULES: dict[Letter, tuple[tuple[str, str], ...]] = {
    Letter.X0: (("0", "00"), ("10", "01"), ("11", "1")),
    Letter.X0_INV: (("00", "0"), ("01", "10"), ("1", "11")),
    Letter.X1: (("0", "0"), ("10", "100"), ("110", "101"), ("111", "11")),
    Letter.X1_INV: (("0", "0"), ("100", "10"), ("101", "110"), ("11", "111")),
}


def act_letter(point: RationalPoint, letter: Letter) -> RationalPoint:
    """Image of the point under one generator letter."""
    head = point.preperiod
    while len(head) < 3:
        head += point.period
    for lhs, rhs in _RULES[letter]:
        if head.startswith(lhs):
            return canonicalize(rhs + head[len(lhs):], point.period)
    raise AssertionError("unreachable: rule prefixes cover all binary sequences")


def act_word(point: RationalPoint, word: Word) -> RationalPoint:
    """Fold the letter action left to right over the word."""
    for letter in word:
        point = act_letter(point, letter)
    return point


def shift(point: RationalPoint) -> RationalPoint:
    """Drop the first letter of the sequence."""
    if point.preperiod:
        return canonicalize(point.preperiod[1:], point.period)
    w = point.period
    return canonicalize("", w[1:] + w[0])


def value_to_point(value: Fraction | int) -> RationalPoint:
    """Binary expansion of a rational in [0, 1] by long division.

    Remainder-cycle detection recovers the preperiod and period; terminating
    expansions come out with the 0^inf tail, so dyadic rationals map to their
    0-tail representative (the 1-tail twin is reachable by point syntax only).
    """
    if isinstance(value, float):
        raise TypeError("refusing float input; pass Fraction for exactness")
    fr = Fraction(value)
    if fr < 0 or fr > 1:
        raise ValueError(f"value {fr} outside [0, 1]")
    num, den = fr.numerator, fr.denominator
    digits: list[str] = []
    seen: dict[int, int] = {}
    r = num
    while r not in seen:
        seen[r] = len(digits)
        r *= 2
        if r >= den:
            digits.append("1")
            r -= den
        else:
            digits.append("0")
    start = seen[r]
    return canonicalize("".join(digits[:start]), "".join(digits[start:]))


def parse_point(text: str) -> RationalPoint:
    """Parse v(w) point syntax or an exact fraction p/q."""
    if "/" in text:
        slash = text.index("/")
        num_part, den_part = text[:slash], text[slash + 1:]
        if not num_part.isdigit():
            raise PointSyntaxError(text, 0, "expected an integer numerator")
        if not den_part.isdigit():
            raise PointSyntaxError(text, slash + 1, "expected an integer denominator")
        num, den = int(num_part), int(den_part)
        if den == 0:
            raise PointSyntaxError(text, slash + 1, "denominator must be nonzero")
        if num > den:
            raise PointSyntaxError(text, 0, f"fraction {num}/{den} outside [0, 1]")
        return value_to_point(Fraction(num, den))
    open_at = text.find("(")
    if open_at < 0:
        raise PointSyntaxError(text, 0, "expected v(w) form or a fraction p/q")
    for i, ch in enumerate(text[:open_at]):
        if ch not in "01":
            raise PointSyntaxError(text, i, "preperiod letters must be 0 or 1")
    if not text.endswith(")") or text.count("(") != 1 or text.count(")") != 1:
        raise PointSyntaxError(text, len(text) - 1, "expected a single (w) group at the end")
    period = text[open_at + 1:-1]
    if not period:
        raise PointSyntaxError(text, open_at + 1, "period must be nonempty")
    for i, ch in enumerate(period):
        if ch not in "01":
            raise PointSyntaxError(text, open_at + 1 + i, "period letters must be 0 or 1")
    return canonicalize(text[:open_at], period)
