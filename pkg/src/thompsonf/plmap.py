"""Elements of Thompson's group F as piecewise linear homeomorphisms of [0, 1].

A PLMap is an increasing piecewise linear bijection of the unit interval
whose breakpoints have dyadic coordinates and whose slopes are integer powers
of two.  Breakpoint lists are normalized (no collinear interior points), so
two maps represent the same group element iff their breakpoint tuples are
equal; that exact comparison is how the word problem is decided throughout
the package.

Products follow the right-action convention: (f * g)(t) = g(f(t)), matching
the left-to-right reading of words.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Sequence

from .dyadic import Dyadic
from .report import Report
from .words import Letter, Word, commutator

_FR_ONE = Fraction(1)


class InvalidPLMapError(ValueError):
    """Raised when breakpoint data does not describe a valid element of F."""


def _is_power_of_two(fr: Fraction) -> bool:
    n, d = fr.numerator, fr.denominator
    return n > 0 and n & (n - 1) == 0 and d & (d - 1) == 0


class PLMap:
    """Immutable piecewise linear homeomorphism given by its breakpoints."""

    __slots__ = ("breakpoints", "_ts", "_ys")

    breakpoints: tuple[tuple[Dyadic, Dyadic], ...]

    def __init__(self, breakpoints: Iterable[tuple[Dyadic, Dyadic]]):
        points = tuple((t, y) for t, y in breakpoints)
        _validate(points)
        points = _drop_collinear(points)
        self.breakpoints = points
        self._ts = tuple(t.as_fraction() for t, _ in points)
        self._ys = tuple(y.as_fraction() for _, y in points)

    @classmethod
    def from_fractions(cls, pairs: Iterable[tuple[Fraction, Fraction]]) -> "PLMap":
        return cls((Dyadic.from_fraction(t), Dyadic.from_fraction(y)) for t, y in pairs)

    def evaluate(self, t: Fraction | int) -> Fraction:
        """Exact value at t for any rational t in [0, 1]."""
        if isinstance(t, float):
            raise TypeError("refusing float input; pass Fraction or Dyadic for exactness")
        fr = t.as_fraction() if isinstance(t, Dyadic) else Fraction(t)
        if fr < 0 or fr > 1:
            raise ValueError(f"argument {fr} outside [0, 1]")
        ts, ys = self._ts, self._ys
        i = max(min(bisect_right(ts, fr) - 1, len(ts) - 2), 0)
        return ys[i] + (fr - ts[i]) * (ys[i + 1] - ys[i]) / (ts[i + 1] - ts[i])

    def __call__(self, t: Fraction | Dyadic | int) -> Fraction | Dyadic:
        """Evaluate; dyadic input yields a Dyadic, rational input a Fraction."""
        if isinstance(t, Dyadic):
            return Dyadic.from_fraction(self.evaluate(t.as_fraction()))
        return self.evaluate(t)

    def preimage(self, y: Fraction) -> Fraction:
        """Exact t with self(t) = y (the map is a bijection of [0, 1])."""
        if y < 0 or y > 1:
            raise ValueError(f"value {y} outside [0, 1]")
        ts, ys = self._ts, self._ys
        i = max(min(bisect_right(ys, y) - 1, len(ys) - 2), 0)
        return ts[i] + (y - ys[i]) * (ts[i + 1] - ts[i]) / (ys[i + 1] - ys[i])

    def compose(self, other: "PLMap") -> "PLMap":
        """Right-action product: the map t -> other(self(t))."""
        cuts = set(self._ts)
        cuts.update(self.preimage(s) for s in other._ts)
        pairs = [(t, other.evaluate(self.evaluate(t))) for t in sorted(cuts)]
        return PLMap.from_fractions(pairs)

    def inverse(self) -> "PLMap":
        return PLMap((y, t) for t, y in self.breakpoints)

    def __mul__(self, other: "PLMap") -> "PLMap":
        if not isinstance(other, PLMap):
            return NotImplemented
        return self.compose(other)

    def __invert__(self) -> "PLMap":
        return self.inverse()

    def __pow__(self, n: int) -> "PLMap":
        if n < 0:
            return self.inverse() ** (-n)
        result = identity()
        for _ in range(n):
            result = result * self
        return result

    def is_identity(self) -> bool:
        return self.breakpoints == identity().breakpoints

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PLMap):
            return NotImplemented
        return self.breakpoints == other.breakpoints

    def __hash__(self) -> int:
        return hash(self.breakpoints)

    def __repr__(self) -> str:
        pts = ", ".join(f"({t}, {y})" for t, y in self.breakpoints)
        return f"PLMap[{pts}]"


def _validate(points: Sequence[tuple[Dyadic, Dyadic]]) -> None:
    if len(points) < 2:
        raise InvalidPLMapError("need at least the two endpoint breakpoints")
    for t, y in points:
        if not (t.in_unit_interval() and y.in_unit_interval()):
            raise InvalidPLMapError(f"breakpoint ({t}, {y}) outside the unit square")
    if points[0] != (Dyadic(0), Dyadic(0)) or points[-1] != (Dyadic(1), Dyadic(1)):
        raise InvalidPLMapError("endpoints must be fixed: (0, 0) and (1, 1)")
    for (t0, y0), (t1, y1) in zip(points, points[1:]):
        if not (t0 < t1 and y0 < y1):
            raise InvalidPLMapError(f"breakpoints not strictly increasing near ({t1}, {y1})")
        slope = (y1.as_fraction() - y0.as_fraction()) / (t1.as_fraction() - t0.as_fraction())
        if not _is_power_of_two(slope):
            raise InvalidPLMapError(f"slope {slope} on [{t0}, {t1}] is not a power of two")


def _drop_collinear(
    points: tuple[tuple[Dyadic, Dyadic], ...],
) -> tuple[tuple[Dyadic, Dyadic], ...]:
    kept: list[tuple[Dyadic, Dyadic]] = [points[0]]
    for i in range(1, len(points) - 1):
        t0, y0 = kept[-1]
        t1, y1 = points[i]
        t2, y2 = points[i + 1]
        lhs = (y1.as_fraction() - y0.as_fraction()) * (t2.as_fraction() - t1.as_fraction())
        rhs = (y2.as_fraction() - y1.as_fraction()) * (t1.as_fraction() - t0.as_fraction())
        if lhs != rhs:
            kept.append(points[i])
    kept.append(points[-1])
    return tuple(kept)


def identity() -> PLMap:
    return _IDENTITY


def generator_x0() -> PLMap:
    """The generator x0: t/2 on [0,1/2], t-1/4 on [1/2,3/4], 2t-1 on [3/4,1]."""
    return _GEN_X0


def generator_x1() -> PLMap:
    """The generator x1: identity on [0,1/2], then a scaled copy of x0 on [1/2,1]."""
    return _GEN_X1


def letter_map(letter: Letter) -> PLMap:
    return _LETTER_MAPS[letter]


def word_to_plmap(word: Word) -> PLMap:
    """Left-to-right product of the letter maps; the empty word is the identity."""
    result = _IDENTITY
    for letter in word:
        result = result * _LETTER_MAPS[letter]
    return result


def xn(n: int) -> PLMap:
    """The generator x_n (n >= 1) in closed form.

    Identity up to 1 - 1/2^n, then slopes 1/2, 1, 2; equals the word
    x0^(n-1) x1 x0^-(n-1), and xn(1) is exactly generator_x1().
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return PLMap(
        (
            (Dyadic(0), Dyadic(0)),
            (Dyadic((1 << n) - 1, n), Dyadic((1 << n) - 1, n)),
            (Dyadic((2 << n) - 1, n + 1), Dyadic((4 << n) - 3, n + 2)),
            (Dyadic((4 << n) - 1, n + 2), Dyadic((2 << n) - 1, n + 1)),
            (Dyadic(1), Dyadic(1)),
        )
    )


def yn(n: int) -> PLMap:
    """The element y_n = x0^-(n+1) x1 x0^n in closed form.

    Supported on [0, 1/2^n] with slopes 2, 1, 1/2; the image of xn(n) under
    the flip automorphism.
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return PLMap(
        (
            (Dyadic(0), Dyadic(0)),
            (Dyadic(1, n + 2), Dyadic(1, n + 1)),
            (Dyadic(1, n + 1), Dyadic(3, n + 2)),
            (Dyadic(1, n), Dyadic(1, n)),
            (Dyadic(1), Dyadic(1)),
        )
    )


def flip(f: PLMap) -> PLMap:
    """The flip automorphism t -> 1 - f(1 - t), central symmetry of the graph."""
    return PLMap.from_fractions(
        (_FR_ONE - t.as_fraction(), _FR_ONE - y.as_fraction()) for t, y in reversed(f.breakpoints)
    )


def _x_map(n: int) -> PLMap:
    return _GEN_X0 if n == 0 else xn(n)


def check_relators(depth: int = 8) -> Report:
    """Verify the defining relators of F as exact map identities.

    Covers the two finite-presentation relators, the shift relations
    x_k x_n x_k^-1 = x_{n+1} and y_k y_n y_k^-1 = y_{n+1} for indices up to
    depth, and commutation of every x_i with every y_j up to depth.
    """
    if depth < 2:
        raise ValueError(f"depth must be >= 2, got {depth}")
    report = Report("relators")
    ident = identity()
    u = (Letter.X1_INV, Letter.X0)
    v1 = (Letter.X0, Letter.X1, Letter.X0_INV)
    v2 = (Letter.X0, Letter.X0, Letter.X1, Letter.X0_INV, Letter.X0_INV)
    report.add("[x1^-1 x0, x0 x1 x0^-1] == 1", word_to_plmap(commutator(u, v1)) == ident)
    report.add("[x1^-1 x0, x0^2 x1 x0^-2] == 1", word_to_plmap(commutator(u, v2)) == ident)

    xs = {k: _x_map(k) for k in range(depth + 2)}
    ys = {k: yn(k) for k in range(1, depth + 2)}
    for k in range(depth + 1):
        for n in range(k + 1, depth + 1):
            ok = xs[k] * xs[n] * xs[k].inverse() == xs[n + 1]
            report.add(f"x{k} x{n} x{k}^-1 == x{n + 1}", ok)
    for k in range(1, depth + 1):
        for n in range(k + 1, depth + 1):
            ok = ys[k] * ys[n] * ys[k].inverse() == ys[n + 1]
            report.add(f"y{k} y{n} y{k}^-1 == y{n + 1}", ok)
    for i in range(1, depth + 1):
        for j in range(1, depth + 1):
            ok = xs[i] * ys[j] == ys[j] * xs[i]
            report.add(f"[x{i}, y{j}] == 1", ok)
    return report


_IDENTITY = PLMap(((Dyadic(0), Dyadic(0)), (Dyadic(1), Dyadic(1))))

_GEN_X0 = PLMap(
    (
        (Dyadic(0), Dyadic(0)),
        (Dyadic(1, 1), Dyadic(1, 2)),
        (Dyadic(3, 2), Dyadic(1, 1)),
        (Dyadic(1), Dyadic(1)),
    )
)

_GEN_X1 = PLMap(
    (
        (Dyadic(0), Dyadic(0)),
        (Dyadic(1, 1), Dyadic(1, 1)),
        (Dyadic(3, 2), Dyadic(5, 3)),
        (Dyadic(7, 3), Dyadic(3, 2)),
        (Dyadic(1), Dyadic(1)),
    )
)

_LETTER_MAPS = {
    Letter.X0: _GEN_X0,
    Letter.X0_INV: _GEN_X0.inverse(),
    Letter.X1: _GEN_X1,
    Letter.X1_INV: _GEN_X1.inverse(),
}
