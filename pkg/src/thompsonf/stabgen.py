"""Finite generating sets for stabilizers of rational points in F.

The stabilizer of the base point 10 w^inf (w primitive) is generated by the
five elements x2, x3, y1, y2 and the substitution of 0 -> x1^-1, 1 -> x1^-1 x0
into w.  For an arbitrary rational point b the set is conjugated by a word h
moving b to a base point, found as a shortest path in the Schreier graph.

Verification runs every generator through two independent oracles (the
symbolic sequence action and exact evaluation of the PL map at the point's
rational value) plus reproducible random products of generators.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .cantor import ONE_POINT, RationalPoint, ZERO_POINT, act_word, canonicalize
from .plmap import identity, word_to_plmap, xn, yn
from .report import Report
from .rng import SplitMix64
from .schreier import find_path
from .words import (
    Letter,
    Word,
    address_word,
    commutator,
    conjugate,
    format_word,
    invert_word,
    stabilizer_period_word,
    xn_word,
    yn_word,
)


@dataclass(frozen=True)
class StabilizerGens:
    """Generating set for the stabilizer of a rational point.

    Five words for a generic point, two (x0, x1) for the globally fixed
    endpoints.  The conjugator moves the point to the base point 10 period^inf
    and is empty when the point already has that form; the period field
    records the rotation of the period used in the fifth generator.
    """

    point: RationalPoint
    conjugator: Word
    generators: tuple[Word, ...]
    period: str


def schreier_x_word(label: str, n: int) -> Word:
    """Generator for the n-th loop on the black ray below the labelled vertex."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    prefix = address_word(label)
    return prefix + xn_word(n + 1) + invert_word(prefix)


def schreier_y_word(label: str, n: int) -> Word:
    """Generator for the n-th bottom edge of the white ray below the labelled vertex."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    prefix = address_word(label)
    return prefix + yn_word(n) + invert_word(prefix)


def check_reduction(max_label_len: int = 5, max_n: int = 4) -> Report:
    """Verify that conjugation by an address only shifts generator indices.

    For every A/B label W and every n, the x-type generator collapses to
    x_{n+1+#B(W)} and the y-type one to y_{n+#A(W)}, as exact map identities.
    """
    if max_label_len < 1 or max_n < 1:
        raise ValueError("bounds must be >= 1")
    report = Report("index reduction")
    x_maps = {k: xn(k) for k in range(2, max_n + max_label_len + 2)}
    y_maps = {k: yn(k) for k in range(1, max_n + max_label_len + 1)}
    x_cores = {n: word_to_plmap(xn_word(n + 1)) for n in range(1, max_n + 1)}
    y_cores = {n: word_to_plmap(yn_word(n)) for n in range(1, max_n + 1)}
    for length in range(max_label_len + 1):
        for bits in product("AB", repeat=length):
            label = "".join(bits)
            count_a = label.count("A")
            count_b = label.count("B")
            shown = label or "e"
            # the conjugating prefix is shared by all n, so build its map once
            prefix = word_to_plmap(address_word(label))
            prefix_inv = prefix.inverse()
            for n in range(1, max_n + 1):
                ok_x = prefix * x_cores[n] * prefix_inv == x_maps[n + 1 + count_b]
                report.add(f"x[{shown},{n}] == x{n + 1 + count_b}", ok_x)
                ok_y = prefix * y_cores[n] * prefix_inv == y_maps[n + count_a]
                report.add(f"y[{shown},{n}] == y{n + count_a}", ok_y)
    return report


def base_generator_words(period: str) -> tuple[Word, ...]:
    """The five generator words for the stabilizer of 10 period^inf."""
    return (
        xn_word(2),
        xn_word(3),
        yn_word(1),
        yn_word(2),
        stabilizer_period_word(period),
    )


def default_search_radius(point: RationalPoint) -> int:
    return len(point.preperiod) + 4 * len(point.period) + 8


def stabilizer_generators(point: RationalPoint, max_radius: int | None = None) -> StabilizerGens:
    """Explicit generating set for the stabilizer of a rational point.

    The endpoints 0^inf and 1^inf are fixed by all of F, so they get {x0, x1}.
    If the point is 10 u^inf for some rotation u of its period, the base set
    for u is returned directly; otherwise a shortest conjugator h with
    h(point) = 10 period^inf is found by BFS and the base set is conjugated.
    """
    if point in (ZERO_POINT, ONE_POINT):
        return StabilizerGens(point, (), ((Letter.X0,), (Letter.X1,)), point.period)
    w = point.period
    for i in range(len(w)):
        rotation = w[i:] + w[:i]
        if canonicalize("10", rotation) == point:
            return StabilizerGens(point, (), base_generator_words(rotation), rotation)
    target = canonicalize("10", w)
    radius = default_search_radius(point) if max_radius is None else max_radius
    h = find_path(point, target, radius)
    generators = tuple(conjugate(g, h) for g in base_generator_words(w))
    return StabilizerGens(point, h, generators, w)


def verify_generators(
    gens: StabilizerGens,
    samples: int = 100,
    max_factors: int = 12,
    seed: int = 1,
) -> Report:
    """Soundness checks for a generating set.

    Every generator must fix the point under both the sequence action and
    exact PL-map evaluation at the point's rational value; seeded random
    products of generators and their inverses must fix the point as well.
    Also re-verifies the index reduction identities that collapse the
    infinite Schreier generating set to x2, x3, y1, y2.
    """
    report = Report(f"stabilizer generators for {gens.point}")
    point = gens.point
    value = point.value()
    for k, word in enumerate(gens.generators, start=1):
        report.add(f"generator {k} fixes {point} (sequence action)", act_word(point, word) == point)
        report.add(f"generator {k} fixes {point} (map evaluation)", word_to_plmap(word).evaluate(value) == value)
    pool = gens.generators + tuple(invert_word(g) for g in gens.generators)
    rng = SplitMix64(seed)
    bad = 0
    for _ in range(samples):
        factors = 1 + rng.below(max_factors)
        word: Word = ()
        for _ in range(factors):
            word += rng.choice(pool)
        if act_word(point, word) != point:
            bad += 1
    report.add(f"{samples} seeded random products (seed {seed}) fix {point}", bad == 0)
    x2, x3 = xn(2), xn(3)
    for n in range(4, 9):
        k = n - 3
        report.add(f"x{n} == x2^{k} x3 x2^-{k}", (x2 ** k) * x3 * (x2 ** -k) == xn(n))
    y1, y2 = yn(1), yn(2)
    for n in range(3, 9):
        k = n - 2
        report.add(f"y{n} == y1^{k} y2 y1^-{k}", (y1 ** k) * y2 * (y1 ** -k) == yn(n))
    return report


def check_stabilizer_relators() -> Report:
    """The eight relators that present the stabilizer of a base point.

    Both defining relators of F transported to <x2, x3> and to <y1, y2>,
    plus the four commutators [x_i, y_j] for i in {2, 3}, j in {1, 2}.
    """
    report = Report("stabilizer relators")
    ident = identity()
    for tag, g0, g1 in (("x2,x3", xn_word(2), xn_word(3)), ("y1,y2", yn_word(1), yn_word(2))):
        u = invert_word(g1) + g0
        v1 = g0 + g1 + invert_word(g0)
        v2 = g0 + g0 + g1 + invert_word(g0) + invert_word(g0)
        report.add(f"first relator of F transported to <{tag}>", word_to_plmap(commutator(u, v1)) == ident)
        report.add(f"second relator of F transported to <{tag}>", word_to_plmap(commutator(u, v2)) == ident)
    for i in (2, 3):
        for j in (1, 2):
            ok = word_to_plmap(commutator(xn_word(i), yn_word(j))) == ident
            report.add(f"[x{i}, y{j}] == 1", ok)
    return report


def check_twin_points(prefix: str, max_radius: int | None = None) -> Report:
    """Stabilizers of the twin sequences prefix10^inf and prefix01^inf agree.

    The two sequences denote the same number in [0, 1], so each point's
    generating set must fix the other point as well.
    """
    p = canonicalize(prefix + "1", "0")
    q = canonicalize(prefix + "0", "1")
    gens_p = stabilizer_generators(p, max_radius)
    gens_q = stabilizer_generators(q, max_radius)
    report = Report(f"twin stabilizers of {p} and {q}")
    for k, word in enumerate(gens_p.generators, start=1):
        report.add(f"generator {k} of {p} fixes twin {q}", act_word(q, word) == q)
    for k, word in enumerate(gens_q.generators, start=1):
        report.add(f"generator {k} of {q} fixes twin {p}", act_word(p, word) == p)
    return report


def format_generators(gens: StabilizerGens) -> str:
    """Text form: a header line, then one generator word per line."""
    lines = [f"# point={gens.point} h={format_word(gens.conjugator)} w={gens.period}"]
    lines.extend(format_word(word) for word in gens.generators)
    return "\n".join(lines) + "\n"


def generators_to_json(gens: StabilizerGens) -> str:
    payload = {
        "point": str(gens.point),
        "h": format_word(gens.conjugator),
        "w": gens.period,
        "generators": [format_word(word) for word in gens.generators],
    }
    return json.dumps(payload)
