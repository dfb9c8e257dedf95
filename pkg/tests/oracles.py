"""Independent reference implementations used to freeze expected values.

Nothing here goes through the canonical-form machinery of the package: the
string oracle applies the prefix rewriting rules to raw (prefix, period)
pairs and compares long unrolled prefixes, and the fraction oracle walks the
orbit of a dyadic number by exact PL-map evaluation.  Agreement between
these and the package is what the regression fixtures pin down.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from thompsonf.plmap import generator_x0, generator_x1

# Prefix rewriting rules keyed by letter symbol.
RULES = {
    "a": (("0", "00"), ("10", "01"), ("11", "1")),
    "A": (("00", "0"), ("01", "10"), ("1", "11")),
    "b": (("0", "0"), ("10", "100"), ("110", "101"), ("111", "11")),
    "B": (("0", "0"), ("100", "10"), ("101", "110"), ("11", "111")),
}

# Plenty for the bounded preperiods/periods exercised in tests: two sequences
# u1 w^inf and u2 w^inf with |u| <= 40 and the same w of length <= 8 agree
# everywhere iff they agree on the first 64 letters.
KEY_LENGTH = 64


def unroll(prefix: str, period: str, n: int) -> str:
    reps = -(-max(n - len(prefix), 1) // len(period))
    return (prefix + period * reps)[:n]


def naive_act(prefix: str, period: str, letter: str) -> tuple[str, str]:
    """Apply one rewriting rule to a raw (prefix, period) pair.

    The period is never touched; the prefix is padded from the period until
    a rule matches.  No canonicalization of any kind.
    """
    while len(prefix) < 3:
        prefix += period
    for lhs, rhs in RULES[letter]:
        if prefix.startswith(lhs):
            return rhs + prefix[len(lhs):], period
    raise AssertionError(f"no rule matched {prefix!r}")


def string_ball_size(seed_prefix: str, seed_period: str, radius: int) -> int:
    """Vertex count of the BFS ball, deduplicating by unrolled prefix."""
    seed = (seed_prefix, seed_period)
    seen = {unroll(*seed, KEY_LENGTH)}
    frontier = deque([(seed, 0)])
    while frontier:
        (state, dist) = frontier.popleft()
        if dist >= radius:
            continue
        for letter in "aAbB":
            image = naive_act(state[0], state[1], letter)
            key = unroll(*image, KEY_LENGTH)
            if key not in seen:
                seen.add(key)
                frontier.append(((image, dist + 1)))
    return len(seen)


def fraction_to_vw(value: Fraction) -> tuple[str, str]:
    """Binary expansion of a rational in [0, 1] by plain long division."""
    digits: list[str] = []
    seen: dict[int, int] = {}
    num, den = value.numerator, value.denominator
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
    return "".join(digits[:start]), "".join(digits[start:])


def dyadic_name(value: Fraction) -> str:
    """Canonical v(w) display of a dyadic rational with the 0-tail convention."""
    v, w = fraction_to_vw(value)
    assert w == "0", f"{value} is not dyadic"
    # trailing zeros of the preperiod get absorbed into the 0-tail
    return f"{v.rstrip('0')}(0)"


def fraction_ball_dot(seed: Fraction, radius: int) -> str:
    """DOT text of a ball in the dyadic orbit, computed by PL-map evaluation.

    Walks the orbit with exact evaluation of the generator maps (no sequence
    rewriting at all) and renders the same deterministic DOT contract as the
    package: vertices in BFS discovery order with letters ordered
    x0, x0^-1, x1, x1^-1, then edges in (source, label) order.
    """
    x0, x1 = generator_x0(), generator_x1()
    moves = [x0, x0.inverse(), x1, x1.inverse()]
    vertices = [seed]
    index = {seed: 0}
    dist = [0]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        if dist[i] >= radius:
            continue
        for move in moves:
            image = move.evaluate(vertices[i])
            if image not in index:
                index[image] = len(vertices)
                vertices.append(image)
                dist.append(dist[i] + 1)
                queue.append(index[image])
    lines = ["digraph schreier {"]
    for i, value in enumerate(vertices):
        marker = " [peripheries=2]" if i == 0 else ""
        lines.append(f'  "{dyadic_name(value)}"{marker};')
    for i, value in enumerate(vertices):
        for move, label in ((x0, "x0"), (x1, "x1")):
            j = index.get(move.evaluate(value))
            if j is not None:
                lines.append(f'  "{dyadic_name(value)}" -> "{dyadic_name(vertices[j])}" [label={label}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
