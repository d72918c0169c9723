"""Brute-force oracles used to cross-check the algebraic algorithms.

Everything here works by exhaustive search over single rewriting moves or
over enumerated balls, independently of the normal-form and lattice code
paths it is used to validate.  Desk-scale only.
"""

from __future__ import annotations

from .factors import INFINITY
from .graph import Syllable


def _state(word):
    return tuple((s.vertex, s.element) for s in word)


def shuffle_closure(graph, syllables):
    """All words reachable from the given one by shuffles and amalgamations."""
    start = _state(syllables)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        nxt = []
        for i in range(len(cur) - 1):
            (va, ea), (vb, eb) = cur[i], cur[i + 1]
            if graph.adjacent(va, vb):
                nxt.append(cur[:i] + ((vb, eb), (va, ea)) + cur[i + 2:])
            if va == vb:
                ops = graph.ops[va]
                merged = ops.multiply(ea, eb)
                mid = () if ops.is_identity(merged) else ((va, merged),)
                nxt.append(cur[:i] + mid + cur[i + 2:])
        for cand in nxt:
            if cand not in seen:
                seen.add(cand)
                stack.append(cand)
    return seen


def _word_key(graph, state):
    return (
        len(state),
        tuple(graph.syllable_key(Syllable(v, e)) for v, e in state),
    )


def bfs_normal_form(graph, syllables):
    """Shortlex-least word reachable by shuffles and amalgamations."""
    closure = shuffle_closure(graph, syllables)
    return min(closure, key=lambda st: _word_key(graph, st))


def bfs_equal(graph, x_syllables, y_syllables):
    return bfs_normal_form(graph, x_syllables) == bfs_normal_form(graph, y_syllables)


# ---------------------------------------------------------------------------
# Artin monoid oracles by relation rewriting
# ---------------------------------------------------------------------------

def rewrite_closure(monoid, word):
    """All positive words obtainable by single relation applications."""
    word = tuple(word)
    seen = {word}
    stack = [word]
    pairs = [
        (s, t, monoid.coxeter(s, t))
        for ti, t in enumerate(monoid.generators)
        for s in monoid.generators[:ti]
    ]
    while stack:
        cur = stack.pop()
        for s, t, m in pairs:
            lhs = monoid._alt(s, t, m)
            rhs = monoid._alt(t, s, m)
            for i in range(len(cur) - m + 1):
                seg = cur[i:i + m]
                if seg == lhs:
                    new = cur[:i] + rhs + cur[i + m:]
                elif seg == rhs:
                    new = cur[:i] + lhs + cur[i + m:]
                else:
                    continue
                if new not in seen:
                    seen.add(new)
                    stack.append(new)
    return seen


def rewrite_equal(monoid, u, v):
    return tuple(v) in rewrite_closure(monoid, u)


def bfs_left_divides(monoid, u, z):
    """u <= z by exhaustive search for a word w with u w = z."""
    u, z = tuple(u), tuple(z)
    k = len(z) - len(u)
    if k < 0:
        return False
    targets = rewrite_closure(monoid, z)
    words = [()]
    for _ in range(k):
        words = [w + (s,) for w in words for s in monoid.generators]
    return any(u + w in targets for w in words)


def bfs_minimal_common_multiples(monoid, u, v, max_length):
    """Shortest common left multiples of u and v, up to monoid equality."""
    u, v = tuple(u), tuple(v)
    for length in range(max(len(u), len(v)), max_length + 1):
        words = [()]
        for _ in range(length):
            words = [w + (s,) for w in words for s in monoid.generators]
        found = []
        for z in words:
            if bfs_left_divides(monoid, u, z) and bfs_left_divides(monoid, v, z):
                if not any(rewrite_equal(monoid, z, f) for f in found):
                    found.append(z)
        if found:
            return found
    return []


def bfs_right_divisors(monoid, w):
    """All right divisors of w, by enumerating candidate quotient words."""
    w = tuple(w)
    targets = rewrite_closure(monoid, w)
    divisors = []
    for length in range(len(w) + 1):
        cands = [()]
        for _ in range(length):
            cands = [c + (s,) for c in cands for s in monoid.generators]
        rests = [()]
        for _ in range(len(w) - length):
            rests = [r + (s,) for r in rests for s in monoid.generators]
        for c in cands:
            if any(r + c in targets for r in rests):
                if not any(rewrite_equal(monoid, c, d) for d in divisors):
                    divisors.append(c)
    return divisors


# ---------------------------------------------------------------------------
# Ball-based order oracles on the graph product
# ---------------------------------------------------------------------------

def upper_bound_bitsets(graph, sources, ball_elements, leq_fn):
    """For each source x, the bitset over ball positions of {z : x <= z}."""
    out = {}
    for x in sources:
        bits = 0
        for pos, z in enumerate(ball_elements):
            if leq_fn(graph, x, z):
                bits |= 1 << pos
        out[x.syllables] = bits
    return out


def check_lub_against_ball(graph, x, y, computed, bitsets, ball_elements,
                           ball_index, leq_fn):
    """Compare a computed lub against the common-upper-bound set of a ball.

    Finite result inside the ball: it must be a common upper bound
    dividing every common upper bound found in the ball.  Finite result
    beyond the ball's degree cap: it must still bound both arguments, and
    the ball must contain no common upper bound (any one would divide the
    lub and hence fit in the ball).  Infinite result: the ball must
    contain no common upper bound.  Returns (ok, detail).
    """
    common = bitsets[x.syllables] & bitsets[y.syllables]
    if computed is INFINITY:
        if common:
            pos = (common & -common).bit_length() - 1
            return False, f"lub says Infinity but {ball_elements[pos]} bounds both"
        return True, None
    if computed.syllables not in ball_index:
        if not (leq_fn(graph, x, computed) and leq_fn(graph, y, computed)):
            return False, "computed lub does not bound both arguments"
        if common:
            pos = (common & -common).bit_length() - 1
            return False, (
                f"computed lub exceeds the ball but {ball_elements[pos]} "
                "is a common upper bound inside it"
            )
        return True, None
    if not (common >> ball_index[computed.syllables]) & 1:
        return False, "computed lub is not a common upper bound"
    pos = 0
    bits = common
    while bits:
        if bits & 1:
            z = ball_elements[pos]
            if not leq_fn(graph, computed, z):
                return False, f"computed lub does not divide {z}"
        bits >>= 1
        pos += 1
    return True, None
