"""Order-theoretic algorithms on a graph product of quasi-lattice orders.

The positive cone consists of the elements whose reduced expressions have
all syllables in the factor cones.  Least upper bounds of positives are
computed by the vertex-recursive algorithm: peel the least initial vertex
I off both arguments, combine the factor lub of the I-syllables with the
lub of the remainders, and fail (Infinity) when the I-adjacency
compatibility conditions do not hold.  General elements reduce to the
positive case through canonical fractions x = a b^-1 with rgcd(a, b) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .factors import INFINITY
from .graph import NormalWord, Syllable


class NotInPPInvError(ValueError):
    """The element is not a fraction of positives (no upper bound in P)."""


def _norm(graph, x):
    return x if isinstance(x, NormalWord) else graph.reduce(x)


def is_positive(graph, x):
    x = _norm(graph, x)
    return all(graph.ops[s.vertex].is_positive(s.element) for s in x.syllables)


def leq(graph, x, y):
    """x <= y for the left-invariant order: x^-1 y positive."""
    return is_positive(graph, graph.multiply(graph.invert(x), y))


def leq_r(graph, x, y):
    """x <=_r y for the right-invariant order: y x^-1 positive."""
    return is_positive(graph, graph.multiply(y, graph.invert(x)))


def _factor_lub(ops, a, b):
    if ops.is_identity(a):
        return b
    if ops.is_identity(b):
        return a
    return ops.lub_or_infinity(a, b)


def i_adjacent(graph, x, y, vertex):
    """The three-part compatibility condition at one vertex.

    With x = x_I x' and y = y_I y': the factor lub x_I v y_I must exist,
    and on each side either that lub is already the peeled syllable or I
    is adjacent to every vertex of the remainder.
    """
    graph.check_vertex(vertex)
    ops = graph.ops[vertex]
    x_i, x_rest = graph.initial_split(x, vertex)
    y_i, y_rest = graph.initial_split(y, vertex)
    z = _factor_lub(ops, x_i, y_i)
    if z is INFINITY:
        return False
    for peeled, rest in ((x_i, x_rest), (y_i, y_rest)):
        if peeled == z:
            continue
        if not all(graph.adjacent(vertex, v) for v in graph.vertices_of(rest)):
            return False
    return True


def lub(graph, x, y):
    """Least upper bound of two positives, or INFINITY.

    The recursion always peels the least vertex of the union of initial
    vertex sets, which makes traces reproducible and guarantees that the
    total length strictly decreases.
    """
    x, y = _norm(graph, x), _norm(graph, y)
    if x.is_identity:
        return y
    if y.is_identity:
        return x
    candidates = graph.initial_vertices(x) | graph.initial_vertices(y)
    vertex = min(candidates, key=graph.vertex_index.__getitem__)
    ops = graph.ops[vertex]
    x_i, x_rest = graph.initial_split(x, vertex)
    y_i, y_rest = graph.initial_split(y, vertex)
    z = _factor_lub(ops, x_i, y_i)
    if z is INFINITY:
        return INFINITY
    for peeled, rest in ((x_i, x_rest), (y_i, y_rest)):
        if peeled != z and not all(
            graph.adjacent(vertex, v) for v in graph.vertices_of(rest)
        ):
            return INFINITY
    rest = lub(graph, x_rest, y_rest)
    if rest is INFINITY:
        return INFINITY
    head = [] if ops.is_identity(z) else [Syllable(vertex, z)]
    return graph.multiply(head, rest)


def canonical_fraction(graph, x):
    """The unique pair (a, b) of positives with x = a b^-1, rgcd(a, b) = 1.

    Each syllable of the canonical reduced expression is factorized in its
    own factor; the a-parts are concatenated in order, the b-parts in
    reverse order.  When x really is a fraction of positives this
    assembles the minimal pair; otherwise the product check fails and
    NotInPPInvError is raised.
    """
    x = _norm(graph, x)
    parts_a, parts_b = [], []
    for s in x.syllables:
        ops = graph.ops[s.vertex]
        a_i, b_i = ops.factorize(s.element)
        if not ops.is_identity(a_i):
            parts_a.append(Syllable(s.vertex, a_i))
        if not ops.is_identity(b_i):
            parts_b.append(Syllable(s.vertex, b_i))
    a = graph.reduce(parts_a)
    b = graph.reduce(list(reversed(parts_b)))
    if not graph.equal(graph.multiply(a, graph.invert(b)), x):
        raise NotInPPInvError(f"{x} is not a fraction of positives")
    return a, b


def lub_general(graph, x, y):
    """x v y for arbitrary group elements, or INFINITY.

    By left invariance x v y = x * (least upper bound of x^-1 y in P), and
    the latter is the a-part of the canonical fraction.
    """
    x, y = _norm(graph, x), _norm(graph, y)
    z = graph.multiply(graph.invert(x), y)
    try:
        a, _ = canonical_fraction(graph, z)
    except NotInPPInvError:
        return INFINITY
    return graph.multiply(x, a)


def rgcd(graph, u, v):
    """Greatest common lower bound of two positives for the right order."""
    u, v = _norm(graph, u), _norm(graph, v)
    if not (is_positive(graph, u) and is_positive(graph, v)):
        raise ValueError("rgcd is defined on positive elements")
    a, _ = canonical_fraction(graph, graph.multiply(u, graph.invert(v)))
    return graph.multiply(graph.invert(a), u)


# ---------------------------------------------------------------------------
# The homomorphism into the direct product of the factors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DirectProductElement:
    """An element of the direct product, one component per vertex.

    Components are stored sparsely as (vertex, element) pairs in vertex
    order, identity components omitted.
    """
    components: tuple

    def component(self, graph, vertex):
        for v, e in self.components:
            if v == vertex:
                return e
        return graph.ops[vertex].identity

    def as_dict(self):
        return dict(self.components)


def direct_product_element(graph, mapping):
    items = [
        (v, mapping[v])
        for v in graph.vertices
        if v in mapping and not graph.ops[v].is_identity(mapping[v])
    ]
    return DirectProductElement(tuple(items))


def phi(graph, x):
    """Collapse each vertex's syllables into one factor element.

    The component at I is the ordered product of the syllables of x
    belonging to I; this is a group homomorphism onto the direct product.
    """
    x = _norm(graph, x)
    acc = {}
    for s in x.syllables:
        ops = graph.ops[s.vertex]
        acc[s.vertex] = ops.multiply(acc.get(s.vertex, ops.identity), s.element)
    return direct_product_element(graph, acc)


def phi_is_positive(graph, xi):
    return all(graph.ops[v].is_positive(e) for v, e in xi.components)


def phi_lub(graph, xi, eta):
    """Componentwise lub in the direct product, INFINITY if any component
    has no bound."""
    out = {}
    for v in graph.vertices:
        a = xi.component(graph, v)
        b = eta.component(graph, v)
        z = _factor_lub(graph.ops[v], a, b)
        if z is INFINITY:
            return INFINITY
        out[v] = z
    return direct_product_element(graph, out)
