"""Truncated left-regular (Toeplitz) representations on finite cone balls.

A cone ball is the finite, divisor-closed set of positive elements of
degree at most n, with a deterministic basis order.  The truncated
isometries are compressions P_n T P_n of the left-regular isometries
T_x e_y = e_{xy}.  Because the ball is divisor closed, the adjoint action
T_x* e_z = e_{x^-1 z} (when x <= z, else 0) is exact on the ball, so all
diagonal/projection identities hold without truncation error; only norms
carry compression semantics (monotone lower bounds in the ball degree).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .factors import INFINITY
from .graph import NormalWord
from .order import is_positive, leq, lub


class BallSizeExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ConeBall:
    """Positive elements of degree <= max_degree, with index lookup."""
    graph: object
    max_degree: int
    elements: tuple
    index: dict = field(compare=False)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x.syllables in self.index

    def position(self, x):
        return self.index[x.syllables]


def enumerate_ball(graph, max_degree, size_cap=200_000):
    """BFS from the identity by right multiplication with the generators."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    gens = graph.generator_words()
    identity = graph.identity()
    seen = {identity.syllables: identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = graph.multiply(x, g)
                if y.degree > max_degree or y.syllables in seen:
                    continue
                seen[y.syllables] = y
                new.append(y)
                if len(seen) > size_cap:
                    raise BallSizeExceeded(
                        f"cone ball exceeds the size cap of {size_cap}"
                    )
        frontier = new
    elements = tuple(sorted(seen.values(), key=graph.sort_key))
    index = {x.syllables: i for i, x in enumerate(elements)}
    return ConeBall(graph, max_degree, elements, index)


@dataclass(frozen=True)
class SparseOperator:
    """A sparse matrix over the ball basis, with reproducible export order."""
    dimension: int
    matrix: object  # scipy csr_matrix

    def to_triplets(self):
        coo = self.matrix.tocoo()
        triplets = sorted(
            zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist())
        )
        return [[int(r), int(c), v] for r, c, v in triplets]

    def adjoint(self):
        return SparseOperator(self.dimension, self.matrix.conj().T.tocsr())

    def __matmul__(self, other):
        return SparseOperator(self.dimension, (self.matrix @ other.matrix).tocsr())


def toeplitz_op(graph, x, ball):
    """The compression of T_x to the ball: e_y -> e_{xy} while xy stays in."""
    x = x if isinstance(x, NormalWord) else graph.reduce(x)
    if not is_positive(graph, x):
        raise ValueError("Toeplitz isometries are indexed by positive elements")
    rows, cols = [], []
    for j, y in enumerate(ball.elements):
        xy = graph.multiply(x, y)
        if xy in ball:
            rows.append(ball.position(xy))
            cols.append(j)
    n = len(ball)
    mat = sp.csr_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(n, n), dtype=float
    )
    return SparseOperator(n, mat)


def toeplitz_adjoint(graph, x, ball):
    return toeplitz_op(graph, x, ball).adjoint()


def range_projection_diag(graph, x, ball):
    """Diagonal of T_x T_x^*: 1 at z iff x <= z.  Exact on the ball."""
    x = x if isinstance(x, NormalWord) else graph.reduce(x)
    if not is_positive(graph, x):
        raise ValueError("range projections are indexed by positive elements")
    return np.array(
        [1 if leq(graph, x, z) else 0 for z in ball.elements], dtype=int
    )


@dataclass(frozen=True)
class CovarianceReport:
    ok: bool
    lub: object  # NormalWord or INFINITY
    mismatches: tuple  # offending ball elements

    def __bool__(self):
        return self.ok


def covariance_check(graph, x, y, ball):
    """Pointwise check of V_x V_x^* V_y V_y^* = V_{x v y} V_{x v y}^*.

    Over the ball this says: z dominates both x and y iff x v y is finite
    and dominates z.  Doubles as an independent test of the lub algorithm.
    """
    join = lub(graph, x, y)
    bad = []
    for z in ball.elements:
        lhs = leq(graph, x, z) and leq(graph, y, z)
        rhs = join is not INFINITY and leq(graph, join, z)
        if lhs != rhs:
            bad.append(z)
    return CovarianceReport(not bad, join, tuple(bad))


def defect_product_diag(graph, elements, ball):
    """Diagonal of prod (1 - V_x V_x^*) over the given positives."""
    if not elements:
        raise ValueError("the defect product needs a nonempty family")
    diag = np.ones(len(ball), dtype=int)
    for x in elements:
        diag *= 1 - range_projection_diag(graph, x, ball)
    return diag


def defect_product_nonzero(graph, elements, ball):
    """True iff the defect projection has nonzero diagonal.

    For the Toeplitz representation the entry at the identity basis vector
    is always 1, since a nontrivial positive never divides the identity.
    """
    return bool(defect_product_diag(graph, elements, ball).any())


# ---------------------------------------------------------------------------
# Extension of factor representations to the graph product
# ---------------------------------------------------------------------------

class IsometryFamily:
    """A matrix isometry per generator, extended along reduced expressions.

    ``matrices`` maps generator labels (the vertex name for an integer
    factor, the Artin generator names otherwise) to square ndarrays of a
    common dimension.  When the graph relations hold, the product of the
    generator matrices along any reduced expression of a positive element
    is independent of the expression, which is what :func:`check_graph_relations`
    verifies.
    """

    def __init__(self, graph, matrices):
        self.graph = graph
        labels = graph.generator_labels()
        missing = set(labels) - set(matrices)
        if missing:
            raise ValueError(f"missing matrices for generators {sorted(missing)}")
        dims = {np.asarray(m).shape for m in matrices.values()}
        if len(dims) != 1 or any(a != b for a, b in dims):
            raise ValueError("generator matrices must be square and same-size")
        self.dimension = next(iter(dims))[0]
        self.matrices = {k: np.asarray(matrices[k], dtype=complex) for k in labels}

    def _vertex_generator_matrices(self, vertex):
        ops = self.graph.ops[vertex]
        if ops.kind == "Z":
            return {vertex: self.matrices[vertex]}
        return {s: self.matrices[s] for s in ops.monoid.generators}

    def of(self, x):
        """V(x) for positive x, multiplied along the canonical expression."""
        x = x if isinstance(x, NormalWord) else self.graph.reduce(x)
        if not is_positive(self.graph, x):
            raise ValueError("the extension is defined on positive elements")
        out = np.eye(self.dimension, dtype=complex)
        for s in x.syllables:
            ops = self.graph.ops[s.vertex]
            if ops.kind == "Z":
                out = out @ np.linalg.matrix_power(self.matrices[s.vertex], s.element)
            else:
                for letter in ops.positive_word(s.element):
                    out = out @ self.matrices[letter]
        return out

    def of_word(self, vertex, letters):
        out = np.eye(self.dimension, dtype=complex)
        for letter in letters:
            out = out @ self.matrices[letter]
        return out


@dataclass(frozen=True)
class RelationReport:
    ok: bool
    violations: tuple  # (description, residual norm) pairs

    def __bool__(self):
        return self.ok


def _residual(a, b):
    return float(np.linalg.norm(a - b, ord=2)) if a.size else 0.0


def check_graph_relations(family, tol=1e-9, ball=None, samples=25, seed=0):
    """Verify the defining relations of the graph product on a family.

    Checks, to the tolerance: each generator is an isometry; cross-vertex
    pairs *-commute (adjacent vertices) or have orthogonal ranges
    (non-adjacent); within an Artin vertex the braid relations and the
    generator covariance V_s V_s^* V_t V_t^* = V_{s v t} V_{s v t}^* hold.
    If a ball is supplied, additionally samples pairs from it and tests
    the full covariance identity with the computed lub (zero when the lub
    is infinite).
    """
    graph = family.graph
    bad = []

    def expect(desc, a, b):
        r = _residual(a, b)
        if r > tol:
            bad.append((desc, r))

    eye = np.eye(family.dimension, dtype=complex)
    for label, mat in family.matrices.items():
        expect(f"isometry {label}", mat.conj().T @ mat, eye)

    per_vertex = {
        v: family._vertex_generator_matrices(v) for v in graph.vertices
    }
    for i, v in enumerate(graph.vertices):
        for w in graph.vertices[i + 1:]:
            for ls, ms in per_vertex[v].items():
                for lt, mt in per_vertex[w].items():
                    if graph.adjacent(v, w):
                        expect(f"commute {ls},{lt}", ms @ mt, mt @ ms)
                        expect(
                            f"*-commute {ls},{lt}",
                            ms.conj().T @ mt,
                            mt @ ms.conj().T,
                        )
                    else:
                        expect(
                            f"orthogonal ranges {ls},{lt}",
                            ms.conj().T @ mt,
                            np.zeros_like(ms),
                        )

    for v in graph.vertices:
        ops = graph.ops[v]
        if ops.kind != "artin":
            continue
        monoid = ops.monoid
        gens = monoid.generators
        for ti, t in enumerate(gens):
            for s in gens[:ti]:
                m = monoid.coxeter(s, t)
                lhs = monoid._alt(s, t, m)
                rhs = monoid._alt(t, s, m)
                expect(
                    f"braid relation <{s}{t}>^{m}",
                    family.of_word(v, lhs),
                    family.of_word(v, rhs),
                )
                vs = family.matrices[s]
                vt = family.matrices[t]
                vj = family.of_word(v, monoid.lub_words((s,), (t,)))
                expect(
                    f"generator covariance {s},{t}",
                    vs @ vs.conj().T @ vt @ vt.conj().T,
                    vj @ vj.conj().T,
                )

    if ball is not None:
        rng = np.random.default_rng(seed)
        pool = [x for x in ball.elements if not x.is_identity]
        for _ in range(samples):
            if not pool:
                break
            x = pool[rng.integers(len(pool))]
            y = pool[rng.integers(len(pool))]
            vx = family.of(x)
            vy = family.of(y)
            lhs = vx @ vx.conj().T @ vy @ vy.conj().T
            join = lub(graph, x, y)
            if join is INFINITY:
                rhs = np.zeros_like(lhs)
            else:
                vj = family.of(join)
                rhs = vj @ vj.conj().T
            expect(f"covariance {x},{y}", lhs, rhs)

    return RelationReport(not bad, tuple(bad))


def check_toeplitz_relations(graph, ball):
    """Exact self-check of the truncated Toeplitz family.

    Products are compared only on columns whose image cannot escape the
    ball, which makes every comparison exact 0/1 arithmetic.
    """
    labels = graph.generator_labels()
    ops_by_label = {
        label: toeplitz_op(graph, graph.reduce([graph.syllable(v, e)]), ball)
        for label, (v, e) in labels.items()
    }
    bad = []

    def compare(desc, a, b, margin):
        keep = [
            j for j, y in enumerate(ball.elements)
            if y.degree <= ball.max_degree - margin
        ]
        if not keep:
            return
        da = a.matrix[:, keep]
        db = b.matrix[:, keep]
        if (da != db).nnz:
            bad.append((desc, float(abs(da - db).max())))

    items = sorted(labels.items())
    for i, (ls, (vs, _)) in enumerate(items):
        ts = ops_by_label[ls]
        for lt, (vt, _) in items[i + 1:]:
            tt = ops_by_label[lt]
            if vs == vt:
                continue
            if graph.adjacent(vs, vt):
                compare(f"commute {ls},{lt}", ts @ tt, tt @ ts, 2)
                compare(f"*-commute {ls},{lt}", ts.adjoint() @ tt, tt @ ts.adjoint(), 1)
            else:
                zero = SparseOperator(
                    len(ball), sp.csr_matrix((len(ball), len(ball)))
                )
                compare(f"orthogonal ranges {ls},{lt}", ts.adjoint() @ tt, zero, 1)

    for v in graph.vertices:
        ops = graph.ops[v]
        if ops.kind != "artin":
            continue
        monoid = ops.monoid
        for ti, t in enumerate(monoid.generators):
            for s in monoid.generators[:ti]:
                m = monoid.coxeter(s, t)
                left = _word_op(graph, v, monoid._alt(s, t, m), ops_by_label)
                right = _word_op(graph, v, monoid._alt(t, s, m), ops_by_label)
                compare(f"braid relation <{s}{t}>^{m}", left, right, m)

    return RelationReport(not bad, tuple(bad))


def _word_op(graph, vertex, letters, ops_by_label):
    n = ops_by_label[next(iter(ops_by_label))].dimension
    out = SparseOperator(n, sp.identity(n, format="csr"))
    for letter in letters:
        out = out @ ops_by_label[letter]
    return out


# ---------------------------------------------------------------------------
# Norm estimation
# ---------------------------------------------------------------------------

def norm_estimate(graph, weights, ball, tol=1e-9, max_iter=10_000):
    """Largest singular value of the truncated convolution sum lambda_s T_s.

    Power iteration on A^T A starting from the normalized all-ones vector;
    stops when the Rayleigh quotient changes by less than the relative
    tolerance.  The result is at most sum(lambda) and is nondecreasing in
    the ball degree (nested compressions).
    """
    if not weights:
        raise ValueError("norm_estimate needs a nonempty weight function")
    acc = None
    for x, lam in sorted(weights.items(), key=lambda kv: graph.sort_key(kv[0])):
        if lam < 0:
            raise ValueError("weights must be nonnegative")
        if x not in ball:
            raise ValueError("weight support must lie inside the ball")
        term = lam * toeplitz_op(graph, x, ball).matrix
        acc = term if acc is None else acc + term
    a = acc.tocsr()
    at = a.T.tocsr()
    v = np.ones(len(ball)) / np.sqrt(len(ball))
    rayleigh = 0.0
    for _ in range(max_iter):
        w = at @ (a @ v)
        new = float(v @ w)
        norm_w = float(np.linalg.norm(w))
        if norm_w == 0.0:
            return 0.0
        v = w / norm_w
        if abs(new - rayleigh) <= tol * max(new, 1.0):
            rayleigh = new
            break
        rayleigh = new
    return float(np.sqrt(rayleigh))


def norm_curve(graph, weights_by_label, degrees, tol=1e-9, size_cap=200_000):
    """Rows (degree, ball size, norm estimate) for generator weights."""
    labels = graph.generator_labels()
    gen_words = {}
    for label, (v, e) in labels.items():
        gen_words[label] = graph.reduce([graph.syllable(v, e)])
    unknown = set(weights_by_label) - set(gen_words)
    if unknown:
        raise ValueError(f"unknown generator labels {sorted(unknown)}")
    rows = []
    for n in degrees:
        ball = enumerate_ball(graph, n, size_cap=size_cap)
        weights = {gen_words[k]: w for k, w in weights_by_label.items()}
        rows.append((n, len(ball), norm_estimate(graph, weights, ball, tol=tol)))
    return rows
