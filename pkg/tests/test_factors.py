"""Factor-level tests: reversing arithmetic and the finite-type check."""

import itertools

import pytest

from qlattice import ArtinOps, NotFiniteTypeError, ZOps, factor_from_spec
from qlattice.factors import coxeter_is_finite_type, validate_coxeter
from qlattice.oracles import (
    bfs_minimal_common_multiples,
    bfs_right_divisors,
    rewrite_closure,
    rewrite_equal,
)


def dihedral(m):
    return ArtinOps(["s", "t"], [[1, m], [m, 1]])


B3 = dihedral(3)
MON = B3.monoid


def words_up_to(monoid, length):
    for n in range(length + 1):
        yield from itertools.product(monoid.generators, repeat=n)


class TestFiniteType:
    def test_classification_accepts_the_finite_families(self):
        a3 = [[1, 3, 2], [3, 1, 3], [2, 3, 1]]
        b3m = [[1, 4, 2], [4, 1, 3], [2, 3, 1]]
        h3 = [[1, 5, 2], [5, 1, 3], [2, 3, 1]]
        f4 = [[1, 3, 2, 2], [3, 1, 4, 2], [2, 4, 1, 3], [2, 2, 3, 1]]
        d4 = [
            [1, 3, 2, 2],
            [3, 1, 3, 3],
            [2, 3, 1, 2],
            [2, 3, 2, 1],
        ]
        for m in (a3, b3m, h3, f4, d4):
            assert coxeter_is_finite_type(validate_coxeter(list("wxyz")[: len(m)], m))

    def test_classification_rejects_affine_and_infinite(self):
        tilde_a2 = [[1, 3, 3], [3, 1, 3], [3, 3, 1]]  # a 3-cycle
        tilde_a1 = [[1, None], [None, 1]]  # m = infinity
        big_label = [[1, 6, 2], [6, 1, 3], [2, 3, 1]]
        two_fours = [[1, 4, 2], [4, 1, 4], [2, 4, 1]]
        for m in (tilde_a2, tilde_a1, big_label, two_fours):
            assert not coxeter_is_finite_type(validate_coxeter(list("xyz")[: len(m)], m))

    def test_artin_ops_rejects_non_finite_type(self):
        with pytest.raises(NotFiniteTypeError):
            ArtinOps(["s", "t"], [[1, None], [None, 1]])

    def test_right_angled_matrices_must_be_modeled_as_graph_products(self):
        # m(s,t) = infinity is validated but rejected by the type check
        with pytest.raises(NotFiniteTypeError):
            factor_from_spec({"artin": {"generators": ["s", "t"], "m": [[1, 0], [0, 1]]}})

    def test_bad_matrices(self):
        with pytest.raises(ValueError):
            validate_coxeter(["s", "t"], [[1, 3], [4, 1]])
        with pytest.raises(ValueError):
            validate_coxeter(["s", "t"], [[2, 3], [3, 1]])
        with pytest.raises(ValueError):
            validate_coxeter(["s"], [[1, 1], [1, 1]])


class TestReversing:
    def test_generator_complements(self):
        assert MON.complement(("s",), ("s",)) == ()
        assert MON.complement(("s",), ("t",)) == ("t", "s")
        # s left-divides st, so st \ s is trivial and s \ st is the quotient
        assert MON.complement(("s", "t"), ("s",)) == ()
        assert MON.equal_words(MON.complement(("s",), ("s", "t")), ("t",))

    def test_complement_defines_the_lub(self):
        # s (s\t) = t (t\s) = the lub, for every generator pair and m
        for m in (2, 3, 4, 5):
            ops = dihedral(m)
            mon = ops.monoid
            left = ("s",) + mon.complement(("s",), ("t",))
            right = ("t",) + mon.complement(("t",), ("s",))
            assert mon.equal_words(left, right)
            assert left == mon._alt("s", "t", m)

    def test_complement_symmetry_on_words(self):
        for u, v in itertools.product(words_up_to(MON, 3), repeat=2):
            assert MON.equal_words(u + MON.complement(u, v), v + MON.complement(v, u))

    def test_equal_positive_examples(self):
        assert MON.equal_words(("s", "t", "s"), ("t", "s", "t"))
        assert not MON.equal_words(("s", "t"), ("t", "s"))
        assert MON.equal_words(("s", "s"), ("s", "s"))

    def test_equal_positive_matches_rewrite_bfs_up_to_length_5(self):
        words = list(words_up_to(MON, 5))
        for u in words:
            closure = rewrite_closure(MON, u)
            for v in words:
                if len(u) != len(v):
                    continue
                assert MON.equal_words(u, v) == (v in closure)

    def test_length_is_invariant(self):
        for u in words_up_to(MON, 5):
            for v in rewrite_closure(MON, u):
                assert len(v) == len(u)


class TestLatticeOps:
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_generator_lub_is_the_alternating_word(self, m):
        ops = dihedral(m)
        mon = ops.monoid
        got = mon.lub_words(("s",), ("t",))
        assert mon.equal_words(got, mon._alt("s", "t", m))
        minimal = bfs_minimal_common_multiples(mon, ("s",), ("t",), m + 1)
        assert len(minimal) == 1
        assert mon.equal_words(got, minimal[0])

    def test_lub_is_idempotent(self):
        for u in words_up_to(MON, 3):
            assert MON.equal_words(MON.lub_words(u, u), u)

    def test_lub_matches_bfs_minimal_common_multiple(self):
        # searching up to the claimed lub length also catches a lub that
        # is too long: the oracle would find a shorter common multiple
        small = [w for w in words_up_to(MON, 2)]
        for u, v in itertools.product(small, repeat=2):
            got = MON.lub_words(u, v)
            minimal = bfs_minimal_common_multiples(MON, u, v, len(got))
            assert minimal, f"no common multiple found for {u}, {v}"
            assert any(MON.equal_words(got, z) for z in minimal)

    def test_rgcd_examples(self):
        assert MON.equal_words(MON.rgcd_words(("s", "t"), ("t",)), ("t",))
        assert MON.rgcd_words(("s",), ("t",)) == ()

    def test_rgcd_matches_right_divisor_enumeration(self):
        small = [w for w in words_up_to(MON, 3) if w]
        for u, v in itertools.product(small, repeat=2):
            got = MON.rgcd_words(u, v)
            du = bfs_right_divisors(MON, u)
            dv = bfs_right_divisors(MON, v)
            common = [
                d for d in du if any(rewrite_equal(MON, d, e) for e in dv)
            ]
            best = max(common, key=len)
            assert len(got) == len(best)
            assert any(rewrite_equal(MON, got, d) for d in common if len(d) == len(got))


class TestFractions:
    def test_inverse_pair_collapses_to_identity(self):
        f = B3.element(("s",), ("t",))
        g = B3.element(("t",), ("s",))
        assert B3.is_identity(B3.multiply(f, g))

    def test_fraction_reduction_is_canonical(self):
        # st (ts)^-1 has the common right divisor removed
        f = B3.element(("s", "t"), ("t", "t"))
        assert MON.rgcd_words(f.num, f.den) == ()
        # multiplying back recovers the element
        back = B3.multiply(
            B3.element(f.num), B3.invert(B3.element(f.den))
        )
        assert back == f

    def test_fraction_identities_on_sampled_positives(self):
        # (a, b) = fraction of u v^-1: a <= u, b <= v, rgcd(a, b) = 1,
        # and a^-1 u = b^-1 v = u rgcd v
        small = [w for w in words_up_to(MON, 4)]
        for u, v in itertools.product(small[:20], repeat=2):
            f = B3.multiply(B3.element(u), B3.invert(B3.element(v)))
            a, b = f.num, f.den
            assert MON.left_divides(a, u)
            assert MON.left_divides(b, v)
            assert MON.rgcd_words(a, b) == ()
            e1 = MON.left_quotient(a, u)
            e2 = MON.left_quotient(b, v)
            assert MON.equal_words(e1, e2)
            assert MON.equal_words(e1, MON.rgcd_words(u, v))

    def test_refactorizing_is_stable(self):
        f = B3.element(("s", "t", "s"), ("t",))
        again = B3.element(f.num, f.den)
        assert again == f

    def test_degree_is_the_letter_count_difference(self):
        f = B3.element(("s", "t", "s"), ("t",))
        assert B3.degree(f) == 2
        assert B3.degree(B3.invert(f)) == -2


class TestZOps:
    ops = ZOps()

    def test_total_order_lattice(self):
        assert self.ops.lub_or_infinity(3, 5) == 5
        assert self.ops.rgcd_of_positives(3, 5) == 3

    def test_factorize(self):
        assert self.ops.factorize(-3) == (0, 3)
        assert self.ops.factorize(3) == (3, 0)

    def test_spec_roundtrip(self):
        assert factor_from_spec("Z").kind == "Z"
        assert factor_from_spec(self.ops.spec_json()).kind == "Z"
