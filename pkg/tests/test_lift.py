import random

import numpy as np
import pytest

from nullsolve.apps.configuration import services as config
from nullsolve.apps.covering.domain.covering import build_kappa_covering, kappa
from nullsolve.apps.covering.domain.ivpoly import FactoredIVP, IVPoly, eval_binomial
from nullsolve.apps.covering.domain.models import CoveringFamily, ResidueSet
from nullsolve.apps.nullstellensatz.domain.lift import (
    brute_force_cn, build_main_polynomial, expand_to_unit_monomials, psi_h, psi_r, solve_explicit_cn
)
from nullsolve.apps.nullstellensatz.domain.models import IntMultiPoly, Monomial, UnitSumPoly, bits_to_code
from nullsolve.core.exceptions import CapExceeded, DegreeBoundViolated, FullCoefficientZero, NoSolution

X1 = Monomial.of(1)
X2 = Monomial.of(2)
X1X2 = Monomial.of(1, 2)


def unit_sum(m, *terms):
    return UnitSumPoly(m, terms)


def random_unit_sum(rng, m, max_terms=12):
    terms = tuple(
        Monomial.of(*rng.sample(range(1, m + 1), rng.randint(0, m)))
        for _ in range(rng.randint(0, max_terms))
    )
    return UnitSumPoly(m, terms)


class TestExpandToUnitMonomials:
    def test_negative_coefficient_is_reduced(self):
        assert expand_to_unit_monomials((-1,), 4).terms == (X1, X1, X1)

    def test_zero_coefficients(self):
        assert expand_to_unit_monomials((0, 0), 7).terms == ()

    def test_direct_expansion(self):
        assert expand_to_unit_monomials((1, 2), 4).terms == (X1, X2, X2)

    def test_values_agree_mod_modulus(self):
        coefs = (5, -3, 2)
        f = expand_to_unit_monomials(coefs, 4)
        for code in range(8):
            bits = [(code >> j) & 1 for j in range(3)]
            assert f.evaluate(code) % 4 == sum(a * b for a, b in zip(coefs, bits)) % 4


class TestPsi:
    def test_pair_product(self):
        assert psi_r(unit_sum(2, X1, X2), 2) == IntMultiPoly(2, {0b11: 1})

    def test_multilinear_reduction(self):
        lifted = psi_r(unit_sum(2, X1, X2, X1X2), 2)
        assert lifted == IntMultiPoly(2, {0b11: 3})
        assert lifted.evaluate(0b11) == 3

    def test_zeroth_lift_is_one(self):
        assert psi_r(unit_sum(2, X1, X1X2), 0) == IntMultiPoly.constant(2, 1)

    def test_r_above_term_count(self):
        assert psi_r(unit_sum(2, X1), 3).is_zero()

    def test_first_binomial_is_f(self):
        assert psi_h(unit_sum(2, X1, X2), IVPoly((0, 1))) == IntMultiPoly(2, {0b01: 1, 0b10: 1})

    def test_one_minus_x(self):
        lifted = psi_h(unit_sum(2, X1, X2), IVPoly((1, -1)))
        assert lifted == IntMultiPoly(2, {0: 1, 0b01: -1, 0b10: -1})
        assert lifted.evaluate(0b11) == -1

    def test_empty_sum_gives_h_at_zero(self):
        assert psi_h(unit_sum(3), IVPoly((5, 3, 1))) == IntMultiPoly.constant(3, 5)

    def test_values_are_h_of_f(self):
        rng = random.Random(7)
        for _ in range(40):
            m = rng.randint(1, 6)
            f = random_unit_sum(rng, m)
            h = IVPoly(tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 6))))
            lifted = psi_h(f, h)
            assert lifted.degree <= h.degree * f.degree
            for code in range(1 << m):
                assert lifted.evaluate(code) == eval_binomial(h, f.evaluate(code))

    @pytest.mark.slow
    def test_values_are_h_of_f_on_a_thousand_pairs(self):
        rng = random.Random(8)
        for _ in range(1000):
            m = rng.randint(1, 10)
            f = random_unit_sum(rng, m)
            h = IVPoly(tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 6))))
            codes = np.arange(1 << m, dtype=np.int64)
            table = np.array([eval_binomial(h, v) for v in range(len(f) + 1)], dtype=np.int64)
            expected = table[f.evaluate_batch(codes, len(f) + 1)]
            assert np.array_equal(psi_h(f, h).evaluate_batch(codes), expected), (str(f), str(h))

    def test_batch_evaluation_matches_pointwise(self):
        f = unit_sum(3, X1, X1, X2, X1X2, Monomial.of(3))
        lifted = psi_h(f, IVPoly((2, -3, 1)))
        codes = np.arange(8, dtype=np.int64)
        assert list(lifted.evaluate_batch(codes)) == [lifted.evaluate(c) for c in range(8)]
        assert list(lifted.evaluate_batch(codes, 5)) == [lifted.evaluate(c, 5) for c in range(8)]
        assert list(f.evaluate_batch(codes, 2)) == [f.evaluate(c) % 2 for c in range(8)]

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_degree_bound(self, r):
        rng = random.Random(r)
        f = random_unit_sum(rng, 5)
        assert psi_r(f, r).degree <= r * f.degree


class TestBuildMainPolynomial:
    def test_single_constraint_over_f2(self):
        family = CoveringFamily(2, 1, (FactoredIVP((1,), 2, 0),))
        f, c = build_main_polynomial([unit_sum(2, X1, X2)], [family], 2)
        assert c == 1
        assert f == IntMultiPoly(2, {0b11: 1})

    def test_no_constraints(self):
        f, c = build_main_polynomial([], [], 2, m=1)
        assert (f, c) == (IntMultiPoly(1, {0b1: 1}), 1)

    def test_degree_bound_is_strict(self):
        family = CoveringFamily(2, 1, (FactoredIVP((1,), 2, 0),))
        with pytest.raises(DegreeBoundViolated):
            build_main_polynomial([unit_sum(1, X1)], [family], 2)

    def test_nonzero_exactly_at_solutions(self):
        # x1 + x2 mod 3 avoiding 1, with a third variable
        g = unit_sum(3, X1, X2)
        f, c = build_main_polynomial([g], [CoveringFamily(3, 1, (FactoredIVP((1,), 3, 0),))], 3)
        assert f.evaluate(0, 3) == 0
        assert f.coefficient(0b111) % 3 != 0
        for code in range(1, 8):
            satisfied = g.evaluate(code) % 3 != 1
            assert (f.evaluate(code, 3) != 0) == satisfied

    @pytest.mark.parametrize("seed", range(6))
    def test_kappa_covering_mod_four_gives_only_solutions(self, seed):
        rng = random.Random(seed)
        q = ResidueSet(2, 2, frozenset({0} | {x for x in (1, 2, 3) if rng.random() < 0.4}))
        family = build_kappa_covering(q.complement())
        m = kappa(q.complement()) + rng.randint(1, 3)
        g = expand_to_unit_monomials(tuple(rng.randrange(4) for _ in range(m)), 4)
        f, c = build_main_polynomial([g], [family], 2)
        assert f.evaluate(0, 2) == 0
        assert f.coefficient((1 << m) - 1) % 2 == 1
        nonzero = [code for code in range(1, 1 << m) if f.evaluate(code, 2)]
        assert nonzero
        assert all(g.evaluate(code) % 4 in q for code in nonzero)


class TestSolveExplicitCN:
    def test_full_monomial(self):
        assert solve_explicit_cn(IntMultiPoly(2, {0b11: 1}), 2) == (1, 1)

    def test_substitution_order(self):
        assert solve_explicit_cn(IntMultiPoly(2, {0b01: 1, 0b11: 1}), 2) == (1, 0)

    def test_missing_full_coefficient(self):
        with pytest.raises(FullCoefficientZero):
            solve_explicit_cn(IntMultiPoly(2, {0b01: 1, 0b10: 1}), 2)

    def test_even_full_coefficient(self):
        with pytest.raises(FullCoefficientZero):
            solve_explicit_cn(IntMultiPoly(2, {0b11: 2}), 2)

    def test_random_polynomials(self):
        rng = random.Random(3)
        for _ in range(500):
            m = rng.randint(1, 16)
            coeffs = {rng.randrange(1 << m): 1 for _ in range(rng.randint(0, 20))}
            coeffs[(1 << m) - 1] = 1
            f = IntMultiPoly(m, coeffs)
            assert f.evaluate(bits_to_code(solve_explicit_cn(f, m)), 2) == 1


class TestBruteForceCN:
    def test_even_pair(self):
        q = ResidueSet(2, 1, frozenset({0}))
        assert brute_force_cn([unit_sum(2, X1, X2)], [q]) == (1, 1)

    def test_extremal_has_no_solution(self):
        f = expand_to_unit_monomials((3, 3, 3), 4)
        with pytest.raises(NoSolution):
            brute_force_cn([f], [ResidueSet(2, 2, frozenset({0}))])

    def test_no_constraints(self):
        assert brute_force_cn([], [], m=1) == (1,)

    def test_smallest_code_wins(self):
        q = ResidueSet(2, 1, frozenset({0}))
        f = unit_sum(3, Monomial.of(3))
        assert brute_force_cn([f], [q]) == (1, 0, 0)

    def test_partition_does_not_change_the_answer(self):
        f = expand_to_unit_monomials((1, 1, 1, 1, 1, 1, 1), 4)
        q = ResidueSet(2, 2, frozenset({0}))
        expected = brute_force_cn([f], [q])
        config.set('search_chunk_bits', 1)
        assert brute_force_cn([f], [q]) == expected == (1, 1, 1, 1, 0, 0, 0)

    def test_cap(self):
        config.set('brute_force_max_vars', 3)
        with pytest.raises(CapExceeded):
            brute_force_cn([unit_sum(4, X1)], [ResidueSet(2, 1, frozenset({0}))])
