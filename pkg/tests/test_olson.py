import random

import pytest

from nullsolve.apps.covering.domain.covering import r_zero_set, sigma
from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.apps.olson.application import get_olson_service, solve_olson
from nullsolve.apps.olson.domain.models import OlsonInstance, subset_from_bits
from nullsolve.apps.olson.domain.olson import (
    alon_friedland_kalai_bound, extremal_sequence, kappa_bound, olson_value, reduce_even_sum
)
from nullsolve.apps.olson.domain.oracle import F_exact
from nullsolve.apps.olson.engines import OlsonEngineFactory
from nullsolve.apps.olson.engines.brute import BruteForceEngine
from nullsolve.apps.olson.infrastructure import format_olson, parse_olson
from nullsolve.apps.ppa.domain.models import LEAF
from nullsolve.core.exceptions import (
    CapExceeded, ColumnSumNotDivisible, EngineUnsupported, NoSolution, ParseError, PreconditionViolated,
    RangeViolation, VerificationFailed, ZeroMissing
)
from nullsolve.core.instance_files import read_text


def zeros(p, *d):
    return tuple(ResidueSet(p, di, frozenset({0})) for di in d)


def instance(p, d, rows, q=None):
    return OlsonInstance(p, tuple(d), tuple(tuple(r) for r in rows), q or zeros(p, *d))


TRIANGLE = ((1, 0, 1), (1, 1, 0), (0, 1, 1))


class TestOlsonInstance:
    def test_exponents_must_not_increase(self):
        with pytest.raises(RangeViolation):
            instance(2, (1, 2), ((1,), (1,)))

    def test_targets_contain_zero(self):
        with pytest.raises(ZeroMissing):
            instance(2, (1,), ((1,),), (ResidueSet(2, 1, frozenset({1})),))

    def test_is_solution(self):
        inst = instance(2, (2,), ((1, 3, 2),))
        assert inst.is_solution((1, 2))
        assert not inst.is_solution(())
        assert not inst.is_solution((1, 1))
        assert not inst.is_solution((4,))

    def test_subset_from_bits(self):
        assert subset_from_bits((1, 0, 1)) == (1, 3)


class TestSolveOlson:
    def test_even_pair(self):
        assert solve_olson(instance(2, (1,), ((1, 1),))) == (1, 2)

    def test_extremal_sequence_has_no_solution(self):
        with pytest.raises(NoSolution):
            solve_olson(instance(2, (2,), ((3, 3, 3),)))

    def test_four_ones(self):
        assert solve_olson(instance(2, (2,), ((1, 1, 1, 1),))) == (1, 2, 3, 4)

    def test_unknown_engine(self):
        with pytest.raises(EngineUnsupported):
            OlsonEngineFactory.create_engine("simplex")

    def test_wrong_answer_is_caught(self, mocker):
        mocker.patch.object(BruteForceEngine, "solve", return_value=(1,))
        with pytest.raises(VerificationFailed):
            solve_olson(instance(2, (1,), ((1, 1),)))

    @pytest.mark.parametrize("p, d", [
        (2, (1,)), (2, (2,)), (2, (3,)), (3, (1,)), (3, (2,)),
        pytest.param(2, (1, 2), marks=pytest.mark.slow),
        pytest.param(2, (3, 3), marks=pytest.mark.slow),
        pytest.param(3, (1, 2), marks=pytest.mark.slow),
    ])
    def test_above_the_kappa_bound_a_solution_exists(self, p, d):
        rng = random.Random(p * 100 + sum(d) * 10 + len(d))
        for _ in range(200):
            q = tuple(
                ResidueSet(p, di, frozenset([0] + [x for x in range(1, p ** di) if rng.random() < 0.4]))
                for di in d
            )
            m = kappa_bound(p, d, q) + 1
            rows = tuple(tuple(rng.randrange(p ** di) for _ in range(m)) for di in d)
            inst = OlsonInstance(p, d, rows, q, m)
            assert inst.is_solution(solve_olson(inst))

    def test_extremal_message(self):
        with pytest.raises(NoSolution, match=r"extremal instance): m = 3 does not exceed the kappa bound 3"):
            solve_olson(instance(2, (2,), ((3, 3, 3),)))


class TestPathFollowingEngine:
    def test_even_pair(self):
        steps = []
        subset = get_olson_service().solve_olson(
            instance(2, (1,), ((1, 1),)), "ppa", on_step=lambda k, step: steps.append(step)
        )
        assert subset == (1, 2)
        assert steps[0].node == LEAF
        assert steps[-1].departure is None

    def test_four_ones(self):
        assert solve_olson(instance(2, (2,), ((1, 1, 1, 1),)), "ppa") == (1, 2, 3, 4)

    def test_odd_prime(self):
        with pytest.raises(EngineUnsupported):
            solve_olson(instance(3, (1,), ((1, 1, 1),)), "ppa")

    def test_agrees_with_brute_force_on_random_instances(self):
        rng = random.Random(11)
        for _ in range(10):
            m = rng.randint(2, 5)
            inst = instance(2, (1,), (tuple(rng.randrange(2) for _ in range(m)),))
            assert inst.is_solution(solve_olson(inst, "ppa"))


class TestReduceEvenSum:
    def test_triangle(self):
        reduced = reduce_even_sum(instance(2, (1, 1, 1), TRIANGLE))
        assert reduced.a == (TRIANGLE[0], TRIANGLE[1], (1, 1, 1))
        assert reduced.d == (1, 1, 0)

    def test_halved_column(self):
        reduced = reduce_even_sum(instance(2, (1, 1), ((2,), (2,))))
        assert reduced.a == ((2,), (2,))
        assert reduced.d == (1, 0)

    def test_odd_column_sum(self):
        with pytest.raises(ColumnSumNotDivisible):
            reduce_even_sum(instance(2, (1, 1), ((1, 0), (0, 0))))

    def test_targets_must_be_zero(self):
        q = (ResidueSet(2, 1, frozenset({0, 1})),)
        with pytest.raises(PreconditionViolated):
            reduce_even_sum(instance(2, (1,), ((2,),), q))

    def test_solution_solves_the_original(self):
        inst = instance(2, (1, 1, 1), TRIANGLE)
        assert get_olson_service().solve_even_sum(inst) == (1, 2, 3)

    def test_random_round_trip(self):
        rng = random.Random(5)
        for _ in range(20):
            m = rng.randint(3, 8)
            top = tuple(rng.randrange(4) for _ in range(m))
            bottom = tuple(x % 2 for x in top)
            inst = instance(2, (2, 2), (top, bottom))
            try:
                subset = get_olson_service().solve_even_sum(inst)
            except NoSolution:
                continue
            assert inst.is_solution(subset)


class TestExtremalSequence:
    def test_single_row(self):
        inst = extremal_sequence([{0, 1}], 2, (2,))
        assert inst.m == 3
        assert inst.a == ((-1, -1, -1),)
        assert inst.q == zeros(2, 2)

    def test_block_structure(self):
        inst = extremal_sequence([{0}, {0}], 2, (1, 1))
        assert inst.a == ((-1, 0), (0, -1))

    def test_empty_digit_set(self):
        inst = extremal_sequence([set()], 3, (1,))
        assert inst.m == 0
        with pytest.raises(NoSolution):
            solve_olson(inst)

    @pytest.mark.parametrize("rs, p, d", [
        ([{0}], 2, (2,)),
        ([{1}], 2, (2,)),
        ([{0, 1}], 3, (2,)),
        ([{0}, {1}], 2, (2, 2)),
        ([{0, 2}], 2, (3,)),
    ])
    def test_no_solution_and_one_more_column_suffices(self, rs, p, d):
        with pytest.raises(NoSolution):
            solve_olson(extremal_sequence(rs, p, d))

        rng = random.Random(len(rs) + p)
        q = tuple(r_zero_set(r, p, di) for r, di in zip(rs, d))
        m = sum(sigma(r, p) for r in rs) + 1
        for _ in range(20):
            rows = tuple(tuple(rng.randrange(p ** di) for _ in range(m)) for di in d)
            inst = OlsonInstance(p, d, rows, q, m)
            assert inst.is_solution(solve_olson(inst))


class TestBounds:
    def test_closed_forms(self):
        q = zeros(2, 2)
        assert olson_value(2, (2,)) == 3
        assert kappa_bound(2, (2,), q) == 3
        assert alon_friedland_kalai_bound(2, (2,), q) == 3

    def test_larger_target(self):
        q = (ResidueSet(3, 1, frozenset({0, 1})),)
        assert kappa_bound(3, (1,), q) == 1
        assert alon_friedland_kalai_bound(3, (1,), q) == 1


class TestFExact:
    @pytest.mark.parametrize("p, d, expected", [(2, 1, 1), (3, 1, 2), (2, 2, 3)])
    def test_olson_values(self, p, d, expected):
        assert F_exact(p, (d,), zeros(p, d)) == expected

    def test_r_zero_target(self):
        assert F_exact(2, (2,), (ResidueSet(2, 2, frozenset({0, 2})),)) == 1

    def test_two_rows(self):
        assert F_exact(2, (1, 1), zeros(2, 1, 1)) == 2

    @pytest.mark.parametrize("rs", [[set()], [{0}], [{1}], [{0, 1}]])
    def test_r_zero_sets(self, rs):
        q = tuple(r_zero_set(r, 2, 2) for r in rs)
        assert F_exact(2, (2,), q) == sum(sigma(r, 2) for r in rs)

    def test_m_cap(self):
        with pytest.raises(CapExceeded):
            F_exact(2, (2,), zeros(2, 2), m_cap=2)

    def test_column_space_cap(self):
        with pytest.raises(CapExceeded):
            F_exact(3, (2, 2), zeros(3, 2, 2))


class TestOlsonFormat:
    def test_parse_extremal_file(self, data_file):
        inst = parse_olson(read_text(data_file("extremal.olson")))
        assert inst == instance(2, (2,), ((3, 3, 3),))

    def test_round_trip(self):
        inst = instance(2, (2, 1), ((1, -1, 6), (0, 1, 1)), (
            ResidueSet(2, 2, frozenset({0, 3})), ResidueSet(2, 1, frozenset({0}))
        ))
        assert parse_olson(format_olson(inst)) == inst

    def test_bad_token_is_located(self):
        with pytest.raises(ParseError) as e:
            parse_olson("olson 2 1 2\nd: 1\nQ_1: 0\n1 x\n")
        assert (e.value.line, e.value.column) == (4, 3)

    def test_short_row(self):
        with pytest.raises(ParseError) as e:
            parse_olson("olson 2 1 2\nd: 1\nQ_1: 0\n1\n")
        assert e.value.line == 4

    def test_target_without_zero(self):
        with pytest.raises(ParseError):
            parse_olson("olson 2 1 2\nd: 1\nQ_1: 1\n1 1\n")

    def test_missing_rows(self):
        with pytest.raises(ParseError) as e:
            parse_olson("olson 2 1 2\nd: 1\nQ_1: 0\n")
        assert e.value.line == 4
