import itertools
import random

import pytest

from crsolve import (
    InfeasibleError,
    SolutionOrdering,
    all_min_sum,
    build_problem,
    check_solution,
    enumerate_solutions,
    falsified_sum,
    ocf_min,
    parse_kb,
    pareto_min,
    propagate,
    solve_min_sum,
)

from tests.helpers import brute_solutions, check_ref, compile_ref, non_dominated_ref, random_kb_text

CONTRADICTORY_TEXT = "vars: a\nrule: (a | top)\nrule: (!a | top)\n"
DEGENERATE_TEXT = "vars: a\nrule: (a | bot)\n"
EMPTY_TEXT = "vars: a\n"


@pytest.fixture(scope="module")
def birds_problem(birds):
    return build_problem(birds)


@pytest.fixture(scope="module")
def penguins_problem(penguins):
    return build_problem(penguins)


class TestBuildProblem:
    def test_birds_domains(self, birds_problem):
        assert birds_problem.domains == ((0, 3),) * 3

    def test_penguins_domains(self, penguins_problem):
        assert penguins_problem.domains == ((0, 5),) * 5

    def test_empty_kb(self):
        p = build_problem(parse_kb(EMPTY_TEXT))
        assert p.domains == ()
        assert not p.infeasible

    def test_bound_override(self, birds):
        p = build_problem(birds, bound=7)
        assert p.domains == ((0, 7),) * 3
        with pytest.raises(ValueError):
            build_problem(birds, bound=-1)

    def test_degenerate_rules_detected(self):
        p = build_problem(parse_kb(DEGENERATE_TEXT))
        assert p.degenerate_rules == (1,)


class TestFalsifiedSum:
    def test_world_verifying_everything(self, birds_problem):
        # b f a verifies all three rules, so nothing contributes
        assert falsified_sum(birds_problem, 2, 0b111, (1, 0, 1)) == 0
        assert falsified_sum(birds_problem, 2, 0b111, (3, 3, 3)) == 0

    def test_world_falsifying_rule1_only(self, birds_problem):
        # b !f a falsifies rule 1 only
        assert falsified_sum(birds_problem, 2, 0b101, (1, 0, 1)) == 1

    def test_excludes_own_rule(self, penguins_problem):
        # p b f w k falsifies only rule 3, which is excluded for i=3
        assert falsified_sum(penguins_problem, 3, 0b11111, (1, 2, 2, 1, 1)) == 0

    def test_validation(self, birds_problem):
        with pytest.raises(ValueError):
            falsified_sum(birds_problem, 0, 0, (1, 0, 1))
        with pytest.raises(ValueError):
            falsified_sum(birds_problem, 1, 8, (1, 0, 1))
        with pytest.raises(ValueError):
            falsified_sum(birds_problem, 1, 0, (1, 0))


class TestCheckSolution:
    def test_birds_known_solution(self, birds_problem):
        assert check_solution(birds_problem, (1, 0, 1)) is True

    def test_birds_zero_vector(self, birds_problem):
        assert check_solution(birds_problem, (0, 0, 0)) is False

    def test_penguins_known_solution(self, penguins_problem):
        assert check_solution(penguins_problem, (1, 2, 2, 1, 1)) is True

    def test_negative_component(self, birds_problem):
        assert check_solution(birds_problem, (-1, 0, 1)) is False

    def test_degenerate_rule_never_satisfiable(self):
        p = build_problem(parse_kb(DEGENERATE_TEXT))
        assert not any(check_solution(p, (x,)) for x in range(5))

    def test_empty_kb(self):
        p = build_problem(parse_kb(EMPTY_TEXT))
        assert check_solution(p, ()) is True

    def test_length_mismatch(self, birds_problem):
        with pytest.raises(ValueError):
            check_solution(birds_problem, (1, 0))

    def test_agrees_with_reference_on_birds_box(self, birds, birds_problem):
        compiled = compile_ref(birds)
        for v in itertools.product(range(4), repeat=3):
            assert check_solution(birds_problem, v) == check_ref(birds, v, compiled)


class TestPropagate:
    def test_birds_fixpoint(self, birds_problem):
        assert propagate(birds_problem).domains == ((1, 3), (0, 3), (0, 3))

    def test_contradictory_defaults_infeasible(self):
        p = build_problem(parse_kb(CONTRADICTORY_TEXT))
        assert propagate(p).infeasible
        assert brute_solutions(parse_kb(CONTRADICTORY_TEXT)) == []

    def test_empty_kb_feasible(self):
        p = build_problem(parse_kb(EMPTY_TEXT))
        assert not propagate(p).infeasible

    def test_idempotent(self, birds_problem, penguins_problem):
        for p in (birds_problem, penguins_problem):
            once = propagate(p)
            assert propagate(once) == once

    def test_domains_only_shrink(self, birds_problem, penguins_problem):
        for p in (birds_problem, penguins_problem):
            tightened = propagate(p)
            for (lo0, hi0), (lo1, hi1) in zip(p.domains, tightened.domains):
                assert lo1 >= lo0
                assert hi1 <= hi0


class TestEnumerate:
    def test_birds_prefix(self, birds_problem):
        assert enumerate_solutions(birds_problem, limit=5).vectors == (
            (1, 0, 1),
            (1, 0, 2),
            (1, 0, 3),
            (1, 1, 0),
            (1, 1, 1),
        )

    def test_penguins_prefix(self, penguins_problem):
        assert enumerate_solutions(penguins_problem, limit=6).vectors == (
            (1, 2, 2, 1, 1),
            (1, 2, 2, 1, 2),
            (1, 2, 2, 1, 3),
            (1, 2, 2, 1, 4),
            (1, 2, 2, 1, 5),
            (1, 2, 2, 2, 1),
        )

    def test_empty_kb_single_empty_vector(self):
        p = build_problem(parse_kb(EMPTY_TEXT))
        result = enumerate_solutions(p)
        assert result.vectors == ((),)
        assert result.ordering is SolutionOrdering.ALL

    def test_degenerate_rule_yields_nothing(self):
        p = build_problem(parse_kb(DEGENERATE_TEXT))
        assert enumerate_solutions(p).vectors == ()

    def test_limit_zero_is_empty(self, birds_problem):
        assert enumerate_solutions(birds_problem, limit=0).vectors == ()

    def test_lexicographic_and_duplicate_free(self, birds_problem):
        vs = enumerate_solutions(birds_problem).vectors
        assert list(vs) == sorted(set(vs))

    def test_every_emitted_vector_checks(self, penguins_problem):
        vs = enumerate_solutions(penguins_problem).vectors
        assert all(check_solution(penguins_problem, v) for v in vs)

    def test_matches_brute_force(self, birds, birds_problem):
        assert list(enumerate_solutions(birds_problem).vectors) == brute_solutions(birds)


class TestSolveMinSum:
    def test_birds(self, birds_problem):
        assert solve_min_sum(birds_problem) == (2, (1, 0, 1))

    def test_penguins(self, penguins_problem):
        assert solve_min_sum(penguins_problem) == (7, (1, 2, 2, 1, 1))

    def test_empty_kb(self):
        p = build_problem(parse_kb(EMPTY_TEXT))
        assert solve_min_sum(p) == (0, ())

    def test_infeasible_raises(self):
        p = build_problem(parse_kb(CONTRADICTORY_TEXT))
        with pytest.raises(InfeasibleError):
            solve_min_sum(p)

    def test_degenerate_rule_reported(self):
        p = build_problem(parse_kb(DEGENERATE_TEXT))
        with pytest.raises(InfeasibleError) as err:
            solve_min_sum(p)
        assert err.value.degenerate_rules == (1,)
        assert "degenerate" in str(err.value)


class TestAllMinSum:
    def test_birds_two_minima(self, birds_problem):
        result = all_min_sum(birds_problem)
        assert result.vectors == ((1, 0, 1), (1, 1, 0))
        assert result.minimal_sum == 2
        assert result.ordering is SolutionOrdering.SUM

    def test_penguins_unique_minimum(self, penguins_problem):
        result = all_min_sum(penguins_problem)
        assert result.vectors == ((1, 2, 2, 1, 1),)
        assert result.minimal_sum == 7

    def test_empty_kb(self):
        p = build_problem(parse_kb(EMPTY_TEXT))
        assert all_min_sum(p).vectors == ((),)

    def test_equals_oracle_filter(self, birds, birds_problem):
        oracle = brute_solutions(birds)
        best = min(sum(v) for v in oracle)
        assert list(all_min_sum(birds_problem).vectors) == [v for v in oracle if sum(v) == best]


class TestParetoMin:
    def test_birds(self, birds_problem, birds):
        result = pareto_min(birds_problem)
        assert result.vectors == ((1, 0, 1), (1, 1, 0))
        assert list(result.vectors) == non_dominated_ref(brute_solutions(birds))

    def test_single_rule(self):
        p = build_problem(parse_kb("vars: b, f\nrule: (f | b)"))
        assert pareto_min(p).vectors == ((1,),)

    def test_penguins(self, penguins, penguins_problem):
        result = pareto_min(penguins_problem)
        assert result.vectors == ((1, 2, 2, 1, 1),)
        assert list(result.vectors) == non_dominated_ref(brute_solutions(penguins))

    def test_contains_all_sum_minima(self, birds_problem, penguins_problem):
        for p in (birds_problem, penguins_problem):
            assert set(all_min_sum(p).vectors) <= set(pareto_min(p).vectors)

    def test_infeasible_raises(self):
        with pytest.raises(InfeasibleError):
            pareto_min(build_problem(parse_kb(CONTRADICTORY_TEXT)))


class TestOcfMin:
    def test_birds_dominated_minimum_excluded(self, birds_problem):
        # (1,0,1) induces ranks pointwise below those of (1,1,0), so only
        # the former survives; both are sum- and componentwise-minimal.
        result = ocf_min(birds_problem)
        assert result.vectors == ((1, 0, 1),)
        assert result.ordering is SolutionOrdering.INDUCED_OCF

    def test_empty_kb(self):
        p = build_problem(parse_kb(EMPTY_TEXT))
        assert ocf_min(p).vectors == ((),)

    def test_penguins_contains_global_minimum(self, penguins_problem):
        assert (1, 2, 2, 1, 1) in ocf_min(penguins_problem).vectors

    def test_identical_rankings_all_retained(self):
        # A duplicated rule makes (0,1) and (1,0) distinct solutions with
        # the same induced ranking; neither dominates, both stay.
        kb = parse_kb("vars: b, f\nrule: (f | b)\nrule: (f | b)")
        result = ocf_min(build_problem(kb))
        assert result.vectors == ((0, 1), (1, 0))

    def test_infeasible_raises(self):
        with pytest.raises(InfeasibleError):
            ocf_min(build_problem(parse_kb(CONTRADICTORY_TEXT)))


class TestOracleEquivalence:
    def test_random_small_kbs(self):
        rng = random.Random(20250809)
        checked = 0
        for _ in range(40):
            kb = parse_kb(random_kb_text(rng))
            problem = build_problem(kb)
            oracle = brute_solutions(kb)
            assert list(enumerate_solutions(problem).vectors) == oracle
            if oracle:
                best = min(sum(v) for v in oracle)
                assert list(all_min_sum(problem).vectors) == [
                    v for v in oracle if sum(v) == best
                ]
                assert list(pareto_min(problem).vectors) == non_dominated_ref(oracle)
            else:
                with pytest.raises(InfeasibleError):
                    all_min_sum(problem)
            checked += 1
        assert checked == 40

    def test_determinism(self, penguins):
        first = enumerate_solutions(build_problem(penguins), limit=20).vectors
        second = enumerate_solutions(build_problem(penguins), limit=20).vectors
        assert first == second
