import random
from fractions import Fraction

import pytest

from conftest import cone
from oracles import fourier_motzkin_feasible
from paracon import (
    FinitePermutationAction,
    Permutation,
    TrivialAction,
    build_equations,
    compute_configurations,
    configuration_pair,
    counting_solution,
    solve_feasibility,
    verify_certificate,
    verify_solution,
)
from paracon.equations import LinearSystem


def system_for(action, elements, blocks):
    pair = configuration_pair(action, elements, blocks)
    cs = compute_configurations(pair)
    return cs, build_equations(cs)


class TestBuildEquations:
    def test_trivial_balance_rows_vanish(self, trivial3):
        _, system = system_for(trivial3, ["a"], [trivial3.point_set([0]), trivial3.point_set([1, 2])])
        balance = [row for label, row in zip(system.labels, system.rows) if label[0] == "balance"]
        assert balance and all(all(c == 0 for c in row) for row in balance)
        assert system.labels[-1] == ("normalize",)

    def test_z3_single_constraint(self, z3):
        cs, system = system_for(z3, ["a"], [z3.point_set([0]), z3.point_set([1, 2])])
        assert cs.configurations == ((1, 2), (2, 1), (2, 2))
        # row (1,1): f_(2,1) - f_(1,2) = 0 up to sign
        row_11 = system.rows[system.labels.index(("balance", 1, 1))]
        assert sorted(row_11) == [Fraction(-1), Fraction(0), Fraction(1)]

    def test_free_self_forces_zero(self, f2):
        cs, system = system_for(f2, ["a"], [cone("a"), cone("a").complement()])
        result = solve_feasibility(system)
        index = cs.configurations.index((2, 1))
        assert result.feasible
        assert result.solution[index] == 0
        # the (1,1) balance row alone pins the variable:
        row = system.rows[system.labels.index(("balance", 1, 1))]
        assert row[index] == 1 and sum(abs(c) for c in row) == 1

    def test_row_count(self, z4):
        _, system = system_for(z4, ["a", "aa"], [z4.point_set([0, 2]), z4.point_set([1, 3])])
        assert len(system.rows) == 2 * 2 + 1


class TestSolveFeasibility:
    def test_z3_solution_verifies(self, z3):
        _, system = system_for(z3, ["a"], [z3.point_set([0]), z3.point_set([1, 2])])
        result = solve_feasibility(system)
        assert result.feasible
        assert verify_solution(system, result.solution).ok

    def test_f2_five_block_certificate(self, f2, five_blocks):
        _, system = system_for(f2, ["a", "b"], five_blocks)
        result = solve_feasibility(system)
        assert not result.feasible
        assert verify_certificate(system, result.certificate).ok
        assert not fourier_motzkin_feasible(list(system.rows), list(system.rhs))

    def test_single_variable_normalization_only(self):
        system = LinearSystem(
            variables=((1,),),
            labels=(("normalize",),),
            rows=((Fraction(1),),),
            rhs=(Fraction(1),),
        )
        result = solve_feasibility(system)
        assert result.feasible and result.solution == (Fraction(1),)

    def test_deterministic(self, f2, five_blocks):
        _, system = system_for(f2, ["a", "b"], five_blocks)
        assert solve_feasibility(system) == solve_feasibility(system)

    def test_dichotomy(self, z3, f2, five_blocks):
        for action, elements, blocks in (
            (z3, ["a"], [z3.point_set([0]), z3.point_set([1, 2])]),
            (f2, ["a", "b"], five_blocks),
        ):
            _, system = system_for(action, elements, blocks)
            result = solve_feasibility(system)
            if result.feasible:
                assert verify_solution(system, result.solution).ok
                assert result.certificate is None
            else:
                assert verify_certificate(system, result.certificate).ok
                assert result.solution is None


class TestVerifySolution:
    def test_uniform_on_trivial(self, trivial3):
        _, system = system_for(trivial3, ["a"],
                               [trivial3.point_set([p]) for p in range(3)])
        assert verify_solution(system, [Fraction(1, 3)] * 3).ok

    def test_negative_entry(self, trivial3):
        _, system = system_for(trivial3, ["a"],
                               [trivial3.point_set([p]) for p in range(3)])
        report = verify_solution(system, [Fraction(2, 3), Fraction(2, 3), Fraction(-1, 3)])
        assert not report.ok and report.violation[0] == "nonnegativity"

    def test_wrong_total(self, trivial3):
        _, system = system_for(trivial3, ["a"],
                               [trivial3.point_set([p]) for p in range(3)])
        report = verify_solution(system, [Fraction(2, 3)] * 3)
        assert not report.ok and report.violation[1] == ("normalize",)

    def test_wrong_length(self, trivial3):
        _, system = system_for(trivial3, ["a"],
                               [trivial3.point_set([p]) for p in range(3)])
        assert not verify_solution(system, [Fraction(1)]).ok


class TestVerifyCertificate:
    def test_emitted_certificate(self, f2, five_blocks):
        _, system = system_for(f2, ["a", "b"], five_blocks)
        certificate = solve_feasibility(system).certificate
        assert verify_certificate(system, certificate).ok

    def test_zero_multipliers_rejected(self, f2, five_blocks):
        _, system = system_for(f2, ["a", "b"], five_blocks)
        report = verify_certificate(system, [Fraction(0)] * len(system.rows))
        assert not report.ok and report.violation[0] == "constant-not-positive"

    def test_wrong_system_rejected(self, f2, five_blocks, z3):
        _, infeasible_system = system_for(f2, ["a", "b"], five_blocks)
        certificate = solve_feasibility(infeasible_system).certificate
        _, other = system_for(z3, ["a", "a"], [z3.point_set([0]), z3.point_set([1, 2])])
        if len(other.rows) == len(infeasible_system.rows):
            assert not verify_certificate(other, certificate).ok
        else:
            assert not verify_certificate(other, certificate).ok  # length mismatch


class TestCountingSolution:
    def test_z3(self, z3):
        cs, system = system_for(z3, ["a"], [z3.point_set([0]), z3.point_set([1, 2])])
        values = counting_solution(cs)
        assert values == (Fraction(1, 3),) * 3
        assert verify_solution(system, values).ok

    def test_trivial_block_masses(self, trivial3):
        cs, system = system_for(trivial3, ["a"], [trivial3.point_set([0, 1]), trivial3.point_set([2])])
        assert counting_solution(cs) == (Fraction(2, 3), Fraction(1, 3))

    def test_z2_regular_all_pairs(self):
        z2 = FinitePermutationAction(2, {1: Permutation((1, 0))})
        for blocks in ([[0], [1]], [[0, 1]]):
            for elements in (["a"], ["a", "a"], ["e", "a"]):
                cs, system = system_for(z2, elements, [z2.point_set(b) for b in blocks])
                assert verify_solution(system, counting_solution(cs)).ok

    def test_needs_finite_action(self, f2):
        cs = compute_configurations(
            configuration_pair(f2, ["a"], [cone("a"), cone("a").complement()]))
        with pytest.raises(ValueError):
            counting_solution(cs)


def test_solver_agrees_with_fourier_motzkin_on_random_systems():
    rng = random.Random(11)
    for _ in range(60):
        n_vars = rng.randint(1, 5)
        n_rows = rng.randint(1, 4)
        rows = tuple(
            tuple(Fraction(rng.randint(-2, 2)) for _ in range(n_vars))
            for _ in range(n_rows)
        )
        rhs = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n_rows))
        system = LinearSystem(
            variables=tuple((i,) for i in range(n_vars)),
            labels=tuple(("row", i) for i in range(n_rows)),
            rows=rows,
            rhs=rhs,
        )
        result = solve_feasibility(system)
        expected = fourier_motzkin_feasible(list(rows), list(rhs))
        assert result.feasible == expected
        if result.feasible:
            assert verify_solution(system, result.solution).ok
        else:
            assert verify_certificate(system, result.certificate).ok


def test_certificate_normalization_is_integral(f2, five_blocks):
    _, system = system_for(f2, ["a", "b"], five_blocks)
    certificate = solve_feasibility(system).certificate
    from math import gcd
    values = [int(v) for v in certificate]
    assert all(Fraction(v) == c for v, c in zip(values, certificate))
    common = 0
    for v in values:
        common = gcd(common, abs(v))
    assert common == 1
