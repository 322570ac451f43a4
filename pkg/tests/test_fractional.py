from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from effset.errors import AssumptionViolated, UnboundedDomain
from effset.fractional import fractional_gradient, solve_lfp, solve_lfp_cc
from effset.model import evaluate, ratio
from effset.simplex import GREATER_EQ, LESS_EQ, LinearRow, Status

from conftest import DEMO_A, DEMO_B


def demo_rows():
    return tuple(
        LinearRow.of({j: c for j, c in enumerate(row) if c}, LESS_EQ, rhs)
        for row, rhs in zip(DEMO_A, DEMO_B)
    )


class TestDemoRootNode:
    """The two-constraint example region has a unique ratio maximum for the
    first utility at the fractional vertex (32/7, 8/7), where both slacks
    are nonbasic. All gradient values below were computed by hand from the
    final tableau."""

    def test_optimum(self, demo):
        result = solve_lfp(2, demo_rows(), demo.utilities[0])
        assert result.status is Status.OPTIMAL
        assert result.point == (Fraction(32, 7), Fraction(8, 7))
        assert result.value == Fraction(-45, 79)

    def test_utility_gradients(self, demo):
        state = solve_lfp(2, demo_rows(), demo.utilities[0]).state
        assert set(state.nonbasis) == {2, 3}
        gamma1 = fractional_gradient(state, demo.utilities[0])
        gamma2 = fractional_gradient(state, demo.utilities[1])
        assert gamma1 == {2: Fraction(-37, 7), 3: Fraction(-24, 7)}
        assert gamma2 == {2: Fraction(-80, 7), 3: Fraction(5)}

    def test_criterion_gradients(self, demo):
        state = solve_lfp(2, demo_rows(), demo.utilities[0]).state
        lambdas = [fractional_gradient(state, c) for c in demo.criteria]
        assert lambdas[0] == {2: Fraction(-2, 7), 3: Fraction(-4, 7)}
        assert lambdas[1] == {2: Fraction(1, 7), 3: Fraction(8, 7)}
        assert lambdas[2] == {2: Fraction(-1, 7), 3: Fraction(3, 7)}

    def test_floor_subproblem(self, demo):
        rows = demo_rows() + (LinearRow.of({0: 1}, LESS_EQ, 4),)
        result = solve_lfp(2, rows, demo.utilities[0])
        assert result.point == (4, 1)
        assert result.value == Fraction(-3, 5)

    def test_round_over_slack_coordinate(self, demo):
        # After x0 <= 4 (slack index 4), requiring x4 >= 1 removes the
        # face x0 = 4; the maximum moves to the fractional vertex (3, 3/4).
        rows = demo_rows() + (
            LinearRow.of({0: 1}, LESS_EQ, 4),
            LinearRow.of({4: 1}, GREATER_EQ, 1),
        )
        result = solve_lfp(2, rows, demo.utilities[0])
        assert result.point == (3, Fraction(3, 4))
        assert result.value == Fraction(-21, 31)
        # Branching that vertex down on x1 reaches the integer point (3, 0).
        floor_rows = rows + (LinearRow.of({1: 1}, LESS_EQ, 0),)
        floored = solve_lfp(2, floor_rows, demo.utilities[0])
        assert floored.point == (3, 0)
        assert floored.value == Fraction(-6, 7)


class TestBehaviors:
    def test_infeasible_system(self, demo):
        rows = demo_rows() + (
            LinearRow.of({0: 1}, GREATER_EQ, 9),
        )
        result = solve_lfp(2, rows, demo.utilities[0])
        assert result.status is Status.INFEASIBLE
        assert result.point is None and result.value is None

    def test_unbounded_domain_raises(self):
        rows = (LinearRow.of({1: 1}, LESS_EQ, 1),)
        objective = ratio([1, 0], 0, [0, 0], 1)
        with pytest.raises(UnboundedDomain):
            solve_lfp(2, rows, objective)
        with pytest.raises(UnboundedDomain):
            solve_lfp_cc(2, rows, objective)

    def test_sign_changing_denominator_raises(self):
        rows = (LinearRow.of({0: 1}, LESS_EQ, 2),)
        objective = ratio([1], 0, [-1], 1)
        with pytest.raises(AssumptionViolated):
            solve_lfp(1, rows, objective)

    def test_gradient_certificate_at_optimum(self, demo):
        for utility in demo.utilities:
            result = solve_lfp(2, demo_rows(), utility)
            gamma = fractional_gradient(result.state, utility)
            assert all(v <= 0 for v in gamma.values())


coeff = st.integers(-6, 6)


@settings(max_examples=80, deadline=None)
@given(
    a=st.lists(st.tuples(st.integers(1, 5), st.integers(1, 5)), min_size=1, max_size=3),
    b=st.lists(st.integers(3, 15), min_size=3, max_size=3),
    lower=st.integers(0, 6),
    p=st.tuples(coeff, coeff, coeff),
    q=st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(1, 8)),
)
def test_pivot_and_transform_solvers_agree(a, b, lower, p, q):
    """The adjacent-vertex method and the variable-change method share no
    code; on bounded regions with positive denominators they must return
    identical exact statuses and values."""
    rows = [
        LinearRow.of({0: r[0], 1: r[1]}, LESS_EQ, rhs)
        for r, rhs in zip(a, b)
    ] + [LinearRow.of({0: 1, 1: 1}, GREATER_EQ, lower)]
    objective = ratio([p[0], p[1]], p[2], [q[0], q[1]], q[2])
    direct = solve_lfp(2, rows, objective)
    status, value = solve_lfp_cc(2, rows, objective)
    assert direct.status is status
    if status is Status.OPTIMAL:
        assert direct.value == value
        assert evaluate(objective, direct.point) == value
