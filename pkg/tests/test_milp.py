import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from effset.errors import UnboundedRelaxation
from effset.milp import MilpProblem, MilpResult, solve_milp
from effset.simplex import GREATER_EQ, LESS_EQ, LinearProgram, LinearRow, Status


def milp(num_vars, objective, rows, mask=None):
    program = LinearProgram.of(
        num_vars,
        objective,
        [LinearRow.of(c, rel, rhs) for c, rel, rhs in rows],
    )
    return MilpProblem(program, tuple(mask or [True] * num_vars))


def test_knapsack():
    # max 5a + 4b + 3c  s.t.  2a + 3b + c <= 5, binaries.
    problem = milp(
        3,
        {0: 5, 1: 4, 2: 3},
        [
            ({0: 2, 1: 3, 2: 1}, LESS_EQ, 5),
            ({0: 1}, LESS_EQ, 1),
            ({1: 1}, LESS_EQ, 1),
            ({2: 1}, LESS_EQ, 1),
        ],
    )
    result = solve_milp(problem)
    assert result.status is Status.OPTIMAL
    assert result.point == (1, 1, 0)
    assert result.value == 9
    assert not result.early_stop


def test_mixed_integer_variable_stays_fractional():
    # x0 integral, x1 continuous: max x0 + 2 x1 with x0 + 2 x1 <= 3,
    # x0 <= 3/2. Optimum x0 = 1, x1 = 1.
    problem = milp(
        2,
        {0: 1, 1: 2},
        [({0: 1, 1: 2}, LESS_EQ, 3), ({0: 2}, LESS_EQ, 3)],
        mask=[True, False],
    )
    result = solve_milp(problem)
    assert result.point == (1, 1)
    assert result.value == 3


def test_infeasible():
    problem = milp(1, {0: 1}, [({0: 1}, GREATER_EQ, 2), ({0: 1}, LESS_EQ, 1)])
    result = solve_milp(problem)
    assert result == MilpResult(Status.INFEASIBLE, None, None)


def test_integer_gap_infeasible():
    # 1/3 <= x <= 2/3 has rational points but no integral one.
    problem = milp(
        1,
        {0: 1},
        [({0: 3}, GREATER_EQ, 1), ({0: 3}, LESS_EQ, 2)],
    )
    assert solve_milp(problem).status is Status.INFEASIBLE


def test_unbounded_relaxation_raises():
    problem = milp(2, {0: 1}, [({1: 1}, LESS_EQ, 1)])
    with pytest.raises(UnboundedRelaxation):
        solve_milp(problem)


def test_node_limit():
    problem = milp(
        2,
        {0: 2, 1: 2},
        [({0: 2, 1: 2}, LESS_EQ, 21)],
    )
    with pytest.raises(RuntimeError):
        solve_milp(problem, node_limit=1)


def test_cutoff_early_stop():
    problem = milp(
        2,
        {0: 1, 1: 1},
        [({0: 1}, LESS_EQ, 4), ({1: 1}, LESS_EQ, 4)],
    )
    eager = solve_milp(problem, cutoff=Fraction(0))
    assert eager.early_stop
    assert eager.value > 0
    exact = solve_milp(problem)
    assert exact.value == 8 and not exact.early_stop
    # A cutoff at or above the optimum can never trigger the early exit.
    capped = solve_milp(problem, cutoff=Fraction(8))
    assert not capped.early_stop and capped.value == 8


def test_incumbent_seeds_pruning():
    problem = milp(
        2,
        {0: 1, 1: 1},
        [({0: 1}, LESS_EQ, 2), ({1: 1}, LESS_EQ, 2)],
    )
    # An incumbent matching the true optimum means no strictly better point
    # exists, so the seed itself is returned.
    seeded = solve_milp(problem, incumbent=((Fraction(2), Fraction(2)), Fraction(4)))
    assert seeded.point == (2, 2)
    assert seeded.value == 4
    # A weaker incumbent is improved upon.
    improved = solve_milp(problem, incumbent=((Fraction(0), Fraction(0)), Fraction(0)))
    assert improved.value == 4


def _lattice_max(rows, objective, bound):
    best = None
    for p in itertools.product(range(bound + 1), repeat=2):
        if all(
            c.get(0, 0) * p[0] + c.get(1, 0) * p[1] <= rhs for c, _, rhs in rows
        ):
            v = objective[0] * p[0] + objective[1] * p[1]
            if best is None or v > best:
                best = v
    return best


@settings(max_examples=60, deadline=None)
@given(
    rows=st.lists(
        st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-5, 25)),
        min_size=0,
        max_size=3,
    ),
    objective=st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    bound=st.integers(1, 7),
)
def test_matches_lattice_enumeration(rows, objective, bound):
    all_rows = [({0: 1}, LESS_EQ, bound), ({1: 1}, LESS_EQ, bound)]
    all_rows += [({0: a, 1: b}, LESS_EQ, r) for a, b, r in rows]
    problem = milp(2, {0: objective[0], 1: objective[1]}, all_rows)
    result = solve_milp(problem)
    expected = _lattice_max(
        [(dict(c), rel, rhs) for c, rel, rhs in all_rows], objective, bound
    )
    if expected is None:
        assert result.status is Status.INFEASIBLE
    else:
        assert result.status is Status.OPTIMAL
        assert result.value == expected
