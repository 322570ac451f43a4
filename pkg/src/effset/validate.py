"""Checks that an instance satisfies the assumptions the search relies on:
a bounded feasible region, strictly positive denominators over it, and at
least one feasible integer point."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AssumptionViolated, UnboundedRelaxation
from .milp import MilpProblem, solve_milp
from .model import ProblemInstance
from .simplex import LESS_EQ, LinearProgram, LinearRow, Status, solve_lp

_ZERO = Fraction(0)


@dataclass(frozen=True)
class InstanceCertificate:
    """Evidence gathered while validating.

    variable_maxima: continuous max of each variable over the relaxation.
    denominator_minima: continuous min of each denominator, in instance
    order (criteria first, then utilities).
    integer_witness: one feasible integer point.
    """

    variable_maxima: tuple[Fraction, ...]
    denominator_minima: tuple[Fraction, ...]
    integer_witness: tuple[int, ...]


def _relaxation_rows(inst: ProblemInstance) -> list[LinearRow]:
    return [
        LinearRow.of({j: c for j, c in enumerate(row) if c}, LESS_EQ, rhs)
        for row, rhs in zip(inst.a_matrix, inst.b_vector)
    ]


def validate_instance(inst: ProblemInstance) -> InstanceCertificate:
    n = inst.variable_count
    rows = _relaxation_rows(inst)

    maxima = []
    for j in range(n):
        state = solve_lp(LinearProgram.of(n, {j: 1}, rows))
        if state.status is Status.INFEASIBLE:
            raise AssumptionViolated(
                "the continuous relaxation is empty", reason="empty-domain"
            )
        if state.status is Status.UNBOUNDED:
            raise AssumptionViolated(
                f"variable x{j} is unbounded over the relaxation", reason="unbounded"
            )
        maxima.append(state.full_point()[j])

    minima = []
    objectives = list(inst.criteria) + list(inst.utilities)
    for idx, obj in enumerate(objectives):
        den = obj.denominator
        cost = {j: -c for j, c in enumerate(den.coeffs) if c}
        state = solve_lp(LinearProgram.of(n, cost, rows))
        if state.status is not Status.OPTIMAL:
            raise AssumptionViolated("denominator minimization did not solve")
        point = state.structural_point(n)
        value = den.at(point)
        if value <= 0:
            raise AssumptionViolated(
                f"denominator {idx} reaches {value} at {point}; it must stay positive"
            )
        minima.append(value)

    program = LinearProgram.of(n, {}, rows)
    milp = MilpProblem(program, (True,) * n)
    try:
        result = solve_milp(milp)
    except UnboundedRelaxation:
        raise AssumptionViolated(
            "the continuous relaxation is unbounded", reason="unbounded"
        ) from None
    if result.status is not Status.OPTIMAL or result.point is None:
        raise AssumptionViolated("no feasible integer point exists", reason="empty-domain")
    witness = tuple(int(v) for v in result.point)

    return InstanceCertificate(tuple(maxima), tuple(minima), witness)
