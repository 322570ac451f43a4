"""Branch-and-cut search for the full solution set.

Each node carries a row system over the structural variables plus every
slack introduced so far. The node's ratio program is solved exactly; a
fractional optimum branches on the first fractional structural variable,
an integer optimum x* is membership-tested and then removed by rounds over
the nonbasic coordinates:

    H  = {j nonbasic : some criterion gradient lambda_j > 0}
         union {j : every lambda_j == 0}
    H' = {j nonbasic : other-utility gradient > 0}
         union {j : other-utility gradient == 0 and solved-utility gradient == 0}

Both "sum of the named coordinates >= 1" rounds go to a single successor
node. Because reduced rows are exact identities for affine forms, any
integer point of the node with all H coordinates zero is strictly dominated
in criteria space (and likewise for H' in utility space), so discarding a
node when either set is empty loses no solution. Every solution survives in
the successor: solutions distinct from x* keep a positive coordinate in
both sets, and coordinates are integral, so each round stays satisfied.
"""
from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import AllInteger, NonIntegerPoint, NotOptimal
from .efficiency import is_in_solution_set
from .fractional import fractional_gradient, solve_lfp
from .model import (
    ObjectiveVector,
    Point,
    ProblemInstance,
    criteria_image,
    scaled_constraints,
    utility_image,
)
from .simplex import GREATER_EQ, LESS_EQ, LinearRow, SimplexState, Status
from .validate import validate_instance

log = logging.getLogger(__name__)

BRANCH = "branch"
CUT = "cut"
FATHOM_INFEASIBLE = "fathom-infeasible"
FATHOM_EMPTY_H = "fathom-empty-H"
FATHOM_EMPTY_HPRIME = "fathom-empty-Hprime"


@dataclass(frozen=True)
class SearchNode:
    id: int
    parent: int | None
    rows: tuple[LinearRow, ...]
    depth: int


@dataclass(frozen=True)
class SolutionRecord:
    point: Point
    criteria_values: ObjectiveVector
    utility_values: ObjectiveVector


@dataclass(frozen=True)
class TraceRecord:
    node_id: int
    parent: int | None
    action: str
    point: tuple[Fraction, ...] | None
    value: Fraction | None
    h: frozenset[int] | None
    hprime: frozenset[int] | None


@dataclass
class SearchReport:
    solutions: list[SolutionRecord]
    nodes_processed: int
    fathoms: dict[str, int]
    edges: list[tuple[int, int, str]]
    trace: list[TraceRecord]
    node_rows: dict[int, tuple[LinearRow, ...]] = field(default_factory=dict)

    def solution_points(self) -> set[Point]:
        return {rec.point for rec in self.solutions}


def select_branch_variable(point: Sequence[Fraction]) -> int:
    """First structural index with a fractional value."""
    for j, v in enumerate(point):
        if v.denominator != 1:
            return j
    raise AllInteger(f"no fractional coordinate in {tuple(point)}")


def build_cut_sets(
    state: SimplexState, inst: ProblemInstance, solved: int = 0
) -> tuple[frozenset[int], frozenset[int]]:
    """Rounds at an integer optimum. `solved` names the utility the node
    maximized; the companion utility drives H'."""
    if state.status is not Status.OPTIMAL:
        raise NotOptimal("cut sets need an optimal state")
    point = state.structural_point(inst.variable_count)
    if any(v.denominator != 1 for v in point):
        raise NonIntegerPoint(f"cut sets need an integer optimum, got {point}")

    lambdas = [fractional_gradient(state, obj) for obj in inst.criteria]
    h = frozenset(
        j
        for j in state.nonbasis
        if any(lam[j] > 0 for lam in lambdas) or all(lam[j] == 0 for lam in lambdas)
    )
    gamma_solved = fractional_gradient(state, inst.utilities[solved])
    gamma_other = fractional_gradient(state, inst.utilities[1 - solved])
    hp = frozenset(
        j
        for j in state.nonbasis
        if gamma_other[j] > 0 or (gamma_other[j] == 0 and gamma_solved[j] == 0)
    )
    return h, hp


def _base_rows(inst: ProblemInstance) -> tuple[LinearRow, ...]:
    a_int, b_int = scaled_constraints(inst)
    return tuple(
        LinearRow.of({j: c for j, c in enumerate(row) if c}, LESS_EQ, rhs)
        for row, rhs in zip(a_int, b_int)
    )


def _cut_label(sets: Sequence[frozenset[int]]) -> str:
    parts = []
    for s in sets:
        terms = " + ".join(f"x{j}" for j in sorted(s))
        parts.append(f"{terms} >= 1")
    return "; ".join(parts)


def run(
    inst: ProblemInstance,
    strategy: str = "dfs",
    objective: int = 0,
    validate: bool = True,
    node_limit: int | None = None,
    keep_rows: bool = False,
) -> SearchReport:
    """Enumerate every integer point simultaneously efficient for the
    ranking criteria and for the utility pair.

    strategy: "dfs" (floor child first) or "bfs". objective: which utility
    (0 or 1) each node maximizes. Neither choice changes the returned set,
    only the walk order.
    """
    if strategy not in ("dfs", "bfs"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if objective not in (0, 1):
        raise ValueError("objective must be 0 or 1")
    if validate:
        validate_instance(inst)

    n = inst.variable_count
    base = _base_rows(inst)
    utility = inst.utilities[objective]

    root = SearchNode(0, None, (), 0)
    open_nodes: deque[SearchNode] = deque([root])
    next_id = 1
    report = SearchReport([], 0, {FATHOM_INFEASIBLE: 0, FATHOM_EMPTY_H: 0, FATHOM_EMPTY_HPRIME: 0}, [], [])
    seen_points: set[Point] = set()

    while open_nodes:
        node = open_nodes.pop() if strategy == "dfs" else open_nodes.popleft()
        report.nodes_processed += 1
        if node_limit is not None and report.nodes_processed > node_limit:
            raise RuntimeError(f"node limit {node_limit} exceeded")
        if keep_rows:
            report.node_rows[node.id] = node.rows

        result = solve_lfp(n, base + node.rows, utility)
        if result.status is Status.INFEASIBLE:
            report.fathoms[FATHOM_INFEASIBLE] += 1
            report.trace.append(
                TraceRecord(node.id, node.parent, FATHOM_INFEASIBLE, None, None, None, None)
            )
            continue

        point = result.point
        if any(v.denominator != 1 for v in point):
            r = select_branch_variable(point)
            lo = math.floor(point[r])
            floor_child = SearchNode(
                next_id, node.id, node.rows + (LinearRow.of({r: 1}, LESS_EQ, lo),), node.depth + 1
            )
            ceil_child = SearchNode(
                next_id + 1,
                node.id,
                node.rows + (LinearRow.of({r: 1}, GREATER_EQ, lo + 1),),
                node.depth + 1,
            )
            next_id += 2
            report.edges.append((node.id, floor_child.id, f"x{r} <= {lo}"))
            report.edges.append((node.id, ceil_child.id, f"x{r} >= {lo + 1}"))
            report.trace.append(
                TraceRecord(node.id, node.parent, BRANCH, point, result.value, None, None)
            )
            if strategy == "dfs":
                open_nodes.append(ceil_child)
                open_nodes.append(floor_child)
            else:
                open_nodes.append(floor_child)
                open_nodes.append(ceil_child)
            continue

        integer_point = tuple(int(v) for v in point)
        if integer_point not in seen_points:
            seen_points.add(integer_point)
            verdict = is_in_solution_set(inst, integer_point)
            if verdict.in_solution_set:
                report.solutions.append(
                    SolutionRecord(
                        integer_point,
                        criteria_image(inst, integer_point),
                        utility_image(inst, integer_point),
                    )
                )
                log.debug("node %d: %s joins the solution set", node.id, integer_point)
            elif verdict.witness is not None:
                log.debug(
                    "node %d: %s discarded, dominated by %s",
                    node.id,
                    integer_point,
                    verdict.witness,
                )

        h, hp = build_cut_sets(result.state, inst, solved=objective)
        if not h:
            report.fathoms[FATHOM_EMPTY_H] += 1
            report.trace.append(
                TraceRecord(node.id, node.parent, FATHOM_EMPTY_H, point, result.value, h, hp)
            )
            continue
        if not hp:
            report.fathoms[FATHOM_EMPTY_HPRIME] += 1
            report.trace.append(
                TraceRecord(node.id, node.parent, FATHOM_EMPTY_HPRIME, point, result.value, h, hp)
            )
            continue

        cut_rows = [LinearRow.of({j: 1 for j in h}, GREATER_EQ, 1)]
        if hp != h:
            cut_rows.append(LinearRow.of({j: 1 for j in hp}, GREATER_EQ, 1))
        successor = SearchNode(
            next_id, node.id, node.rows + tuple(cut_rows), node.depth + 1
        )
        next_id += 1
        sets = [h] if hp == h else [h, hp]
        report.edges.append((node.id, successor.id, _cut_label(sets)))
        report.trace.append(
            TraceRecord(node.id, node.parent, CUT, point, result.value, h, hp)
        )
        open_nodes.append(successor)

    return report
