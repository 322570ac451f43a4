"""Exact two-phase primal simplex over Fractions.

Rows may mix <=, >= and == relations. Standardization appends one slack or
surplus variable per inequality row, in row order, so a row's added variable
has a predictable index (structural count + row position when every row adds
one). Added variables are first-class: later rows may reference them, which
is how branch-and-cut expresses its rounds over slack coordinates.

Bland's rule everywhere (smallest eligible index entering, smallest basic
index on ratio ties), so solves are deterministic and never cycle.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import NotOptimal
from .model import AffineForm, as_fraction

ZERO = Fraction(0)
ONE = Fraction(1)

LESS_EQ = "<="
GREATER_EQ = ">="
EQUAL = "=="
_RELATIONS = (LESS_EQ, GREATER_EQ, EQUAL)


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearRow:
    """One constraint. coeffs is sparse: ((var_index, coeff), ...) sorted."""

    coeffs: tuple[tuple[int, Fraction], ...]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")

    @classmethod
    def of(cls, coeffs, relation: str, rhs) -> "LinearRow":
        """coeffs may be a {index: value} mapping or a dense sequence."""
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        merged: dict[int, Fraction] = {}
        for j, v in items:
            v = as_fraction(v)
            if v:
                merged[j] = merged.get(j, ZERO) + v
        pairs = tuple(sorted((j, v) for j, v in merged.items() if v))
        return cls(pairs, relation, as_fraction(rhs))


@dataclass(frozen=True)
class LinearProgram:
    """Maximize objective . x + constant over the rows plus x >= 0.

    num_vars counts structural variables; the objective is over those.
    Row coefficients may also touch slack variables of earlier rows.
    """

    num_vars: int
    objective: tuple[Fraction, ...]
    objective_constant: Fraction
    rows: tuple[LinearRow, ...]

    @classmethod
    def of(cls, num_vars, objective, rows, constant=0) -> "LinearProgram":
        dense = [ZERO] * num_vars
        if isinstance(objective, Mapping):
            for j, v in objective.items():
                dense[j] = as_fraction(v)
        else:
            for j, v in enumerate(objective):
                dense[j] = as_fraction(v)
        return cls(num_vars, tuple(dense), as_fraction(constant), tuple(rows))


@dataclass(frozen=True)
class SimplexState:
    """Final tableau snapshot. matrix holds B^-1 A over all real variables,
    one row per constraint; basic_values is B^-1 b."""

    status: Status
    num_vars: int
    basis: tuple[int, ...]
    nonbasis: tuple[int, ...]
    basic_values: tuple[Fraction, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def full_point(self) -> tuple[Fraction, ...]:
        point = [ZERO] * self.num_vars
        for var, val in zip(self.basis, self.basic_values):
            point[var] = val
        return tuple(point)

    def structural_point(self, n: int) -> tuple[Fraction, ...]:
        return self.full_point()[:n]


class Tableau:
    """Mutable dense tableau. Internal to the solvers; snapshot with
    `state()` before handing results out."""

    __slots__ = ("ncols", "rows", "rhs", "basis")

    def __init__(self, ncols, rows, rhs, basis):
        self.ncols = ncols
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, row_idx: int, col: int) -> None:
        rows, rhs = self.rows, self.rhs
        prow = rows[row_idx]
        piv = prow[col]
        if piv != 1:
            inv = ONE / piv
            prow = [v * inv if v else v for v in prow]
            rows[row_idx] = prow
            rhs[row_idx] *= inv
        pivot_rhs = rhs[row_idx]
        for i, row in enumerate(rows):
            if i == row_idx:
                continue
            factor = row[col]
            if factor:
                rows[i] = [a - factor * b if b else a for a, b in zip(row, prow)]
                if pivot_rhs:
                    rhs[i] -= factor * pivot_rhs
        self.basis[row_idx] = col

    def reduced(self, cost: Sequence[Fraction]) -> list[Fraction]:
        """cost - cost_B . B^-1 A over every column (zero at basic ones)."""
        red = list(cost)
        for i, var in enumerate(self.basis):
            cb = cost[var]
            if cb:
                row = self.rows[i]
                red = [a - cb * b if b else a for a, b in zip(red, row)]
        return red

    def value_of(self, cost: Sequence[Fraction], constant: Fraction = ZERO) -> Fraction:
        total = constant
        for var, val in zip(self.basis, self.rhs):
            c = cost[var]
            if c and val:
                total += c * val
        return total

    def point(self) -> list[Fraction]:
        point = [ZERO] * self.ncols
        for var, val in zip(self.basis, self.rhs):
            point[var] = val
        return point

    def state(self, status: Status) -> SimplexState:
        basic = set(self.basis)
        return SimplexState(
            status=status,
            num_vars=self.ncols,
            basis=tuple(self.basis),
            nonbasis=tuple(j for j in range(self.ncols) if j not in basic),
            basic_values=tuple(self.rhs),
            matrix=tuple(tuple(row) for row in self.rows),
        )


def _infeasible_state(ncols: int) -> SimplexState:
    return SimplexState(Status.INFEASIBLE, ncols, (), (), (), ())


def standardize(program: LinearProgram) -> tuple[list[list[Fraction]], list[Fraction], int]:
    """Dense equality system with one slack/surplus per inequality row.
    Returns (matrix, rhs, total_columns)."""
    num_added = sum(1 for r in program.rows if r.relation != EQUAL)
    total = program.num_vars + num_added
    matrix: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    added_so_far = 0
    for i, row in enumerate(program.rows):
        allowed = program.num_vars + added_so_far
        dense = [ZERO] * total
        for j, coeff in row.coeffs:
            if j >= allowed:
                raise ValueError(
                    f"row {i} references variable x{j} which does not exist yet"
                )
            dense[j] = coeff
        if row.relation != EQUAL:
            dense[program.num_vars + added_so_far] = (
                ONE if row.relation == LESS_EQ else -ONE
            )
            added_so_far += 1
        matrix.append(dense)
        rhs.append(row.rhs)
    return matrix, rhs, total


def _bland(tab: Tableau, cost: Sequence[Fraction], enter_limit: int | None = None) -> Status:
    """Maximize cost over the tableau. Entering column restricted to
    indices below enter_limit (used to keep artificials out)."""
    limit = tab.ncols if enter_limit is None else enter_limit
    rows, rhs, basis = tab.rows, tab.rhs, tab.basis
    while True:
        red = tab.reduced(cost)
        enter = -1
        for j in range(limit):
            if red[j] > 0:
                enter = j
                break
        if enter < 0:
            return Status.OPTIMAL
        leave = -1
        best_ratio = None
        best_var = -1
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                t = rhs[i] / a
                if (
                    best_ratio is None
                    or t < best_ratio
                    or (t == best_ratio and basis[i] < best_var)
                ):
                    best_ratio, best_var, leave = t, basis[i], i
        if leave < 0:
            return Status.UNBOUNDED
        tab.pivot(leave, enter)


def feasible_tableau(program: LinearProgram) -> Tableau | None:
    """Phase one: returns a primal-feasible tableau over the real columns,
    or None when the system is infeasible. Redundant rows are dropped."""
    matrix, rhs, ncols = standardize(program)
    m = len(matrix)
    for i in range(m):
        if rhs[i] < 0:
            matrix[i] = [-v for v in matrix[i]]
            rhs[i] = -rhs[i]

    basis = [-1] * m
    for j in range(ncols):
        hit = -1
        ok = True
        for i in range(m):
            v = matrix[i][j]
            if v:
                if hit >= 0 or v != 1:
                    ok = False
                    break
                hit = i
        if ok and hit >= 0 and basis[hit] < 0:
            basis[hit] = j

    art_cols = [i for i in range(m) if basis[i] < 0]
    if not art_cols:
        return Tableau(ncols, matrix, rhs, basis)

    total = ncols + len(art_cols)
    for i in range(m):
        matrix[i] = matrix[i] + [ZERO] * len(art_cols)
    for order, i in enumerate(art_cols):
        matrix[i][ncols + order] = ONE
        basis[i] = ncols + order

    tab = Tableau(total, matrix, rhs, basis)
    cost = [ZERO] * ncols + [-ONE] * len(art_cols)
    status = _bland(tab, cost, enter_limit=ncols)
    assert status is Status.OPTIMAL  # -sum(artificials) <= 0 is bounded
    if tab.value_of(cost) != 0:
        return None

    drop: list[int] = []
    for i, var in enumerate(tab.basis):
        if var >= ncols:
            # Artificial stuck at zero: swap a real column in, else the row
            # is redundant.
            row = tab.rows[i]
            enter = next((j for j in range(ncols) if row[j]), -1)
            if enter >= 0:
                tab.pivot(i, enter)
            else:
                drop.append(i)
    for i in reversed(drop):
        del tab.rows[i]
        del tab.rhs[i]
        del tab.basis[i]
    tab.rows = [row[:ncols] for row in tab.rows]
    tab.ncols = ncols
    return tab


def solve_lp(program: LinearProgram) -> SimplexState:
    """Two-phase exact simplex. Deterministic: equal inputs give equal
    final bases."""
    tab = feasible_tableau(program)
    if tab is None:
        ncols = program.num_vars + sum(
            1 for r in program.rows if r.relation != EQUAL
        )
        return _infeasible_state(ncols)
    cost = list(program.objective) + [ZERO] * (tab.ncols - program.num_vars)
    status = _bland(tab, cost)
    return tab.state(status)


def reduced_row(state: SimplexState, form: AffineForm) -> tuple[dict[int, Fraction], Fraction]:
    """Reduced coefficients of an affine form at an optimal state.

    Returns ({nonbasic index: reduced coefficient}, value of the form at
    the state's point). The form is over structural variables; added
    variables carry zero cost.
    """
    if state.status is not Status.OPTIMAL:
        raise NotOptimal(f"reduced rows need an optimal state, got {state.status}")
    cost = list(form.coeffs) + [ZERO] * (state.num_vars - len(form.coeffs))
    red = list(cost)
    value = form.constant
    for i, var in enumerate(state.basis):
        cb = cost[var]
        if cb:
            row = state.matrix[i]
            red = [a - cb * b if b else a for a, b in zip(red, row)]
            value += cb * state.basic_values[i]
    return {j: red[j] for j in state.nonbasis}, value
