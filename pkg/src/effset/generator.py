"""Random instance generation.

Draws integer data with rejection fixes so every produced instance meets
the solver's assumptions: technology coefficients are strictly positive
(bounding the region), right-hand sides are comfortably positive (keeping
the origin feasible), and each denominator constant is redrawn from the
positive part of its range until the denominator stays positive over the
whole relaxation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import AssumptionViolated, GenerationFailed
from .model import AffineForm, FractionalObjective, ProblemInstance, instance
from .simplex import LESS_EQ, LinearProgram, LinearRow, Status, solve_lp
from .validate import validate_instance


@dataclass(frozen=True)
class GeneratorConfig:
    num_vars: int
    num_constraints: int
    num_criteria: int
    seed: int = 0
    b_range: tuple[int, int] = (50, 100)
    a_range: tuple[int, int] = (1, 30)
    numerator_range: tuple[int, int] = (-10, 10)
    denominator_range: tuple[int, int] = (0, 10)
    max_attempts: int = 100

    def __post_init__(self) -> None:
        if self.num_vars < 1 or self.num_constraints < 1:
            raise ValueError("need at least one variable and one constraint")
        if self.num_criteria < 2:
            raise ValueError("need at least two ranking criteria")
        for name in ("b_range", "a_range", "numerator_range", "denominator_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} is empty: ({lo}, {hi})")


def _denominator_minimum(a, b, den: AffineForm, n: int):
    rows = [
        LinearRow.of({j: c for j, c in enumerate(row) if c}, LESS_EQ, rhs)
        for row, rhs in zip(a, b)
    ]
    cost = {j: -c for j, c in enumerate(den.coeffs) if c}
    state = solve_lp(LinearProgram.of(n, cost, rows))
    if state.status is not Status.OPTIMAL:
        return None
    return den.at(state.structural_point(n))


def _draw_objective(
    rng: random.Random, cfg: GeneratorConfig, a, b
) -> FractionalObjective:
    num_lo, num_hi = cfg.numerator_range
    den_lo, den_hi = cfg.denominator_range
    numerator = AffineForm.of(
        [rng.randint(num_lo, num_hi) for _ in range(cfg.num_vars)],
        rng.randint(num_lo, num_hi),
    )
    den_coeffs = [rng.randint(den_lo, den_hi) for _ in range(cfg.num_vars)]
    constant = rng.randint(den_lo, den_hi)
    positive_lo = max(den_lo, 1)
    for _ in range(cfg.max_attempts):
        denominator = AffineForm.of(den_coeffs, constant)
        minimum = _denominator_minimum(a, b, denominator, cfg.num_vars)
        if minimum is not None and minimum > 0:
            return FractionalObjective(numerator, denominator)
        if positive_lo > den_hi:
            break
        constant = rng.randint(positive_lo, den_hi)
    raise GenerationFailed("could not draw a denominator positive over the region")


def generate(cfg: GeneratorConfig) -> ProblemInstance:
    """Deterministic for a given config: the same seed always yields the
    same instance."""
    rng = random.Random(cfg.seed)
    last_error: Exception | None = None
    for _ in range(cfg.max_attempts):
        a = [
            [rng.randint(*cfg.a_range) for _ in range(cfg.num_vars)]
            for _ in range(cfg.num_constraints)
        ]
        b = [rng.randint(*cfg.b_range) for _ in range(cfg.num_constraints)]
        try:
            criteria = tuple(
                _draw_objective(rng, cfg, a, b) for _ in range(cfg.num_criteria)
            )
            utilities = tuple(_draw_objective(rng, cfg, a, b) for _ in range(2))
            inst = instance(a, b, criteria, utilities)
            validate_instance(inst)
            return inst
        except (GenerationFailed, AssumptionViolated) as exc:
            last_error = exc
    raise GenerationFailed(f"no valid instance after {cfg.max_attempts} attempts: {last_error}")
