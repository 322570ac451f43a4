from fractions import Fraction

import pytest

from effset.model import instance, ratio

# Two-variable instance used throughout: three ranking criteria and two
# utilities over {x >= 0 integer : -x1 + 4*x2 <= 0, 2*x1 - x2 <= 8}.
# Small enough to verify every intermediate quantity by hand.
DEMO_A = [[-1, 4], [2, -1]]
DEMO_B = [0, 8]

DEMO_FEASIBLE = {(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (4, 1)}
DEMO_CRITERIA_EFFICIENT = {(0, 0), (1, 0), (2, 0), (3, 0), (4, 1)}
DEMO_UTILITY_EFFICIENT = {(0, 0), (1, 0), (4, 1)}
DEMO_SOLUTION_SET = {(0, 0), (1, 0), (4, 1)}


def build_demo():
    criteria = [
        ratio([1, 0], -4, [0, -1], 2),
        ratio([-1, 0], 4, [0, 1], 1),
        ratio([-1, 1], 0, [0, 0], 1),
    ]
    utilities = [
        ratio([-1, 1], -3, [2, 1], 1),
        ratio([-4, 3], 1, [2, 1], 2),
    ]
    return instance(DEMO_A, DEMO_B, criteria, utilities)


@pytest.fixture
def demo():
    return build_demo()


def frac(text) -> Fraction:
    return Fraction(text)
