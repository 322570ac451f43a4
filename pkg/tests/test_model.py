from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from effset.errors import LengthMismatch, ZeroDenominator
from effset.model import (
    AffineForm,
    ProblemInstance,
    dominates,
    evaluate,
    instance,
    is_feasible,
    pareto_filter,
    ratio,
    scaled_constraints,
)

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=12
)


class TestAffineForm:
    def test_evaluates_with_constant(self):
        form = AffineForm.of([2, -3], 5)
        assert form.at((1, 1)) == 4

    def test_coerces_mixed_inputs(self):
        form = AffineForm.of([1, "1/2"], Fraction(1, 3))
        assert form.at((0, 2)) == Fraction(4, 3)

    def test_rejects_wrong_dimension(self):
        with pytest.raises(LengthMismatch):
            AffineForm.of([1, 2]).at((1,))

    @given(
        st.lists(rationals, min_size=1, max_size=5),
        rationals,
        st.data(),
    )
    def test_matches_direct_dot_product(self, coeffs, constant, data):
        point = data.draw(
            st.lists(rationals, min_size=len(coeffs), max_size=len(coeffs))
        )
        form = AffineForm.of(coeffs, constant)
        expected = sum(c * v for c, v in zip(coeffs, point)) + constant
        assert form.at(point) == expected


class TestObjectives:
    def test_evaluate(self):
        obj = ratio([1, 0], -4, [0, -1], 2)
        assert evaluate(obj, (4, 1)) == 0
        assert evaluate(obj, (0, 0)) == -2

    def test_zero_denominator_raises(self):
        obj = ratio([1], 0, [1], -1)
        with pytest.raises(ZeroDenominator):
            evaluate(obj, (1,))

    def test_mismatched_spaces_rejected(self):
        with pytest.raises(LengthMismatch):
            ratio([1, 2], 0, [1], 1)


class TestProblemInstance:
    def test_demo_shape(self, demo):
        assert demo.variable_count == 2
        assert demo.constraint_count == 2
        assert len(demo.criteria) == 3
        assert len(demo.utilities) == 2

    def test_needs_two_utilities(self):
        obj = ratio([1], 0, [0], 1)
        with pytest.raises(LengthMismatch):
            instance([[1]], [4], [obj, obj], [obj])

    def test_needs_two_criteria(self):
        obj = ratio([1], 0, [0], 1)
        with pytest.raises(LengthMismatch):
            instance([[1]], [4], [obj], [obj, obj])

    def test_ragged_matrix_rejected(self):
        obj = ratio([1, 1], 0, [0, 0], 1)
        with pytest.raises(LengthMismatch):
            instance([[1, 2], [1]], [4, 4], [obj, obj], [obj, obj])

    def test_feasibility(self, demo):
        assert is_feasible(demo, (4, 1))
        assert not is_feasible(demo, (0, 1))
        assert not is_feasible(demo, (-1, 0))
        with pytest.raises(LengthMismatch):
            is_feasible(demo, (1, 2, 3))


class TestDominance:
    def test_strict_on_one_coordinate(self):
        assert dominates((1, 2), (1, 1))
        assert not dominates((1, 1), (1, 1))
        assert not dominates((2, 0), (1, 1))

    @given(
        st.lists(rationals, min_size=1, max_size=4),
        st.lists(rationals, min_size=1, max_size=4),
    )
    def test_antisymmetric(self, a, b):
        if len(a) != len(b):
            return
        assert not (dominates(a, b) and dominates(b, a))

    def test_pareto_keeps_duplicates(self):
        entries = [
            ((0, 0), (Fraction(1), Fraction(1))),
            ((1, 1), (Fraction(1), Fraction(1))),
            ((2, 2), (Fraction(0), Fraction(0))),
        ]
        assert pareto_filter(entries) == [(0, 0), (1, 1)]

    @given(
        st.lists(
            st.tuples(rationals, rationals),
            min_size=1,
            max_size=20,
        )
    )
    def test_pareto_filter_is_exactly_the_nondominated_set(self, vectors):
        entries = [((i,), vec) for i, vec in enumerate(vectors)]
        kept = set(pareto_filter(entries))
        for i, vec in enumerate(vectors):
            dominated = any(dominates(other, vec) for other in vectors)
            assert ((i,) in kept) == (not dominated)


class TestScaledConstraints:
    def test_integer_data_unchanged(self, demo):
        a, b = scaled_constraints(demo)
        assert a == [[-1, 4], [2, -1]]
        assert b == [0, 8]

    def test_fractional_rows_scaled_to_integers(self):
        obj = ratio([1, 1], 0, [0, 0], 1)
        inst = instance(
            [[Fraction(1, 2), Fraction(1, 3)], [1, 1]],
            [Fraction(5, 6), 7],
            [obj, obj],
            [obj, obj],
        )
        a, b = scaled_constraints(inst)
        assert a[0] == [3, 2] and b[0] == 5
        assert a[1] == [1, 1] and b[1] == 7

    @given(
        st.lists(rationals, min_size=2, max_size=2),
        rationals,
    )
    def test_same_halfspace(self, row, rhs):
        obj = ratio([1, 1], 0, [0, 0], 1)
        inst = instance([row, [1, 1]], [rhs, 9], [obj, obj], [obj, obj])
        a, b = scaled_constraints(inst)
        for point in [(0, 0), (1, 2), (3, 1), (7, 5)]:
            original = sum(c * v for c, v in zip(inst.a_matrix[0], point)) <= rhs
            scaled = sum(c * v for c, v in zip(a[0], point)) <= b[0]
            assert original == scaled
