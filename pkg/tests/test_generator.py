import pytest

from effset.errors import GenerationFailed
from effset.generator import GeneratorConfig, generate
from effset.validate import validate_instance


def cfg(**overrides):
    base = dict(num_vars=3, num_constraints=2, num_criteria=3, seed=7)
    base.update(overrides)
    return GeneratorConfig(**base)


class TestConfig:
    def test_requires_two_criteria(self):
        with pytest.raises(ValueError):
            cfg(num_criteria=1)

    def test_requires_variables_and_constraints(self):
        with pytest.raises(ValueError):
            cfg(num_vars=0)
        with pytest.raises(ValueError):
            cfg(num_constraints=0)

    def test_rejects_empty_range(self):
        with pytest.raises(ValueError):
            cfg(b_range=(10, 5))


class TestGenerate:
    def test_deterministic_per_seed(self):
        assert generate(cfg()) == generate(cfg())

    def test_seeds_differ(self):
        assert generate(cfg(seed=0)) != generate(cfg(seed=1))

    def test_shape(self):
        inst = generate(cfg())
        assert inst.variable_count == 3
        assert len(inst.a_matrix) == 2
        assert len(inst.criteria) == 3
        assert len(inst.utilities) == 2

    def test_data_within_ranges(self):
        inst = generate(cfg(seed=11))
        assert all(1 <= v <= 30 for row in inst.a_matrix for v in row)
        assert all(50 <= v <= 100 for v in inst.b_vector)
        for obj in inst.criteria + inst.utilities:
            assert all(-10 <= v <= 10 for v in obj.numerator.coeffs)
            assert -10 <= obj.numerator.constant <= 10
            assert all(0 <= v <= 10 for v in obj.denominator.coeffs)
            assert 0 <= obj.denominator.constant <= 10

    @pytest.mark.parametrize("seed", range(5))
    def test_generated_instances_validate(self, seed):
        inst = generate(cfg(seed=seed))
        certificate = validate_instance(inst)
        assert all(m > 0 for m in certificate.denominator_minima)
        assert certificate.integer_witness is not None

    def test_positive_denominator_unreachable(self):
        with pytest.raises(GenerationFailed):
            generate(cfg(denominator_range=(0, 0), max_attempts=3))

    def test_unbounded_region_exhausts_attempts(self):
        with pytest.raises(GenerationFailed):
            generate(cfg(a_range=(0, 0), max_attempts=3))
