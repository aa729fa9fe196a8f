"""Tests for the torus model, points and Fourier sections."""

import numpy as np
import pytest
from scipy import stats

from zsigil.exceptions import DimensionMismatchError, GenerationError, GeometryError
from zsigil.geometry.manifold import (
    FourierSection,
    TangentVector,
    TorusModel,
    evaluate_section,
    sample_point,
    sample_section,
)


class _ZeroGenerator:
    """Stand-in generator whose uniform draws are all zero."""

    def random(self, size):
        return np.zeros(size)


class TestTorusModel:
    """Tests for TorusModel construction and coordinate reduction."""

    def test_unit_torus(self):
        model = TorusModel.unit(6)
        assert model.r == 6
        assert model.complex_dimension == 3
        assert model.moduli == (1.0,) * 6

    def test_odd_dimension_rejected(self):
        with pytest.raises(GeometryError):
            TorusModel(r=5, moduli=(1.0,) * 5)

    def test_moduli_count_must_match(self):
        with pytest.raises(DimensionMismatchError):
            TorusModel(r=2, moduli=(1.0,))

    def test_moduli_outside_unit_interval_rejected(self):
        with pytest.raises(GeometryError):
            TorusModel(r=2, moduli=(1.0, 1.5))

    def test_point_reduces_coordinates(self):
        model = TorusModel(r=2, moduli=(1.0, 0.5))
        p = model.point([1.25, -0.125])
        assert p.coords == (0.25, 0.375)

    def test_point_wrong_shape(self, model):
        with pytest.raises(DimensionMismatchError):
            model.point([0.1, 0.2])

    def test_point_must_be_finite(self, model2):
        with pytest.raises(GeometryError):
            model2.point([np.nan, 0.0])


class TestSamplePoint:
    """Tests for uniform base point sampling."""

    def test_zero_generator_gives_origin(self, model):
        p = sample_point(model, _ZeroGenerator())
        assert p.coords == (0.0,) * 6

    def test_deterministic(self, model):
        a = sample_point(model, np.random.default_rng(7))
        b = sample_point(model, np.random.default_rng(7))
        assert a == b

    def test_inside_fundamental_domain(self, rng):
        model = TorusModel(r=4, moduli=(1.0, 0.5, 0.25, 0.75))
        for _ in range(200):
            x = sample_point(model, rng).array
            assert np.all(x >= 0.0)
            assert np.all(x < model.moduli_array)

    def test_uniform_on_each_coordinate(self, rng):
        model = TorusModel(r=2, moduli=(1.0, 0.5))
        coords = np.array([sample_point(model, rng).array for _ in range(10_000)])
        for j, modulus in enumerate(model.moduli):
            result = stats.kstest(coords[:, j], "uniform", args=(0.0, modulus))
            assert result.statistic < 0.03


class TestEvaluateSection:
    """Tests for section evaluation."""

    def _constant(self, model, values):
        r = model.r
        amps = np.zeros((r, 1, 2))
        amps[:, 0, 0] = values
        return FourierSection(
            moduli=model.moduli,
            frequencies=np.zeros((r, 1, r), dtype=np.int64),
            amplitudes=amps,
            cutoff=0,
        )

    def test_zero_section_is_zero(self, model, rng):
        sec = FourierSection(
            moduli=model.moduli,
            frequencies=rng.integers(-2, 3, size=(6, 4, 6)),
            amplitudes=np.zeros((6, 4, 2)),
            cutoff=2,
        )
        v = evaluate_section(sec, sample_point(model, rng))
        assert np.array_equal(v.components, np.zeros(6))

    def test_constant_section(self, model2):
        sec = self._constant(model2, [3.0, -1.5])
        v = evaluate_section(sec, model2.point([0.3, 0.7]))
        assert np.array_equal(v.components, [3.0, -1.5])

    def test_single_cosine(self, model2):
        sec = FourierSection(
            moduli=model2.moduli,
            frequencies=[[[1, 0]], [[0, 1]]],
            amplitudes=[[[1.0, 0.0]], [[0.0, 1.0]]],
            cutoff=1,
        )
        v = evaluate_section(sec, model2.point([0.0, 0.25]))
        assert v.components == pytest.approx([1.0, 1.0])

    def test_result_is_attached_to_point(self, model2):
        p = model2.point([0.3, 0.7])
        v = evaluate_section(self._constant(model2, [1.0, 1.0]), p)
        assert v.base == p

    def test_periodic_in_each_coordinate(self, model, rng):
        sec = sample_section(model, 2, rng, base=model.point([0.5] * 6))
        coords = np.array([0.25, 0.5, 0.125, 0.75, 0.0, 0.375])
        p = model.point(coords)
        q = model.point(coords + np.array([1.0, -2.0, 3.0, 1.0, -1.0, 2.0]))
        assert p == q
        assert np.array_equal(
            evaluate_section(sec, p).components, evaluate_section(sec, q).components
        )

    def test_dimension_mismatch(self, model, model2):
        sec = self._constant(model2, [1.0, 1.0])
        with pytest.raises(DimensionMismatchError):
            evaluate_section(sec, model.point([0.0] * 6))

    def test_frequency_above_cutoff_rejected(self, model2):
        with pytest.raises(GeometryError):
            FourierSection(
                moduli=model2.moduli,
                frequencies=[[[3, 0]], [[0, 0]]],
                amplitudes=np.zeros((2, 1, 2)),
                cutoff=2,
            )


class TestSampleSection:
    """Tests for sparse Fourier section sampling."""

    def test_cutoff_zero_is_constant(self, model2, rng):
        sec = sample_section(model2, 0, rng, base=model2.point([0.1, 0.2]))
        assert not sec.frequencies.any()
        a = evaluate_section(sec, model2.point([0.1, 0.2]))
        b = evaluate_section(sec, model2.point([0.6, 0.9]))
        assert np.allclose(a.components, b.components)

    def test_small_grid_is_fully_enumerated(self, model2, rng):
        sec = sample_section(model2, 2, rng, base=model2.point([0.0, 0.0]))
        assert sec.terms_per_component == 25

    def test_sparse_for_default_cutoff(self, model, rng):
        sec = sample_section(model, 2, rng, base=model.point([0.0] * 6))
        assert sec.terms_per_component == 32
        assert int(np.abs(sec.frequencies).max()) <= 2
        for c in range(6):
            assert len({tuple(k) for k in sec.frequencies[c]}) == 32

    def test_conditioning_guard_holds_at_base(self, model, rng):
        for _ in range(20):
            p = sample_point(model, rng)
            sec = sample_section(model, 2, rng, base=p)
            magnitudes = np.abs(evaluate_section(sec, p).components)
            assert np.all((magnitudes >= 0.1) & (magnitudes <= 10.0))

    def test_deterministic(self, model):
        p = model.point([0.2] * 6)
        a = sample_section(model, 2, np.random.default_rng(3), base=p)
        b = sample_section(model, 2, np.random.default_rng(3), base=p)
        assert np.array_equal(a.frequencies, b.frequencies)
        assert np.array_equal(a.amplitudes, b.amplitudes)

    def test_budget_exhaustion(self, model2, rng):
        with pytest.raises(GenerationError):
            sample_section(
                model2, 1, rng, base=model2.point([0.0, 0.0]),
                value_range=(1e6, 1e7), budget=3,
            )

    def test_negative_cutoff_rejected(self, model2, rng):
        with pytest.raises(GeometryError):
            sample_section(model2, -1, rng, base=model2.point([0.0, 0.0]))


class TestTangentVector:
    """Tests for tangent vectors."""

    def test_components_are_read_only(self, model2):
        v = TangentVector(model2.point([0.0, 0.0]), [1.0, 2.0])
        with pytest.raises(ValueError):
            v.components[0] = 5.0

    def test_scaled_stays_in_fiber(self, model2):
        v = TangentVector(model2.point([0.5, 0.5]), [1.0, 2.0])
        w = v.scaled(-2.0)
        assert w.same_fiber(v)
        assert np.array_equal(w.components, [-2.0, -4.0])

    def test_wrong_component_count(self, model2):
        with pytest.raises(DimensionMismatchError):
            TangentVector(model2.point([0.0, 0.0]), [1.0, 2.0, 3.0])
