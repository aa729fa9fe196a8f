"""Tests for GUE sampling, zeta determinants and the Riemann zero table."""

import math

import mpmath
import numpy as np
import pytest
from scipy import stats

from zsigil.analytic.gue import GueMatrix, sample_gue, semicircle_cdf
from zsigil.analytic.zeros import (
    RIEMANN_ZERO_GAMMAS,
    ZetaZeroTable,
    default_table,
    gamma_product,
)
from zsigil.analytic.zeta import (
    PowerLawSpectrum,
    euler_maclaurin_zeta,
    spectral_zeta_det,
    spectral_zeta_det_numeric,
)
from zsigil.exceptions import (
    AnalyticError,
    GenerationError,
    NotTraceClassError,
    NumericFailureError,
    ZeroSelectionError,
)


class TestGue:
    """Tests for GUE matrices."""

    def test_hermitian(self, rng):
        for n in (1, 2, 4, 9):
            assert sample_gue(n, rng).is_hermitian()

    def test_determinant_guard(self, rng):
        for _ in range(100):
            assert abs(sample_gue(4, rng).det) >= 1e-6

    def test_determinant_is_eigenvalue_product(self, rng):
        h = sample_gue(4, rng)
        assert h.det == pytest.approx(np.linalg.det(h.entries).real, rel=1e-9)

    def test_second_moment(self, rng):
        n = 2
        # Tr H^2 = sum |H_jk|^2 for Hermitian H
        traces = [
            float(np.sum(np.abs(sample_gue(n, rng).entries) ** 2))
            for _ in range(10_000)
        ]
        assert np.mean(traces) == pytest.approx(n * n, rel=0.05)

    def test_semicircle_law(self, rng):
        n = 64
        eigs = np.concatenate(
            [sample_gue(n, rng).eigenvalues / math.sqrt(n) for _ in range(20)]
        )
        assert stats.kstest(eigs, semicircle_cdf).statistic < 0.05

    def test_semicircle_cdf_endpoints(self):
        values = semicircle_cdf(np.array([-2.0, 0.0, 2.0]))
        assert values == pytest.approx([0.0, 0.5, 1.0])

    def test_budget_exhaustion(self, rng):
        with pytest.raises(GenerationError):
            sample_gue(2, rng, min_det=1e30, budget=3)

    def test_rejects_non_square(self):
        with pytest.raises(AnalyticError):
            GueMatrix(np.zeros((2, 3)))


class TestZetaDeterminant:
    """Tests for the closed-form and numerical zeta determinants."""

    def test_closed_form_reference_value(self):
        assert spectral_zeta_det(PowerLawSpectrum(c=1.0, beta=2.0)) == pytest.approx(
            2.0 * math.pi
        )

    def test_closed_form_scaling(self):
        a = spectral_zeta_det(PowerLawSpectrum(c=4.0, beta=2.0))
        assert a == pytest.approx(math.pi)

    @pytest.mark.parametrize("c", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("beta", [1.5, 2.0, 3.0])
    def test_numeric_agrees_with_closed_form(self, c, beta):
        spectrum = PowerLawSpectrum(c=c, beta=beta)
        closed = spectral_zeta_det(spectrum)
        numeric = spectral_zeta_det_numeric(spectrum)
        assert abs(numeric - closed) / closed < 1e-3

    @pytest.mark.parametrize("beta", [1.0, 0.5, -2.0])
    def test_not_trace_class(self, beta):
        with pytest.raises(NotTraceClassError):
            PowerLawSpectrum(c=1.0, beta=beta)

    def test_nonpositive_scale(self):
        with pytest.raises(AnalyticError):
            PowerLawSpectrum(c=0.0, beta=2.0)

    def test_numeric_needs_long_truncation(self):
        with pytest.raises(AnalyticError):
            spectral_zeta_det_numeric(PowerLawSpectrum(c=1.0, beta=2.0, truncation=100))

    def test_eigenvalues_and_trace(self):
        spectrum = PowerLawSpectrum(c=2.0, beta=2.0)
        assert spectrum.eigenvalues(3) == pytest.approx([0.5, 0.125, 0.5 / 9.0])
        assert spectrum.trace() == pytest.approx(math.pi**2 / 12.0)


class TestEulerMaclaurin:
    """Tests for the zeta continuation used by the numerical oracle."""

    def test_matches_mpmath(self):
        for z in (mpmath.mpf(2), mpmath.mpf("0.5"), mpmath.mpf(-1)):
            value, remainder = euler_maclaurin_zeta(z, 100)
            assert abs(value - mpmath.zeta(z)) < 1e-12
            assert remainder < 1e-12

    def test_zeta_at_zero(self):
        value, _ = euler_maclaurin_zeta(mpmath.mpf(0), 50)
        assert float(value) == pytest.approx(-0.5)

    def test_pole(self):
        with pytest.raises(NumericFailureError):
            euler_maclaurin_zeta(mpmath.mpf(1), 50)


class TestZeroTable:
    """Tests for the tabulated Riemann zeros."""

    def test_has_one_hundred_zeros(self):
        assert len(default_table()) == 100

    def test_first_zero(self):
        assert default_table()[1] == pytest.approx(14.134725142, abs=1e-9)

    def test_matches_computed_zeros(self):
        for k in (1, 2, 3, 10):
            assert default_table()[k] == pytest.approx(
                float(mpmath.zetazero(k).imag), abs=1e-8
            )

    def test_strictly_increasing(self):
        assert all(a < b for a, b in zip(RIEMANN_ZERO_GAMMAS, RIEMANN_ZERO_GAMMAS[1:]))

    def test_product_of_first_three(self):
        assert gamma_product(default_table(), [1, 2, 3]) == pytest.approx(
            7431.745, rel=1e-6
        )

    def test_empty_selection(self):
        with pytest.raises(ZeroSelectionError):
            gamma_product(default_table(), [])

    @pytest.mark.parametrize("index", [0, 101, -1])
    def test_out_of_range(self, index):
        with pytest.raises(ZeroSelectionError):
            default_table()[index]

    def test_table_must_increase(self):
        with pytest.raises(ZeroSelectionError):
            ZetaZeroTable(gammas=(21.0, 14.0))
