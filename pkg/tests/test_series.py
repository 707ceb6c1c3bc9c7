"""Tests for quasipartial.series: arithmetic, evaluation and boundary minima."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasipartial.errors import SeriesShapeError
from quasipartial.models import NormalizedSeries, ScanConfig, ZeroConstantSeries
from quasipartial.series import (
    boundary_min_re,
    coeff_distance,
    evaluate,
    hadamard,
    series_exp,
    series_log,
    series_mul,
    series_new,
    series_pow,
)

ORDER = 8

unit_coeffs = st.lists(
    st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False),
    min_size=ORDER - 1,
    max_size=ORDER - 1,
)


def dense_min(u: NormalizedSeries, points: int = 2**20) -> float:
    """Minimum of Re u on the unit circle over ``points`` equispaced angles."""
    return float(np.min((np.fft.ifft(u.full, n=points) * points).real))


class TestSeriesNew:
    def test_empty_is_one(self):
        assert series_new([], 1) == NormalizedSeries.one(1)

    def test_one_plus_z(self):
        assert series_new([1 + 0j], 2).full.tolist() == [1, 1]

    def test_complex_coefficients(self):
        assert series_new([0.5, 0.25j], 3).full.tolist() == [1, 0.5, 0.25j]

    def test_length_mismatch(self):
        with pytest.raises(SeriesShapeError):
            series_new([1, 2, 3], 3)


class TestSeriesMul:
    def test_difference_of_squares(self):
        assert series_mul(series_new([1, 0], 3), series_new([-1, 0], 3)) == series_new([0, -1], 3)

    def test_square(self):
        assert series_mul(series_new([1, 0], 3), series_new([1, 0], 3)) == series_new([2, 1], 3)

    def test_identity(self, make_series):
        u = make_series(16)
        assert series_mul(u, NormalizedSeries.one(16)) == u

    def test_order_mismatch(self):
        with pytest.raises(SeriesShapeError, match="truncation orders differ"):
            series_mul(NormalizedSeries.one(3), NormalizedSeries.one(4))

    @given(unit_coeffs, unit_coeffs)
    def test_commutative(self, a, b):
        u, v = series_new(a, ORDER), series_new(b, ORDER)
        assert coeff_distance(series_mul(u, v), series_mul(v, u)) < 1e-12

    @given(unit_coeffs, unit_coeffs, unit_coeffs)
    def test_associative(self, a, b, c):
        u, v, w = series_new(a, ORDER), series_new(b, ORDER), series_new(c, ORDER)
        left = series_mul(series_mul(u, v), w)
        right = series_mul(u, series_mul(v, w))
        assert coeff_distance(left, right) < 1e-12

    def test_evaluation_is_multiplicative_below_truncation(self, make_series):
        u = NormalizedSeries(12, np.concatenate((make_series(5).coeffs, np.zeros(7))))
        v = NormalizedSeries(12, np.concatenate((make_series(7).coeffs, np.zeros(5))))
        z = np.exp(1j * np.linspace(0, 2 * math.pi, 17)) * 0.9
        np.testing.assert_allclose(evaluate(series_mul(u, v), z), evaluate(u, z) * evaluate(v, z), atol=1e-10)


class TestLogExp:
    def test_log_of_one(self):
        assert series_log(NormalizedSeries.one(5)) == ZeroConstantSeries(5, [0, 0, 0, 0])

    def test_mercator(self):
        w = series_log(series_new([1, 0, 0], 4))
        np.testing.assert_allclose(w.coeffs, [1, -1 / 2, 1 / 3], atol=1e-15)

    def test_exp_of_zero(self):
        assert series_exp(ZeroConstantSeries(4, [0, 0, 0])) == NormalizedSeries.one(4)

    def test_exp_of_z(self):
        u = series_exp(ZeroConstantSeries(3, [1, 0]))
        np.testing.assert_allclose(u.coeffs, [1, 0.5], atol=1e-15)

    @pytest.mark.parametrize("order", [32, 64])
    def test_exp_log_round_trip(self, make_series, order):
        for _ in range(20):
            u = make_series(order)
            assert coeff_distance(series_exp(series_log(u)), u) < 1e-12

    def test_log_exp_round_trip(self, rng):
        k = np.arange(1, 32, dtype=float)
        for _ in range(20):
            w = ZeroConstantSeries(32, 0.3 * (rng.normal(size=31) + 1j * rng.normal(size=31)) / k**2)
            back = series_log(series_exp(w))
            assert float(np.max(np.abs(back.coeffs - w.coeffs))) < 1e-12


class TestSeriesPow:
    def test_binomial_square(self):
        np.testing.assert_allclose(series_pow(series_new([1, 0], 3), 2.0).coeffs, [2, 1], atol=1e-15)

    def test_identity_exponent_returns_input(self, make_series):
        u = make_series(10)
        assert series_pow(u, 1) is u

    @pytest.mark.parametrize("alpha", [0.5, 2.0, 3.7])
    @pytest.mark.parametrize("order", [32, 64])
    def test_round_trip(self, make_series, alpha, order):
        for _ in range(10):
            u = make_series(order)
            assert coeff_distance(series_pow(series_pow(u, alpha), 1 / alpha), u) < 1e-12


class TestHadamard:
    def test_all_ones_is_identity(self, make_series):
        u = make_series(16)
        assert hadamard(u, NormalizedSeries(16, np.ones(15))) == u

    def test_termwise(self):
        assert hadamard(series_new([1], 2), series_new([-1], 2)) == series_new([-1], 2)

    @given(unit_coeffs, unit_coeffs)
    def test_commutative(self, a, b):
        u, v = series_new(a, ORDER), series_new(b, ORDER)
        assert coeff_distance(hadamard(u, v), hadamard(v, u)) < 1e-15

    def test_order_mismatch(self):
        with pytest.raises(SeriesShapeError):
            hadamard(NormalizedSeries.one(2), NormalizedSeries.one(3))


class TestEvaluate:
    def test_at_origin(self, make_series):
        assert evaluate(make_series(8), 0) == 1

    def test_root(self):
        assert evaluate(series_new([1], 2), -1) == 0

    def test_at_i(self):
        assert evaluate(series_new([0.5, 0.25], 3), 1j) == pytest.approx(0.75 + 0.5j, abs=1e-15)

    def test_vectorized(self):
        values = evaluate(series_new([1], 2), np.array([0, 1, -1]))
        np.testing.assert_allclose(values, [1, 2, 0])


class TestBoundaryMinRe:
    def test_constant(self, scan):
        found = boundary_min_re(NormalizedSeries.one(1), scan)
        assert found.value == 1.0

    def test_one_plus_z(self, scan):
        found = boundary_min_re(series_new([1], 2), scan)
        assert found.value == pytest.approx(0.0, abs=1e-12)
        assert found.angle == pytest.approx(math.pi, abs=1e-6)

    def test_quadratic_against_closed_form(self, scan):
        u = series_new([0.5, 0.25], 3)
        found = boundary_min_re(u, scan)
        assert found.value == pytest.approx(0.625, abs=1e-8)
        assert found.value == pytest.approx(dense_min(u), abs=1e-8)
        assert math.cos(found.angle) == pytest.approx(-0.5, abs=1e-6)

    def test_smaller_radius(self):
        found = boundary_min_re(series_new([1], 2), ScanConfig(radius=0.5))
        assert found.value == pytest.approx(0.5, abs=1e-12)

    @settings(deadline=None)
    @given(st.integers(min_value=0, max_value=2**32 - 1))
    def test_never_above_grid_minimum(self, seed):
        gen = np.random.default_rng(seed)
        u = NormalizedSeries(12, (gen.normal(size=11) + 1j * gen.normal(size=11)) / np.arange(2, 13) ** 2)
        scan = ScanConfig(grid_size=64)
        theta = 2 * math.pi * np.arange(64) / 64
        assert boundary_min_re(u, scan).value <= float(np.min(evaluate(u, np.exp(1j * theta)).real))

    def test_matches_dense_scan(self, make_series, rng, scan):
        for _ in range(100):
            u = make_series(int(rng.integers(2, 33)))
            assert boundary_min_re(u, scan).value == pytest.approx(dense_min(u), abs=1e-8)
