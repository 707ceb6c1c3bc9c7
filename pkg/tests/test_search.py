"""Tests for quasipartial.search: golden-section refinement."""

from __future__ import annotations

import math

import numpy as np
import pytest

from quasipartial.search import golden_section


class TestGoldenSection:
    def test_scalar_parabola(self):
        x, fx = golden_section(lambda t: (t - 0.3) ** 2, 0.0, 1.0, 1e-10)
        assert float(x) == pytest.approx(0.3, abs=1e-7)
        assert float(fx) == pytest.approx(0.0, abs=1e-15)

    def test_many_brackets_at_once(self):
        centers = np.array([0.1, 0.5, 2.0])
        x, _ = golden_section(lambda t: np.cos(t - centers + math.pi), centers - 0.4, centers + 0.4, 1e-10)
        np.testing.assert_allclose(x, centers, atol=1e-6)

    def test_minimum_at_edge(self):
        x, fx = golden_section(lambda t: t, 1.0, 2.0, 1e-9)
        assert float(x) == pytest.approx(1.0, abs=1e-8)
        assert float(fx) == pytest.approx(1.0, abs=1e-8)

    def test_degenerate_bracket(self):
        x, fx = golden_section(lambda t: t**2, 0.5, 0.5, 1e-10)
        assert float(x) == 0.5
        assert float(fx) == 0.25
