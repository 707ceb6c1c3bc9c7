"""Shared fixtures for quasipartial tests."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from quasipartial.codec import series_to_document
from quasipartial.models import ClassParams, NormalizedSeries, ScanConfig


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240615)


@pytest.fixture
def scan() -> ScanConfig:
    return ScanConfig()


@pytest.fixture
def member_scan() -> ScanConfig:
    return ScanConfig(radius=0.999)


@pytest.fixture
def make_series(rng):
    """Random unit series whose coefficients decay like scale/k**decay."""

    def make(M: int, scale: float = 0.3, decay: float = 2.0) -> NormalizedSeries:
        k = np.arange(2, M + 1, dtype=float)
        noise = rng.normal(size=M - 1) + 1j * rng.normal(size=M - 1)
        return NormalizedSeries(M, scale * noise / k**decay)

    return make


@pytest.fixture
def make_params(rng):
    """Random admissible parameters with alpha + c inside the hypothesis."""

    def make(max_alpha_plus_c: float = 4.5) -> ClassParams:
        alpha = float(rng.uniform(0.5, 3.0))
        s = float(rng.uniform(0.05, max_alpha_plus_c))
        return ClassParams(
            n=int(rng.integers(0, 4)),
            alpha=alpha,
            beta=float(rng.uniform(0.0, 0.95)),
            c=s - alpha,
        )

    return make


@pytest.fixture
def libera_quarter_params() -> ClassParams:
    return ClassParams(n=1, alpha=1.0, beta=0.25, c=1.0)


@pytest.fixture
def write_series(tmp_path):
    """Write a series document to tmp_path and return its path."""

    def write(series: NormalizedSeries, name: str = "series.json") -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(series_to_document(series)))
        return path

    return write
