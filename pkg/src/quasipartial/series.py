"""Truncated complex power-series arithmetic.

Every series here has a fixed truncation order M: it keeps the powers
z^0 .. z^(M-1). Binary operations insist on equal orders instead of silently
truncating to the shorter operand.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import SeriesShapeError
from .models import BoundaryMinimum, NormalizedSeries, ScanConfig, ZeroConstantSeries
from .search import golden_section

log = logging.getLogger(__name__)

_TWO_PI = 2.0 * math.pi


def series_new(coeffs: list[complex] | np.ndarray, M: int) -> NormalizedSeries:
    """Build 1 + coeffs[0] z + ... from the listed b_2 .. b_M."""
    return NormalizedSeries(M, np.asarray(coeffs, dtype=np.complex128))


def require_same_order(u, v, operation: str) -> int:
    if u.truncation_order != v.truncation_order:
        raise SeriesShapeError(
            f"{operation}: truncation orders differ "
            f"({u.truncation_order} vs {v.truncation_order})"
        )
    return u.truncation_order


def series_mul(u: NormalizedSeries, v: NormalizedSeries) -> NormalizedSeries:
    """Cauchy product truncated at the common order."""
    order = require_same_order(u, v, "series_mul")
    return NormalizedSeries.from_full(np.convolve(u.full, v.full)[:order])


def series_log(u: NormalizedSeries) -> ZeroConstantSeries:
    """Formal logarithm of a unit series via w' u = u'."""
    a = u.full
    order = u.truncation_order
    w = np.zeros(order, dtype=np.complex128)
    for j in range(1, order):
        i = np.arange(1, j)
        acc = np.dot(i * w[1:j], a[j - 1:0:-1])
        w[j] = a[j] - acc / j
    return ZeroConstantSeries(order, w[1:])


def series_exp(w: ZeroConstantSeries) -> NormalizedSeries:
    """Formal exponential via u' = w' u."""
    order = w.truncation_order
    wf = w.full
    u = np.zeros(order, dtype=np.complex128)
    u[0] = 1.0
    for j in range(1, order):
        i = np.arange(1, j + 1)
        u[j] = np.dot(i * wf[1:j + 1], u[j - 1::-1]) / j
    return NormalizedSeries.from_full(u)


def series_pow(u: NormalizedSeries, alpha: float) -> NormalizedSeries:
    """Principal power u^alpha computed as exp(alpha * log u)."""
    if alpha == 1:
        return u
    w = series_log(u)
    return series_exp(ZeroConstantSeries(w.truncation_order, alpha * w.coeffs))


def hadamard(u: NormalizedSeries, v: NormalizedSeries) -> NormalizedSeries:
    """Termwise product, constant terms included (1 * 1 = 1)."""
    require_same_order(u, v, "hadamard")
    return NormalizedSeries.from_full(u.full * v.full)


def coeff_distance(u: NormalizedSeries, v: NormalizedSeries) -> float:
    """Largest coefficient deviation between two series of equal order."""
    require_same_order(u, v, "coeff_distance")
    if u.coeffs.size == 0:
        return 0.0
    return float(np.max(np.abs(u.coeffs - v.coeffs)))


def evaluate(u: NormalizedSeries | ZeroConstantSeries, z: complex | np.ndarray):
    """Horner evaluation of the truncated polynomial at ``z``."""
    value = npoly.polyval(z, u.full)
    if np.ndim(value) == 0:
        return complex(value)
    return value


def boundary_min_re(u: NormalizedSeries, scan: ScanConfig) -> BoundaryMinimum:
    """Minimum of Re u(r e^{i theta}) over theta, with r = scan.radius.

    A uniform grid locates the best cell; golden-section search on that cell
    and its two neighbours refines it to ``scan.refine_tol``.
    """
    full = u.full
    radius = scan.radius
    step = _TWO_PI / scan.grid_size
    theta = step * np.arange(scan.grid_size)
    values = npoly.polyval(radius * np.exp(1j * theta), full).real
    j = int(np.argmin(values))
    best_value, best_angle = float(values[j]), float(theta[j])

    if u.truncation_order > 1:
        def re_on_circle(t: np.ndarray) -> np.ndarray:
            return npoly.polyval(radius * np.exp(1j * t), full).real

        angle, value = golden_section(
            re_on_circle, best_angle - step, best_angle + step, scan.refine_tol
        )
        if float(value) < best_value:
            best_value, best_angle = float(value), float(angle) % _TWO_PI

    log.debug("min Re on |z|=%g: %.17g at theta=%.12g", radius, best_value, best_angle)
    return BoundaryMinimum(best_value, best_angle)
