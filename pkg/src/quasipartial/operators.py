"""Coefficient transforms: Salagean weights, Bernardi integral, quasi-partial sums.

Series passed around here are normalized: ``u = f(z)^alpha / z^alpha`` with
``u.coeffs[j - 1]`` the coefficient of z^j, which the literature indexes as
a_k(alpha) with k = j + 1. Every transform except the alpha-lift is diagonal,
so truncation order is preserved.
"""

from __future__ import annotations

import numpy as np

from .errors import ParameterError
from .models import ClassParams, NormalizedSeries
from .series import series_pow


def _powers(order: int) -> np.ndarray:
    """Exponents j = 1 .. M-1 carried by ``coeffs``."""
    return np.arange(1, order, dtype=float)


def _require_positive_alpha(alpha: float) -> None:
    if not alpha > 0:
        raise ParameterError(f"alpha must be positive, got {alpha}")


def lift_f_to_alpha(f_over_z: NormalizedSeries, alpha: float) -> NormalizedSeries:
    """f(z)/z -> f(z)^alpha / z^alpha (principal branch)."""
    _require_positive_alpha(alpha)
    return series_pow(f_over_z, alpha)


def drop_alpha(f_alpha_over_zalpha: NormalizedSeries, alpha: float) -> NormalizedSeries:
    """Inverse of :func:`lift_f_to_alpha`."""
    _require_positive_alpha(alpha)
    return series_pow(f_alpha_over_zalpha, 1.0 / alpha)


def salagean_weights(order: int, n: int, alpha: float) -> np.ndarray:
    return ((alpha + _powers(order)) / alpha) ** n


def salagean_normalized(u: NormalizedSeries, n: int, alpha: float) -> NormalizedSeries:
    """Series of D^n f^alpha / (alpha^n z^alpha) given u = f^alpha / z^alpha."""
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    _require_positive_alpha(alpha)
    if n == 0:
        return u
    return NormalizedSeries(u.truncation_order, u.coeffs * salagean_weights(u.truncation_order, n, alpha))


def bernardi_weights(order: int, alpha: float, c: float) -> np.ndarray:
    s = alpha + c
    return s / (s + _powers(order))


def bernardi(u: NormalizedSeries, alpha: float, c: float) -> NormalizedSeries:
    """Series of F(z)^alpha / z^alpha for the generalized Bernardi integral F."""
    if not alpha + c > 0:
        raise ParameterError(f"alpha + c must be positive, got alpha={alpha}, c={c}")
    return NormalizedSeries(u.truncation_order, u.coeffs * bernardi_weights(u.truncation_order, alpha, c))


def quasi_partial_sum(u: NormalizedSeries, m: int) -> NormalizedSeries:
    """Keep b_2 .. b_m and zero every later coefficient."""
    if not 1 <= m <= u.truncation_order:
        raise ParameterError(f"m must lie in [1, {u.truncation_order}], got {m}")
    coeffs = u.coeffs.copy()
    coeffs[m - 1:] = 0
    return NormalizedSeries(u.truncation_order, coeffs)


def p_transform(u: NormalizedSeries, params: ClassParams) -> NormalizedSeries:
    """p(z) = 1 + (1 / (2(1 - beta))) sum ((alpha+k-1)/alpha)^n a_k(alpha) z^(k-1)."""
    weights = salagean_weights(u.truncation_order, params.n, params.alpha)
    return NormalizedSeries(u.truncation_order, u.coeffs * weights / (2.0 * (1.0 - params.beta)))


def q_kernel(m: int, params: ClassParams, M: int) -> NormalizedSeries:
    """q(z) = 1 + 2(1 - beta) sum_{k=2}^{m} (alpha+c)/(alpha+c+k-1) z^(k-1), zero past m."""
    if not 1 <= m <= M:
        raise ParameterError(f"m must lie in [1, {M}], got {m}")
    coeffs = 2.0 * (1.0 - params.beta) * bernardi_weights(M, params.alpha, params.c)
    coeffs[m - 1:] = 0.0
    return NormalizedSeries(M, coeffs)


def derivative(f_over_z: NormalizedSeries) -> NormalizedSeries:
    """f'(z) = 1 + sum k a_k z^(k-1), given f(z)/z."""
    order = f_over_z.truncation_order
    return NormalizedSeries(order, f_over_z.coeffs * (_powers(order) + 1.0))
