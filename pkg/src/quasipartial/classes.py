"""Membership in T_n^alpha(beta) and constructive generation of members."""

from __future__ import annotations

import logging

import numpy as np

from .models import (
    ClassParams,
    KernelSpec,
    MembershipReport,
    NormalizedSeries,
    ScanConfig,
    Taper,
)
from .operators import drop_alpha, lift_f_to_alpha, salagean_normalized, salagean_weights
from .series import boundary_min_re, require_same_order

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-6
MEMBER_SCAN_RADIUS = 0.999
MAX_KERNEL_POINTS = 8


def caratheodory_mixture(
    spec: KernelSpec, M: int, taper: Taper = Taper.NONE
) -> NormalizedSeries:
    """Truncate h(z) = sum_j w_j (1 + x_j z) / (1 - x_j z).

    The z^k coefficient is 2 sum_j w_j x_j^k. With ``Taper.FEJER`` it is
    further multiplied by (1 - k/M), which keeps Re h >= 0 on the closed disk.
    """
    powers = np.arange(1, M, dtype=float)
    points = np.asarray(spec.points, dtype=np.complex128)
    weights = np.asarray(spec.weights, dtype=float)
    coeffs = 2.0 * (weights @ points[:, None] ** powers[None, :])
    if taper is Taper.FEJER:
        coeffs = coeffs * (1.0 - powers / M)
    return NormalizedSeries(M, coeffs)


def random_kernel(rng: np.random.Generator, max_points: int = MAX_KERNEL_POINTS) -> KernelSpec:
    """Draw 1..max_points points uniform on the circle with Dirichlet(1) weights."""
    size = int(rng.integers(1, max_points + 1))
    angles = rng.uniform(0.0, 2.0 * np.pi, size)
    weights = rng.dirichlet(np.ones(size))
    weights = weights / weights.sum()
    return KernelSpec(points=tuple(np.exp(1j * angles)), weights=tuple(weights))


def generate_member(
    spec: KernelSpec,
    params: ClassParams,
    M: int,
    taper: Taper = Taper.NONE,
) -> NormalizedSeries:
    """Return f(z)/z for the member whose class quantity is beta + (1 - beta) h.

    With p = (1 + h)/2 the normalized coefficients are
    a_k(alpha) = 2(1 - beta) p_(k-1) (alpha / (alpha + k - 1))^n.
    """
    h = caratheodory_mixture(spec, M, taper)
    weights = salagean_weights(M, params.n, params.alpha)
    u = NormalizedSeries(M, (1.0 - params.beta) * h.coeffs / weights)
    return drop_alpha(u, params.alpha)


def mix_members(f1: NormalizedSeries, f2: NormalizedSeries, t: float) -> NormalizedSeries:
    """Coefficient-wise convex combination t f1 + (1 - t) f2."""
    order = require_same_order(f1, f2, "mix_members")
    return NormalizedSeries(order, t * f1.coeffs + (1.0 - t) * f2.coeffs)


def class_quantity(f_over_z: NormalizedSeries, params: ClassParams) -> NormalizedSeries:
    """Series of D^n f^alpha / (alpha^n z^alpha)."""
    u = lift_f_to_alpha(f_over_z, params.alpha)
    return salagean_normalized(u, params.n, params.alpha)


def membership_infimum(
    f_over_z: NormalizedSeries,
    params: ClassParams,
    scan: ScanConfig,
    tol: float = DEFAULT_TOL,
) -> MembershipReport:
    minimum = boundary_min_re(class_quantity(f_over_z, params), scan)
    member = minimum.value >= params.beta - tol
    log.debug(
        "membership: inf=%.12g beta=%g radius=%g -> %s",
        minimum.value, params.beta, scan.radius, member,
    )
    return MembershipReport(
        infimum=minimum.value,
        argmin_angle=minimum.angle,
        beta_threshold=params.beta,
        is_member=member,
        tol=tol,
        radius=scan.radius,
    )


def is_member(
    f_over_z: NormalizedSeries,
    params: ClassParams,
    tol: float = DEFAULT_TOL,
    scan: ScanConfig | None = None,
) -> bool:
    scan = scan or ScanConfig(radius=MEMBER_SCAN_RADIUS)
    return membership_infimum(f_over_z, params, scan, tol).is_member
