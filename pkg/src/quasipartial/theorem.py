"""Lower bound on the quasi-partial sums of the generalized Bernardi integral.

For f in T_n^alpha(beta) and alpha + c <= A, every quasi-partial sum F_m
satisfies Re D^n F_m^alpha / (alpha^n z^alpha) > 1 - 2(1-beta)(alpha+c)/(alpha+c+1).
:func:`verify_theorem` checks that claim numerically for one input and
:func:`sweep` runs it over a parameter grid with seeded class members.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .classes import (
    DEFAULT_TOL,
    MEMBER_SCAN_RADIUS,
    generate_member,
    membership_infimum,
    random_kernel,
)
from .errors import ParameterError
from .models import (
    GASPER_CONSTANT,
    BoundaryMinimum,
    ClassParams,
    KernelSpec,
    NormalizedSeries,
    ScanConfig,
    Taper,
    TightnessReport,
    VerificationReport,
)
from .operators import (
    bernardi,
    derivative,
    lift_f_to_alpha,
    p_transform,
    q_kernel,
    quasi_partial_sum,
    salagean_normalized,
)
from .series import boundary_min_re, coeff_distance, hadamard

log = logging.getLogger(__name__)

FACTORIZATION_TOL = 1e-12
DEFAULT_ORDER = 64


def theorem_bound(params: ClassParams) -> float:
    s = params.alpha_plus_c
    return 1.0 - 2.0 * (1.0 - params.beta) * s / (s + 1.0)


def nonnegativity_threshold(params: ClassParams) -> float:
    """Smallest beta for which :func:`theorem_bound` is nonnegative."""
    s = params.alpha_plus_c
    return (s - 1.0) / (2.0 * s)


def quasi_partial_quantity(
    f_over_z: NormalizedSeries, params: ClassParams, m: int
) -> NormalizedSeries:
    """Series of D^n F_m^alpha / (alpha^n z^alpha)."""
    u = lift_f_to_alpha(f_over_z, params.alpha)
    truncated = quasi_partial_sum(bernardi(u, params.alpha, params.c), m)
    return salagean_normalized(truncated, params.n, params.alpha)


def factorized_quantity(
    f_over_z: NormalizedSeries, params: ClassParams, m: int
) -> NormalizedSeries:
    """The same quantity assembled as the Hadamard product p * q."""
    u = lift_f_to_alpha(f_over_z, params.alpha)
    return hadamard(p_transform(u, params), q_kernel(m, params, u.truncation_order))


def verify_theorem(
    f_over_z: NormalizedSeries,
    params: ClassParams,
    m: int,
    scan: ScanConfig,
    tol: float = DEFAULT_TOL,
    *,
    member_scan: ScanConfig | None = None,
    check_membership: bool = True,
) -> VerificationReport:
    order = f_over_z.truncation_order
    if not 2 <= m <= order:
        raise ParameterError(f"m must lie in [2, {order}], got {m}")

    quantity = quasi_partial_quantity(f_over_z, params, m)
    residual = coeff_distance(quantity, factorized_quantity(f_over_z, params, m))
    minimum = boundary_min_re(quantity, scan)
    q_min = boundary_min_re(q_kernel(m, params, order), scan).value

    bound = theorem_bound(params)
    margin = minimum.value - bound
    hypothesis_ok = params.hypothesis_ok
    passed = margin >= -tol if hypothesis_ok else None

    diagnostics: list[str] = []
    if not hypothesis_ok:
        diagnostics.append(
            f"alpha + c = {params.alpha_plus_c:.17g} exceeds {GASPER_CONSTANT}; "
            "the bound is not claimed"
        )
    if residual > FACTORIZATION_TOL:
        diagnostics.append(f"factorization residual {residual:.3e} above {FACTORIZATION_TOL:g}")
    if check_membership:
        if member_scan is None:
            member_scan = ScanConfig(scan.grid_size, scan.refine_tol, MEMBER_SCAN_RADIUS)
        membership = membership_infimum(f_over_z, params, member_scan, tol)
        if not membership.is_member:
            diagnostics.append(
                f"input not certified in the class: infimum {membership.infimum:.6g} "
                f"< beta {params.beta:g} on |z|={member_scan.radius:g}"
            )

    log.debug("m=%d bound=%.6g min=%.12g margin=%.3e", m, bound, minimum.value, margin)
    return VerificationReport(
        params=params,
        m=m,
        M=order,
        bound=bound,
        observed_min=minimum.value,
        argmin_angle=minimum.angle,
        margin=margin,
        hypothesis_ok=hypothesis_ok,
        passed=passed,
        factorization_residual=residual,
        q_min=q_min,
        diagnostics=tuple(diagnostics),
    )


def _failed_report(params: ClassParams, m: int, order: int, message: str) -> VerificationReport:
    return VerificationReport(
        params=params,
        m=m,
        M=order,
        bound=theorem_bound(params),
        observed_min=math.nan,
        argmin_angle=math.nan,
        margin=math.nan,
        hypothesis_ok=params.hypothesis_ok,
        passed=False if params.hypothesis_ok else None,
        factorization_residual=math.nan,
        q_min=math.nan,
        diagnostics=(f"error: {message}",),
    )


def sweep(
    grid: Sequence[tuple[ClassParams, int]],
    spec_count: int,
    seed: int,
    scan: ScanConfig,
    *,
    M: int = DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
    taper: Taper = Taper.NONE,
    workers: int = 1,
) -> list[VerificationReport]:
    """Verify ``spec_count`` seeded members per grid cell.

    Cell i draws its kernels from ``default_rng([seed, i])``, so results do
    not depend on ``workers``. Reports come back in grid order.
    """
    if not grid:
        raise ParameterError("sweep grid is empty")
    if spec_count < 1:
        raise ParameterError(f"spec_count must be >= 1, got {spec_count}")

    def run_cell(index: int, params: ClassParams, m: int) -> list[VerificationReport]:
        if m == 1:
            log.warning("cell %d: m=1 is degenerate, skipped", index)
            return []
        rng = np.random.default_rng([seed, index])
        reports = []
        for draw in range(spec_count):
            spec = random_kernel(rng)
            try:
                member = generate_member(spec, params, M, taper)
                reports.append(verify_theorem(member, params, m, scan, tol))
            except Exception as exc:
                log.error("cell %d draw %d failed", index, draw, exc_info=True)
                reports.append(_failed_report(params, m, M, str(exc)))
        return reports

    with ThreadPoolExecutor(max_workers=workers) as pool:
        per_cell = pool.map(lambda cell: run_cell(cell[0], *cell[1]), enumerate(grid))
        reports = [report for cell in per_cell for report in cell]

    passed = sum(1 for r in reports if r.passed)
    log.info("sweep: %d/%d applicable reports pass", passed, sum(1 for r in reports if r.applicable))
    return reports


def tightness_probe(
    params: ClassParams,
    m: int,
    scan: ScanConfig,
    budget: int = 0,
    seed: int = 0,
    *,
    M: int = DEFAULT_ORDER,
    tol: float = DEFAULT_TOL,
    taper: Taper = Taper.NONE,
) -> TightnessReport:
    """Smallest margin over the single-point kernel and ``budget`` random kernels."""

    def margin_of(spec: KernelSpec) -> float:
        member = generate_member(spec, params, M, taper)
        return verify_theorem(member, params, m, scan, tol, check_membership=False).margin

    witness = KernelSpec.single()
    best = margin_of(witness)
    rng = np.random.default_rng(seed)
    for _ in range(budget):
        spec = random_kernel(rng)
        margin = margin_of(spec)
        if margin < best:
            best, witness = margin, spec
    return TightnessReport(min_margin=best, witness=witness, evaluated=budget + 1)


def classical_partial_sum(f_over_z: NormalizedSeries, m: int, c: float) -> NormalizedSeries:
    """F_m(z)/z for the alpha = 1 Bernardi integral: 1 + sum_{k<=m} (1+c)/(k+c) a_k z^(k-1).

    c = 1 gives the Libera partial sums, c = 0 those of int_0^z f(t)/t dt.
    """
    if not 1.0 + c > 0:
        raise ParameterError(f"1 + c must be positive, got c={c}")
    order = f_over_z.truncation_order
    if not 1 <= m <= order:
        raise ParameterError(f"m must lie in [1, {order}], got {m}")
    k = np.arange(2, order + 1, dtype=float)
    coeffs = f_over_z.coeffs * ((1.0 + c) / (k + c))
    coeffs[m - 1:] = 0
    return NormalizedSeries(order, coeffs)


def bounded_turning_min(f_over_z: NormalizedSeries, scan: ScanConfig) -> BoundaryMinimum:
    """inf Re f'(z) on the scan circle."""
    return boundary_min_re(derivative(f_over_z), scan)
