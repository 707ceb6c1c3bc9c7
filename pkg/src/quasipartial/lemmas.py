"""Cosine-sum inequality, real-part lower bound, and the convolution hull check."""

from __future__ import annotations

import logging
import math

import numpy as np

from .errors import BracketError, ParameterError
from .models import (
    GASPER_CONSTANT,
    CosineSumMinimum,
    CosineSumQuery,
    GasperEstimate,
    HullReport,
    HullStatus,
    Lemma22Check,
    NormalizedSeries,
    ScanConfig,
)
from .search import golden_section
from .series import boundary_min_re, evaluate, hadamard

log = logging.getLogger(__name__)

# A minimum counts as negative only below -SIGN_TOL; l = 1 sums touch 0 exactly.
SIGN_TOL = 1e-12
DEFAULT_BRACKET = (4.0, 5.0)
HULL_TOL = 1e-6
HULL_RADII = 64
HULL_ANGLES = 256
HULL_MAX_RADIUS = 0.999
_DISTANCE_CHUNK = 512


def cosine_sum(theta: float | np.ndarray, query: CosineSumQuery):
    """1/(1+gamma) + sum_{k=1}^{l} cos(k theta)/(k+gamma)."""
    k = np.arange(1, query.l + 1, dtype=float)
    terms = np.cos(np.multiply.outer(theta, k)) / (k + query.gamma)
    value = 1.0 / (1.0 + query.gamma) + terms.sum(axis=-1)
    return float(value) if np.ndim(value) == 0 else value


def cosine_sum_min(gamma: float, l_max: int, scan: ScanConfig) -> CosineSumMinimum:
    """Minimum of the cosine sum over theta in [0, pi] and 1 <= l <= l_max.

    Each l gets its own grid minimum refined by golden section; ties are
    broken by smaller theta, then smaller l.
    """
    CosineSumQuery(gamma, l_max)
    k = np.arange(1, l_max + 1, dtype=float)
    inv = 1.0 / (k + gamma)
    head = 1.0 / (1.0 + gamma)

    theta = np.linspace(0.0, math.pi, scan.grid_size)
    step = theta[1] - theta[0]
    # partial[i, l-1] = sum for l terms at theta[i]
    partial = head + np.cumsum(np.cos(np.multiply.outer(theta, k)) * inv, axis=1)
    rows = np.argmin(partial, axis=0)
    grid_values = partial[rows, np.arange(l_max)]
    grid_theta = theta[rows]

    mask = k[None, :] <= k[:, None]  # mask[l-1, k-1]: term k is part of sum l

    def sums_at(t: np.ndarray) -> np.ndarray:
        return head + np.sum(np.cos(np.multiply.outer(t, k)) * inv * mask, axis=1)

    refined_theta, refined_values = golden_section(
        sums_at,
        np.clip(grid_theta - step, 0.0, math.pi),
        np.clip(grid_theta + step, 0.0, math.pi),
        scan.refine_tol,
    )
    better = refined_values < grid_values
    values = np.where(better, refined_values, grid_values)
    thetas = np.where(better, refined_theta, grid_theta)

    best = int(np.lexsort((k, thetas, values))[0])
    return CosineSumMinimum(float(values[best]), float(thetas[best]), best + 1)


def estimate_best_constant(
    l_max: int,
    tol: float,
    scan: ScanConfig,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
) -> GasperEstimate:
    """Bisect on gamma for the sign change of :func:`cosine_sum_min`."""
    if not tol > 0:
        raise ParameterError(f"tol must be positive, got {tol}")
    lo, hi = bracket
    at_lo = cosine_sum_min(lo, l_max, scan)
    at_hi = cosine_sum_min(hi, l_max, scan)
    if at_lo.value < -SIGN_TOL or at_hi.value >= -SIGN_TOL:
        raise BracketError(
            f"no sign change on [{lo}, {hi}] with l_max={l_max}: "
            f"min at {lo} is {at_lo.value:.3e}, min at {hi} is {at_hi.value:.3e}"
        )

    critical = at_hi
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        at_mid = cosine_sum_min(mid, l_max, scan)
        if at_mid.value < -SIGN_TOL:
            hi, critical = mid, at_mid
        else:
            lo = mid
        iterations += 1
        log.debug("bisection %d: [%.10f, %.10f] min(mid)=%.3e", iterations, lo, hi, at_mid.value)

    estimate = GasperEstimate(
        constant=0.5 * (lo + hi),
        bracket=(lo, hi),
        critical_l=critical.l,
        critical_theta=critical.theta,
        l_max=l_max,
        tol=tol,
        iterations=iterations,
    )
    log.info("best constant ~ %.10f (l=%d, theta=%.6f)", estimate.constant, critical.l, critical.theta)
    return estimate


def lemma22_bound(gamma: float) -> float:
    return -1.0 / (1.0 + gamma)


def lemma22_min(gamma: float, l: int, scan: ScanConfig) -> float:
    """min over |z| = radius of Re sum_{k=1}^{l} z^k / (k + gamma)."""
    CosineSumQuery(gamma, l)
    k = np.arange(1, l + 1, dtype=float)
    shifted = NormalizedSeries(l + 1, 1.0 / (k + gamma))
    return boundary_min_re(shifted, scan).value - 1.0


def check_lemma22(gamma: float, l: int, scan: ScanConfig, tol: float = 1e-8) -> Lemma22Check:
    """Compare :func:`lemma22_min` with -1/(1+gamma); no verdict outside gamma <= A."""
    minimum = lemma22_min(gamma, l, scan)
    bound = lemma22_bound(gamma)
    hypothesis_ok = gamma <= GASPER_CONSTANT
    holds = (minimum >= bound - tol) if hypothesis_ok else None
    return Lemma22Check(gamma, l, minimum, bound, hypothesis_ok, holds)


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> np.ndarray:
    """Monotone-chain hull, counterclockwise, collinear points dropped.

    Collinear inputs give their two extreme points; a single distinct point
    gives itself.
    """
    pts = sorted({(float(x), float(y)) for x, y in np.asarray(points, dtype=float).reshape(-1, 2)})
    if not pts:
        raise ParameterError("convex_hull needs at least one point")
    if len(pts) <= 2:
        return np.array(pts)

    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return np.array(lower[:-1] + upper[:-1])


def _segment_distance(points: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    edge = b - a
    t = np.clip(((points - a) @ edge) / (edge @ edge), 0.0, 1.0)
    return np.linalg.norm(points - (a + t[:, None] * edge), axis=1)


def hull_signed_distance(points, hull: np.ndarray) -> np.ndarray:
    """Signed distance of each point from a counterclockwise hull.

    Against a polygon this is the largest offset along an edge's outward
    normal (nonpositive inside). Degenerate hulls use Euclidean distance.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(hull) == 1:
        return np.linalg.norm(pts - hull[0], axis=1)
    if len(hull) == 2:
        return _segment_distance(pts, hull[0], hull[1])

    edges = np.roll(hull, -1, axis=0) - hull
    normals = np.column_stack((edges[:, 1], -edges[:, 0]))
    normals /= np.linalg.norm(normals, axis=1)[:, None]
    offsets = np.einsum("ij,ij->i", normals, hull)
    out = np.empty(len(pts))
    for start in range(0, len(pts), _DISTANCE_CHUNK):
        chunk = pts[start:start + _DISTANCE_CHUNK]
        out[start:start + _DISTANCE_CHUNK] = np.max(chunk @ normals.T - offsets, axis=1)
    return out


def _planar(values: np.ndarray) -> np.ndarray:
    return np.column_stack((values.real, values.imag))


def hull_membership_check(
    p: NormalizedSeries,
    q: NormalizedSeries,
    scan: ScanConfig,
    tol: float = HULL_TOL,
    radii: int = HULL_RADII,
    angles: int = HULL_ANGLES,
    max_radius: float = HULL_MAX_RADIUS,
) -> HullReport:
    """Test whether p*q stays in the convex hull of q's image of the disk.

    The hull is built from q on |z| = scan.radius; p*q is sampled on a polar
    grid of ``radii`` x ``angles`` points up to ``max_radius``. The check is
    vacuous unless min Re p >= 1/2 - tol on the scan circle.
    """
    p_min = boundary_min_re(p, scan).value
    precondition_ok = p_min >= 0.5 - tol

    boundary = scan.radius * np.exp(2j * math.pi * np.arange(scan.grid_size) / scan.grid_size)
    hull = convex_hull(_planar(evaluate(q, boundary)))

    rho = np.linspace(0.0, max_radius, radii)
    phi = 2.0 * math.pi * np.arange(angles) / angles
    disk = np.multiply.outer(rho, np.exp(1j * phi)).ravel()
    samples = evaluate(hadamard(p, q), disk)
    distance = float(np.max(hull_signed_distance(_planar(samples), hull)))

    if not precondition_ok:
        status = HullStatus.VACUOUS
    elif distance <= tol:
        status = HullStatus.PASS
    else:
        status = HullStatus.FAIL
    log.debug("hull check: %s (distance=%.3e, min Re p=%.6f)", status, distance, p_min)
    return HullReport(
        status=status,
        max_outside_distance=distance,
        p_min_re=p_min,
        precondition_ok=precondition_ok,
        hull_vertices=len(hull),
        samples=disk.size,
        tol=tol,
    )
