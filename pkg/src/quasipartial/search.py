"""Golden-section refinement of bracketed minima."""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section(
    func: Callable[[np.ndarray], np.ndarray],
    lower: np.ndarray | float,
    upper: np.ndarray | float,
    tol: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Minimize ``func`` on each bracket ``[lower, upper]`` at once.

    ``func`` must be vectorized: it receives one abscissa per bracket and
    returns one value per bracket. The iteration count is fixed up front so
    that every bracket shrinks below ``tol``. Returns ``(argmin, min)``
    arrays shaped like the brackets.
    """
    lower = np.array(lower, dtype=float)
    upper = np.array(upper, dtype=float)
    span = upper - lower
    widest = float(np.max(span)) if span.size else 0.0
    steps = 0
    if widest > tol:
        steps = math.ceil(math.log(tol / widest) / math.log(_INV_PHI))

    c = lower + _INV_PHI_SQ * span
    d = lower + _INV_PHI * span
    fc = np.asarray(func(c), dtype=float)
    fd = np.asarray(func(d), dtype=float)

    for _ in range(steps):
        left = fc < fd
        upper = np.where(left, d, upper)
        lower = np.where(left, lower, c)
        span = upper - lower
        probe = np.where(left, lower + _INV_PHI_SQ * span, lower + _INV_PHI * span)
        fprobe = np.asarray(func(probe), dtype=float)
        c, d, fc, fd = (
            np.where(left, probe, d),
            np.where(left, c, probe),
            np.where(left, fprobe, fd),
            np.where(left, fc, fprobe),
        )

    better_c = fc < fd
    return np.where(better_c, c, d), np.where(better_c, fc, fd)
