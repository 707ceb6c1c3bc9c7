"""Value types shared by the series, operator, lemma and theorem modules."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import NamedTuple

import numpy as np

from .errors import ParameterError, SeriesShapeError

# Best constant of the nonnegative cosine-sum inequality, as published.
GASPER_CONSTANT = 4.5678018

_UNIT_TOL = 1e-12


def _frozen_coeffs(values: object) -> np.ndarray:
    arr = np.array(values, dtype=np.complex128).reshape(-1)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class _TruncatedSeries:
    truncation_order: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        order = self.truncation_order
        if isinstance(order, bool) or int(order) != order:
            raise SeriesShapeError(f"truncation order must be an integer, got {order!r}")
        if order < 1:
            raise SeriesShapeError(f"truncation order must be >= 1, got {order}")
        coeffs = _frozen_coeffs(self.coeffs)
        if coeffs.size != order - 1:
            raise SeriesShapeError(
                f"expected {order - 1} coefficients for M={order}, got {coeffs.size}"
            )
        object.__setattr__(self, "truncation_order", int(order))
        object.__setattr__(self, "coeffs", coeffs)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.truncation_order == other.truncation_order and bool(
            np.array_equal(self.coeffs, other.coeffs)
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def M(self) -> int:
        return self.truncation_order


@dataclass(frozen=True, eq=False)
class NormalizedSeries(_TruncatedSeries):
    """Truncated series 1 + b_2 z + ... + b_M z^(M-1).

    ``coeffs[i]`` multiplies z^(i+1), i.e. it holds b_(i+2). The constant
    term is always 1 and is never stored.
    """

    @property
    def full(self) -> np.ndarray:
        """All M coefficients, constant term first."""
        return np.concatenate(([1.0 + 0.0j], self.coeffs))

    @classmethod
    def one(cls, order: int) -> NormalizedSeries:
        return cls(order, np.zeros(order - 1, dtype=np.complex128))

    @classmethod
    def from_full(cls, full: np.ndarray) -> NormalizedSeries:
        """Build from a full coefficient vector whose constant term is 1."""
        return cls(len(full), np.asarray(full)[1:])


@dataclass(frozen=True, eq=False)
class ZeroConstantSeries(_TruncatedSeries):
    """Truncated series w_1 z + ... + w_(M-1) z^(M-1) with zero constant term."""

    @property
    def full(self) -> np.ndarray:
        return np.concatenate(([0.0j], self.coeffs))


class BoundaryMinimum(NamedTuple):
    value: float
    angle: float


@dataclass(frozen=True)
class ScanConfig:
    """Controls for minimizing Re u over a circle."""

    grid_size: int = 4096
    refine_tol: float = 1e-10
    radius: float = 1.0

    def __post_init__(self) -> None:
        if self.grid_size < 16:
            raise ParameterError(f"grid_size must be >= 16, got {self.grid_size}")
        if not 0 < self.refine_tol < 1:
            raise ParameterError(f"refine_tol must lie in (0, 1), got {self.refine_tol}")
        if not 0 < self.radius <= 1:
            raise ParameterError(f"radius must lie in (0, 1], got {self.radius}")


@dataclass(frozen=True)
class ClassParams:
    """Parameters (n, alpha, beta, c) of the class and of the integral transform."""

    n: int
    alpha: float
    beta: float
    c: float

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
            raise ParameterError(f"n must be a nonnegative integer, got {self.n!r}")
        if not self.alpha > 0:
            raise ParameterError(f"alpha must be positive, got {self.alpha}")
        if not 0 <= self.beta < 1:
            raise ParameterError(f"beta must satisfy 0 <= beta < 1, got {self.beta}")
        if not self.alpha + self.c > 0:
            raise ParameterError(
                f"alpha + c must be positive, got alpha={self.alpha}, c={self.c}"
            )
        object.__setattr__(self, "n", int(self.n))

    @property
    def alpha_plus_c(self) -> float:
        return self.alpha + self.c

    @property
    def hypothesis_ok(self) -> bool:
        """Whether alpha + c stays within the cosine-sum constant."""
        return self.alpha + self.c <= GASPER_CONSTANT


class Taper(StrEnum):
    """How a truncated Herglotz mixture treats its tail."""

    NONE = "none"
    FEJER = "fejer"


@dataclass(frozen=True)
class KernelSpec:
    """Finite Herglotz mixture: boundary points x_j with positive weights w_j."""

    points: tuple[complex, ...]
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        points = tuple(complex(x) for x in self.points)
        weights = tuple(float(w) for w in self.weights)
        if not points:
            raise ParameterError("a kernel needs at least one point")
        if len(points) != len(weights):
            raise ParameterError(
                f"{len(points)} points but {len(weights)} weights"
            )
        for j, x in enumerate(points):
            if abs(abs(x) - 1.0) > _UNIT_TOL:
                raise ParameterError(f"points[{j}] is not unimodular: |x|={abs(x)!r}")
        for j, w in enumerate(weights):
            if not w > 0:
                raise ParameterError(f"weights[{j}] must be positive, got {w}")
        if abs(math.fsum(weights) - 1.0) > _UNIT_TOL:
            raise ParameterError(f"weights must sum to 1, got {math.fsum(weights)!r}")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def single(cls, point: complex = 1.0) -> KernelSpec:
        return cls(points=(point,), weights=(1.0,))

    @property
    def size(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class MembershipReport:
    infimum: float
    argmin_angle: float
    beta_threshold: float
    is_member: bool
    tol: float
    radius: float


@dataclass(frozen=True)
class CosineSumQuery:
    gamma: float
    l: int

    def __post_init__(self) -> None:
        if not self.gamma > -1:
            raise ParameterError(f"gamma must exceed -1, got {self.gamma}")
        if isinstance(self.l, bool) or int(self.l) != self.l or self.l < 1:
            raise ParameterError(f"l must be a positive integer, got {self.l!r}")


class CosineSumMinimum(NamedTuple):
    value: float
    theta: float
    l: int


@dataclass(frozen=True)
class GasperEstimate:
    constant: float
    bracket: tuple[float, float]
    critical_l: int
    critical_theta: float
    l_max: int
    tol: float
    iterations: int


@dataclass(frozen=True)
class Lemma22Check:
    gamma: float
    l: int
    minimum: float
    bound: float
    hypothesis_ok: bool
    holds: bool | None


class HullStatus(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"


@dataclass(frozen=True)
class HullReport:
    status: HullStatus
    max_outside_distance: float
    p_min_re: float
    precondition_ok: bool
    hull_vertices: int
    samples: int
    tol: float


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking the quasi-partial-sum lower bound for one input."""

    params: ClassParams
    m: int
    M: int
    bound: float
    observed_min: float
    argmin_angle: float
    margin: float
    hypothesis_ok: bool
    passed: bool | None
    factorization_residual: float
    q_min: float
    diagnostics: tuple[str, ...] = field(default_factory=tuple)

    @property
    def applicable(self) -> bool:
        return self.passed is not None


@dataclass(frozen=True)
class TightnessReport:
    min_margin: float
    witness: KernelSpec
    evaluated: int
