r"""Conditional states of mode A under general Gaussian measurements of mode B.

A single-mode Gaussian measurement is parametrized by (mu, mu_s, phi): mu is
the purity of the measurement seed, mu_s its squeezing purity and phi the
orientation. The conditional covariance matrix of the unmeasured mode is the
Schur complement A - C (B + sigma_M)^-1 C^T and does not depend on the
measurement outcome, so outcomes never appear in this API.

Singular limits of the family (homodyne, the no-readout green vertex, the
blue side) are represented by tags on MeasurementSpec rather than by finite
matrices; operations that need a finite POVM matrix refuse them.

For two-mode squeezed thermal inputs the conditional state is again a
squeezed thermal state; its purity mu_c, squeezing purity mu_sc and
orientation phi_c have closed forms. The closed forms used here are expanded
into sums of positive terms so they stay accurate deep into the mu, mu_s -> 0
corner, where the textbook expressions lose most digits to cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .phase_space import _as_cov, blocks
from .states import TmstSpec

__all__ = [
    "LimitNotMaterializableError",
    "MeasurementSpec",
    "ConditionalParams",
    "povm_cm",
    "condition",
    "conditional_params_tmst",
    "conditional_params_from_cm",
    "nonclassical_depth",
    "nonclassicality_boundary",
]

# Evaluation point for the blue-side limit: the closed forms are evaluated at
# mu = t x, mu_s = x for this x and once more at x/2, then Richardson
# extrapolated (2 f(x/2) - f(x)).
BLUE_SIDE_X = 1e-6

_LIMITS = ("none", "heterodyne", "homodyne", "blue_side", "green_vertex")


class LimitNotMaterializableError(ValueError):
    """A measurement limit tag was passed where a finite POVM matrix is needed."""


@dataclass(frozen=True)
class MeasurementSpec:
    r"""A general-dyne measurement of one mode, or a tagged limit of the family.

    For limit "none" the purities must lie in (0, 1]; mu = mu_s = 1 is
    heterodyne. The tagged limits are:

        heterodyne: mu = mu_s = 1 (kept as a tag for convenience),
        homodyne: mu_s -> 0, sharp quadrature detection at angle phi,
        blue_side: mu = t mu_s with mu_s -> 0, for fixed ratio t >= 0,
        green_vertex: mu -> 0, measurement with the outcome discarded.
    """

    mu: float = 1.0
    mu_s: float = 1.0
    phi: float = 0.0
    limit: str = "none"
    t: float = 0.0

    def __post_init__(self) -> None:
        if self.limit not in _LIMITS:
            raise ValueError(f"unknown limit tag {self.limit!r}")
        if not math.isfinite(self.phi):
            raise ValueError("phi must be finite")
        if self.limit == "none":
            for name in ("mu", "mu_s"):
                v = getattr(self, name)
                if not (0.0 < v <= 1.0) or not math.isfinite(v):
                    raise ValueError(f"{name} must lie in (0, 1], got {v}")
        if self.limit == "blue_side" and (not math.isfinite(self.t) or self.t < 0.0):
            raise ValueError(f"blue_side ratio t must be >= 0, got {self.t}")

    @classmethod
    def heterodyne(cls) -> "MeasurementSpec":
        return cls(1.0, 1.0, 0.0, "heterodyne")

    @classmethod
    def homodyne(cls, phi: float = 0.0) -> "MeasurementSpec":
        return cls(1.0, 1.0, phi, "homodyne")

    @classmethod
    def blue_side(cls, t: float, phi: float = 0.0) -> "MeasurementSpec":
        return cls(1.0, 1.0, phi, "blue_side", t)

    @classmethod
    def green_vertex(cls) -> "MeasurementSpec":
        return cls(1.0, 1.0, 0.0, "green_vertex")


@dataclass(frozen=True)
class ConditionalParams:
    r"""Squeezed-thermal parametrization of a single-mode conditional state.

    The covariance matrix described is
        (1 / (2 mu_c mu_sc)) [[1 + k cos(phi_c), k sin(phi_c)],
                              [k sin(phi_c), 1 - k cos(phi_c)]]
    with k = sqrt(1 - mu_sc^2). Note the off-diagonal sign: the conditional
    orientation is the mirror image of the measurement parametrization, which
    is what makes phi_c equal the measurement angle phi for two-mode squeezed
    thermal inputs.
    """

    mu_c: float
    mu_sc: float
    phi_c: float

    def __post_init__(self) -> None:
        for name in ("mu_c", "mu_sc"):
            v = getattr(self, name)
            if not (v > 0.0) or not math.isfinite(v):
                raise ValueError(f"{name} must be positive, got {v}")

    @property
    def kappa_sc(self) -> float:
        return math.sqrt(max((1.0 - self.mu_sc) * (1.0 + self.mu_sc), 0.0))

    @property
    def lambda_minus(self) -> float:
        """Smallest eigenvalue of the conditional covariance matrix."""
        return self.mu_sc / (2.0 * self.mu_c * (1.0 + self.kappa_sc))

    @property
    def lambda_plus(self) -> float:
        return (1.0 + self.kappa_sc) / (2.0 * self.mu_c * self.mu_sc)

    @property
    def depth(self) -> float:
        """Nonclassical depth max(0, 1/2 - lambda_minus)."""
        return max(0.0, 0.5 - self.lambda_minus)

    def cm(self) -> np.ndarray:
        """Assemble the 2x2 conditional covariance matrix."""
        k = self.kappa_sc
        g = 1.0 / (2.0 * self.mu_c * self.mu_sc)
        cx, sx = math.cos(self.phi_c), math.sin(self.phi_c)
        return g * np.array([[1.0 + k * cx, k * sx], [k * sx, 1.0 - k * cx]])


def povm_cm(m: MeasurementSpec) -> np.ndarray:
    r"""Covariance matrix of the measurement seed state.

    Only finite members of the family have one; the tagged limits raise
    LimitNotMaterializableError.
    """
    if m.limit in ("homodyne", "blue_side", "green_vertex"):
        raise LimitNotMaterializableError(
            f"{m.limit} is a limit of the measurement family, not a finite POVM"
        )
    kappa = math.sqrt(max((1.0 - m.mu_s) * (1.0 + m.mu_s), 0.0))
    g = 1.0 / (2.0 * m.mu * m.mu_s)
    cx, sx = math.cos(m.phi), math.sin(m.phi)
    return g * np.array([[1.0 + kappa * cx, -kappa * sx], [-kappa * sx, 1.0 - kappa * cx]])


def _schur_conditional(cm: np.ndarray, sm: np.ndarray, det_sm: float) -> np.ndarray:
    """A - C (B + sm)^-1 C^T with an adjugate inverse and a cancellation-free
    determinant split, stable for near-singular measurement seeds."""
    A, B, C = blocks(cm)
    M = B + sm
    det_b = B[0, 0] * B[1, 1] - B[0, 1] * B[1, 0]
    mixed = B[0, 0] * sm[1, 1] + B[1, 1] * sm[0, 0] - 2.0 * B[0, 1] * sm[0, 1]
    det_m = det_b + det_sm + mixed
    adj = np.array([[M[1, 1], -M[0, 1]], [-M[0, 1], M[0, 0]]])
    out = A - (C @ adj @ C.T) / det_m
    return 0.5 * (out + out.T)


def _homodyne_conditional(cm: np.ndarray, phi: float) -> np.ndarray:
    # Sharp detection of the quadrature v = (sin(phi/2), cos(phi/2)) of mode B:
    # the Schur complement collapses to a rank-1 update.
    A, B, C = blocks(cm)
    v = np.array([math.sin(0.5 * phi), math.cos(0.5 * phi)])
    w = C @ v
    out = A - np.outer(w, w) / float(v @ B @ v)
    return 0.5 * (out + out.T)


def condition(cm: np.ndarray, m: MeasurementSpec) -> np.ndarray:
    r"""Conditional covariance matrix of mode A given a measurement of mode B.

    Args:
        cm: 4x4 covariance matrix of the joint state.
        m: measurement of mode B; every limit tag is supported (blue_side is
            evaluated at the standard point x = 1e-6 with one Richardson step).

    Returns:
        The 2x2 conditional covariance matrix of mode A.
    """
    cm = _as_cov(cm)
    if cm.shape[0] != 4:
        raise ValueError("condition needs a two-mode covariance matrix")
    if m.limit == "green_vertex":
        return cm[:2, :2].copy()
    if m.limit == "homodyne":
        return _homodyne_conditional(cm, m.phi)
    if m.limit == "blue_side":
        if m.t == 0.0:
            return cm[:2, :2].copy()
        x = BLUE_SIDE_X
        coarse = _schur_conditional(
            cm, povm_cm(MeasurementSpec(m.t * x, x, m.phi)), 0.25 / (m.t * x) ** 2
        )
        fine = _schur_conditional(
            cm,
            povm_cm(MeasurementSpec(m.t * x / 2.0, x / 2.0, m.phi)),
            0.25 / (m.t * x / 2.0) ** 2,
        )
        return 2.0 * fine - coarse
    return _schur_conditional(cm, povm_cm(m), 0.25 / (m.mu * m.mu))


def _params_closed(a, b, dp, mu, mu_s):
    """Cancellation-free (mu_c, mu_sc) closed forms; broadcasts over arrays.

    The correlation strength c enters only through dp = ab - c^2, which is
    passed directly because callers often know it exactly (1/(4 muA muB) for
    a squeezed thermal input).
    """
    g = 1.0 / (2.0 * mu * mu_s)
    half_inv_mu = 0.5 / mu
    num1 = b * b + 2.0 * b * g + half_inv_mu * half_inv_mu
    num2 = dp * dp + 2.0 * a * g * dp + (a * half_inv_mu) ** 2
    den = b * dp + (a * b + dp) * g + a * half_inv_mu * half_inv_mu
    mu_c = 0.5 * np.sqrt(num1 / num2)
    mu_sc = np.sqrt(num1 * num2) / den
    return mu_c, mu_sc


def _lambda_minus_arrays(mu_c, mu_sc):
    """Smallest conditional eigenvalue from the parametrization; broadcasts."""
    kappa = np.sqrt(np.maximum((1.0 - mu_sc) * (1.0 + mu_sc), 0.0))
    return mu_sc / (2.0 * mu_c * (1.0 + kappa))


def conditional_params_tmst(spec: TmstSpec, m: MeasurementSpec) -> ConditionalParams:
    r"""Closed-form conditional parameters for a two-mode squeezed thermal state.

    The conditional orientation equals the measurement angle (phi_c = phi) and
    (mu_c, mu_sc) are phase independent. All limit tags are supported; the
    blue side is evaluated at x = 1e-6 with one Richardson step, matching
    ``condition``.
    """
    a, b, _ = spec.abc()
    dp = 1.0 / (4.0 * spec.muA * spec.muB)

    if m.limit in ("none", "heterodyne"):
        mu, mu_s = (1.0, 1.0) if m.limit == "heterodyne" else (m.mu, m.mu_s)
        mu_c, mu_sc = _params_closed(a, b, dp, mu, mu_s)
        return ConditionalParams(float(mu_c), float(min(mu_sc, 1.0)), m.phi)
    if m.limit == "green_vertex" or (m.limit == "blue_side" and m.t == 0.0):
        return ConditionalParams(0.5 / a, 1.0, m.phi)
    if m.limit == "homodyne":
        # Exact mu_s -> 0 limit: the conditional eigenvalues are (dp/b, a).
        lo, hi = dp / b, a
        rt = math.sqrt(lo * hi)
        return ConditionalParams(0.5 / rt, 2.0 * rt / (lo + hi), m.phi)
    if m.limit == "blue_side":
        x = BLUE_SIDE_X
        coarse = _params_closed(a, b, dp, m.t * x, x)
        fine = _params_closed(a, b, dp, m.t * x / 2.0, x / 2.0)
        mu_c = 2.0 * fine[0] - coarse[0]
        mu_sc = 2.0 * fine[1] - coarse[1]
        return ConditionalParams(float(mu_c), float(min(mu_sc, 1.0)), m.phi)
    raise ValueError(f"unknown limit tag {m.limit!r}")


def conditional_params_from_cm(cm: np.ndarray) -> ConditionalParams:
    r"""Read (mu_c, mu_sc, phi_c) off a single-mode covariance matrix.

    Inverse of ConditionalParams.cm(); phi_c is reported in [0, 2 pi) and is 0
    for an isotropic matrix.
    """
    cm = _as_cov(cm)
    if cm.shape[0] != 2:
        raise ValueError("expected a single-mode (2x2) covariance matrix")
    det = float(cm[0, 0] * cm[1, 1] - cm[0, 1] * cm[1, 0])
    if det <= 0.0:
        raise ValueError("covariance matrix must be positive definite")
    tr = float(cm[0, 0] + cm[1, 1])
    mu_c = 0.5 / math.sqrt(det)
    mu_sc = 2.0 * math.sqrt(det) / tr
    phi_c = math.atan2(2.0 * cm[0, 1], cm[0, 0] - cm[1, 1]) % (2.0 * math.pi)
    return ConditionalParams(mu_c, min(mu_sc, 1.0), phi_c)


def nonclassical_depth(cm: np.ndarray) -> float:
    r"""Nonclassical depth of a single-mode Gaussian state.

    max(0, 1/2 - lambda_min): the amount of thermal noise needed to make the
    state classical. Zero iff the smallest quadrature variance is >= 1/2.
    """
    cm = _as_cov(cm)
    if cm.shape[0] != 2:
        raise ValueError("nonclassical depth is defined for single-mode input")
    lam_min = 0.5 * (cm[0, 0] + cm[1, 1]) - math.hypot(
        0.5 * (cm[0, 0] - cm[1, 1]), cm[0, 1]
    )
    return max(0.0, 0.5 - lam_min)


def nonclassicality_boundary(mu_c: float) -> float:
    r"""Largest squeezing purity mu_sc that is still nonclassical at purity mu_c.

    A conditional state with parameters (mu_c, mu_sc) is nonclassical iff
    mu_sc < 2 mu_c / (1 + mu_c^2).
    """
    if not (0.0 < mu_c <= 1.0):
        raise ValueError(f"mu_c must lie in (0, 1], got {mu_c}")
    return 2.0 * mu_c / (1.0 + mu_c * mu_c)
