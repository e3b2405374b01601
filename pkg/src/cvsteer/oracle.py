r"""Brute-force cross-checks for the closed-form results.

Everything in this module recomputes quantities the rest of the package gets
analytically, by direct numeric search over measurement space or by
convergence studies, so the two routes can be compared in tests:

    sweep_measurements: grid search over (mu, mu_s, phi) for the largest
        conditional nonclassical depth; must approach (and never exceed) the
        homodyne closed form.
    verify_blue_side: convergence study of the fixed-ratio limit mu = t mu_s,
        mu_s = x -> 0 against the algebraic limit curve.
    numeric_discord_min: measurement-grid minimizer behind the Gaussian
        discord closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .canonical import canonicalize
from .conditioning import _params_closed
from .phase_space import canonical_symplectic_eigenvalues
from .states import TmstSpec
from .steering import _entropy_f

__all__ = [
    "SweepResult",
    "BlueSideCheck",
    "sweep_measurements",
    "verify_blue_side",
    "numeric_discord_min",
]


@dataclass(frozen=True)
class SweepResult:
    """Outcome of a depth grid search against the homodyne closed form."""

    best_depth: float
    best_mu: float
    best_mu_s: float
    best_phi: float
    closed_form_depth: float
    within_tol: bool
    exceeds_closed_form: bool
    grid: tuple[int, int, int]
    floors: tuple[float, float]
    tol: float


def _conditional_lambda_grid(a, b, c1, c2, mu, mu_s, phi):
    """Smallest conditional eigenvalue of mode A, broadcast over a
    measurement grid applied to mode B of a canonical state."""
    g = 1.0 / (2.0 * mu * mu_s)
    kappa = np.sqrt(np.maximum((1.0 - mu_s) * (1.0 + mu_s), 0.0))
    cphi = np.cos(phi)
    sphi = np.sin(phi)
    m00 = b + g * (1.0 + kappa * cphi)
    m11 = b + g * (1.0 - kappa * cphi)
    m01 = -g * kappa * sphi
    # det(B + sigma_M) split into positive pieces; the naive product cancels
    # catastrophically as mu_s -> 0.
    det_m = b * b + 0.25 / (mu * mu) + 2.0 * b * g
    s00 = a - c1 * c1 * m11 / det_m
    s11 = a - c2 * c2 * m00 / det_m
    s01 = c1 * c2 * m01 / det_m
    return 0.5 * (s00 + s11) - np.hypot(0.5 * (s00 - s11), s01)


def sweep_measurements(
    cm: np.ndarray,
    n_mu: int = 20,
    n_mus: int = 40,
    n_phi: int = 8,
    mu_floor: float = 1e-3,
    mus_floor: float = 1e-3,
    tol: float = 1e-3,
) -> SweepResult:
    r"""Grid search for the deepest conditional nonclassicality.

    The state is canonicalized first; the measurement family is closed under
    local symplectics, so nothing is lost by sweeping in the canonical frame.
    The grid is log spaced in mu and mu_s down to the given floors and uniform
    in phi. The best depth found can never exceed the homodyne closed form
    and should fall within ``tol`` of it once the mu_s floor is small.
    """
    cf, _ = canonicalize(cm)
    a, b, c1, c2 = cf
    mu = np.geomspace(mu_floor, 1.0, n_mu)[:, None, None]
    mu_s = np.geomspace(mus_floor, 1.0, n_mus)[None, :, None]
    phi = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)[None, None, :]
    lam = _conditional_lambda_grid(a, b, c1, c2, mu, mu_s, phi)
    depth = np.maximum(0.0, 0.5 - lam)
    flat = int(np.argmax(depth))
    i, j, k = np.unravel_index(flat, depth.shape)
    best = float(depth[i, j, k])
    closed = max(0.0, 0.5 - (a - max(c1 * c1, c2 * c2) / b))
    return SweepResult(
        best_depth=best,
        best_mu=float(mu[i, 0, 0]),
        best_mu_s=float(mu_s[0, j, 0]),
        best_phi=float(phi[0, 0, k]),
        closed_form_depth=closed,
        within_tol=bool(closed - best <= tol),
        exceeds_closed_form=bool(best > closed + 1e-9),
        grid=(n_mu, n_mus, n_phi),
        floors=(mu_floor, mus_floor),
        tol=tol,
    )


@dataclass(frozen=True, eq=False)
class BlueSideCheck:
    """Convergence record of the fixed-ratio (blue side) limit."""

    t_values: np.ndarray
    xs: tuple[float, ...]
    errors: np.ndarray
    orders: np.ndarray
    min_order: float
    extrapolation_error: float
    ok: bool


def _blue_limit_exact(a: float, b: float, dp: float, t) -> tuple[np.ndarray, np.ndarray]:
    # Algebraic x -> 0 limit of the closed forms at mu = t x, mu_s = x:
    # the leading coefficients of num1, num2 and den after scaling by x^2.
    a1 = (4.0 * b * t + 1.0) / (4.0 * t * t)
    a2 = a * (4.0 * dp * t + a) / (4.0 * t * t)
    a3 = (2.0 * t * (a * b + dp) + a) / (4.0 * t * t)
    return 0.5 * np.sqrt(a1 / a2), np.sqrt(a1 * a2) / a3


def verify_blue_side(
    spec: TmstSpec,
    t_values: np.ndarray | None = None,
    xs: tuple[float, ...] = (1e-4, 1e-5, 1e-6),
    tol: float = 1e-6,
) -> BlueSideCheck:
    r"""Convergence study of the blue-side evaluation.

    For every ratio t, the closed forms are evaluated at mu = t x, mu_s = x
    for the decreasing sequence ``xs`` and compared against the algebraic
    limit curve. Reports the per-step convergence orders (which should all be
    >= 1; the limit is approached linearly in x or better), the worst of
    them, and the worst error of the package's Richardson-extrapolated
    evaluation at the smallest x.
    """
    if t_values is None:
        t_values = np.geomspace(1e-3, 1e3, 13)
    t_values = np.asarray(t_values, dtype=float)
    if np.any(t_values <= 0.0):
        raise ValueError("blue-side ratios t must be positive")
    a, b, _ = spec.abc()
    dp = 1.0 / (4.0 * spec.muA * spec.muB)
    ref_c, ref_sc = _blue_limit_exact(a, b, dp, t_values)

    errors = np.empty((t_values.size, len(xs)))
    for col, x in enumerate(xs):
        mc, msc = _params_closed(a, b, dp, t_values * x, x)
        errors[:, col] = np.maximum(np.abs(mc - ref_c), np.abs(msc - ref_sc))

    # Per-step order p from e(x) ~ x^p over each factor-10 step, skipping
    # steps already at roundoff.
    orders = []
    for row in errors:
        row_orders = []
        for k in range(len(xs) - 1):
            ratio = math.log10(xs[k] / xs[k + 1])
            if row[k + 1] > 1e-13:
                row_orders.append(math.log10(row[k] / row[k + 1]) / ratio)
        orders.append(min(row_orders) if row_orders else math.inf)
    orders = np.asarray(orders)

    x = min(xs)
    coarse = _params_closed(a, b, dp, t_values * x, x)
    fine = _params_closed(a, b, dp, t_values * (x / 2.0), x / 2.0)
    extrap_err = float(
        np.max(
            np.maximum(
                np.abs(2.0 * fine[0] - coarse[0] - ref_c),
                np.abs(2.0 * fine[1] - coarse[1] - ref_sc),
            )
        )
    )
    min_order = float(np.min(orders))
    return BlueSideCheck(
        t_values=t_values,
        xs=tuple(xs),
        errors=errors,
        orders=orders,
        min_order=min_order,
        extrapolation_error=extrap_err,
        ok=bool(min_order >= 1.0 and extrap_err <= tol),
    )


def _conditional_det_grid(a, b, c1, c2, mu_s, phi):
    """Conditional determinant of the unmeasured mode over a pure-seed
    measurement grid (mu = 1) on the second mode of a canonical state."""
    g = 0.5 / mu_s
    kappa = np.sqrt(np.maximum((1.0 - mu_s) * (1.0 + mu_s), 0.0))
    cphi = np.cos(phi)
    sphi = np.sin(phi)
    m00 = b + g * (1.0 + kappa * cphi)
    m11 = b + g * (1.0 - kappa * cphi)
    m01 = -g * kappa * sphi
    det_m = b * b + 0.25 + 2.0 * b * g
    s00 = a - c1 * c1 * m11 / det_m
    s11 = a - c2 * c2 * m00 / det_m
    s01 = c1 * c2 * m01 / det_m
    return s00 * s11 - s01 * s01


def numeric_discord_min(
    cm: np.ndarray,
    direction: str = "BA",
    n_mus: int = 64,
    n_phi: int = 16,
    refine: int = 3,
) -> float:
    r"""Gaussian discord by direct minimization over the measurement grid.

    Measures the mode indicated by ``direction`` ("BA" measures B) with pure
    Gaussian seeds (mu = 1), scanning mu_s log spaced and phi uniform, then
    refining the grid around the running minimum. Independent of the closed
    form used by ``gaussian_discord``; the two agree to ~1e-4 or better.
    """
    if direction not in ("BA", "AB"):
        raise ValueError(f"direction must be 'BA' or 'AB', got {direction!r}")
    cf, _ = canonicalize(cm)
    a, b, c1, c2 = cf
    if direction == "AB":
        a, b = b, a
    if max(abs(c1), abs(c2)) < 1e-14 * max(1.0, a, b):
        return 0.0

    lo, hi = 1e-6, 1.0
    phi_lo, phi_hi = 0.0, math.pi
    best_det = math.inf
    for _ in range(refine + 1):
        mu_s = np.geomspace(lo, hi, n_mus)[:, None]
        phi = np.linspace(phi_lo, phi_hi, n_phi)[None, :]
        dets = _conditional_det_grid(a, b, c1, c2, mu_s, phi)
        j, k = np.unravel_index(int(np.argmin(dets)), dets.shape)
        best_det = min(best_det, float(dets[j, k]))
        j_lo, j_hi = max(j - 1, 0), min(j + 1, n_mus - 1)
        lo, hi = float(mu_s[j_lo, 0]), float(mu_s[j_hi, 0])
        k_lo, k_hi = max(k - 1, 0), min(k + 1, n_phi - 1)
        phi_lo, phi_hi = float(phi[0, k_lo]), float(phi[0, k_hi])

    e_min = max(4.0 * best_det, 1.0)
    nu_m, nu_p = canonical_symplectic_eigenvalues(*cf)
    return (
        _entropy_f(2.0 * b)
        - _entropy_f(2.0 * nu_m)
        - _entropy_f(2.0 * nu_p)
        + _entropy_f(math.sqrt(e_min))
    )
