r"""Symplectic geometry helpers for one- and two-mode Gaussian states.

Conventions used across the package:

* quadrature ordering is (x1, p1, x2, p2),
* the vacuum quadrature variance is 1/2 (so a purity-mu thermal state has
  covariance matrix I/(2 mu)),
* a covariance matrix is physical iff it is symmetric, positive semidefinite
  and every symplectic eigenvalue is >= 1/2.

Logarithms are natural throughout the package.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

__all__ = [
    "OMEGA1",
    "OMEGA2",
    "UnphysicalStateError",
    "omega",
    "blocks",
    "is_physical",
    "symplectic_eigenvalues",
    "ppt_symplectic_eigenvalue",
    "SymplecticInvariants",
    "invariants_of",
]


class UnphysicalStateError(ValueError):
    """Raised when an operation requires a physical covariance matrix."""


def omega(n_modes: int) -> np.ndarray:
    r"""Symplectic form for ``n_modes`` modes in (x1, p1, x2, p2, ...) ordering.

    Returns the block-diagonal matrix with [[0, 1], [-1, 0]] per mode.
    """
    if n_modes < 1:
        raise ValueError("n_modes must be >= 1")
    w = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        w[2 * k, 2 * k + 1] = 1.0
        w[2 * k + 1, 2 * k] = -1.0
    return w


OMEGA1 = omega(1)
OMEGA2 = omega(2)

# Partial transposition of the second mode at the phase-space level.
_LAMBDA_B = np.diag([1.0, 1.0, 1.0, -1.0])


def _as_cov(cm: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    cm = np.asarray(cm, dtype=float)
    if cm.ndim != 2 or cm.shape[0] != cm.shape[1] or cm.shape[0] not in (2, 4):
        raise ValueError(f"expected a 2x2 or 4x4 covariance matrix, got shape {cm.shape}")
    scale = max(1.0, float(np.max(np.abs(cm))))
    if float(np.max(np.abs(cm - cm.T))) > tol * scale:
        raise ValueError("covariance matrix must be symmetric")
    return cm


def blocks(cm: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    r"""Split a two-mode covariance matrix into (A, B, C) with cm = [[A, C], [C^T, B]]."""
    cm = _as_cov(cm)
    if cm.shape[0] != 4:
        raise ValueError("blocks() needs a two-mode (4x4) covariance matrix")
    return cm[:2, :2], cm[2:, 2:], cm[:2, 2:]


def _is_canonical_struct(cm: np.ndarray, tol: float = 1e-10) -> bool:
    """True when cm already has the aI, bI, diag(c1, c2) block structure."""
    scale = max(1.0, float(np.max(np.abs(cm))))
    off = abs(cm[0, 1]) + abs(cm[2, 3]) + abs(cm[0, 3]) + abs(cm[1, 2])
    iso = abs(cm[0, 0] - cm[1, 1]) + abs(cm[2, 2] - cm[3, 3])
    return (off + iso) <= tol * scale


def _nu_pair_from_delta(delta: float, det: float) -> tuple[float, float]:
    # nu_-^2 computed as 2 det / (delta + sqrt(delta^2 - 4 det)) so that the
    # subtraction cannot cancel for strongly squeezed states.
    disc = delta * delta - 4.0 * det
    if disc < 0.0:
        disc = 0.0
    root = np.sqrt(disc)
    hi2 = 0.5 * (delta + root)
    lo2 = det / hi2 if hi2 > 0.0 else 0.0
    return float(np.sqrt(max(lo2, 0.0))), float(np.sqrt(max(hi2, 0.0)))


def canonical_symplectic_eigenvalues(
    a: float, b: float, c1: float, c2: float
) -> tuple[float, float]:
    r"""Symplectic eigenvalue pair (nu_minus, nu_plus) of the canonical form.

    Uses the closed form with Delta = a^2 + b^2 + 2 c1 c2 and
    det sigma = (ab - c1^2)(ab - c2^2).
    """
    delta = a * a + b * b + 2.0 * c1 * c2
    det = (a * b - c1 * c1) * (a * b - c2 * c2)
    return _nu_pair_from_delta(delta, det)


def canonical_ppt_eigenvalue(a: float, b: float, c1: float, c2: float) -> float:
    r"""Smallest symplectic eigenvalue after partial transposition, closed form.

    Partial transposition flips the sign of c2, so Delta becomes
    a^2 + b^2 - 2 c1 c2 while det sigma is unchanged.
    """
    delta = a * a + b * b - 2.0 * c1 * c2
    det = (a * b - c1 * c1) * (a * b - c2 * c2)
    return _nu_pair_from_delta(delta, det)[0]


def _numeric_nu(cm: np.ndarray) -> np.ndarray:
    """All symplectic eigenvalues of a 2n x 2n covariance matrix, ascending."""
    n = cm.shape[0] // 2
    m = omega(n) @ cm
    # (Omega sigma)^2 has each -nu_j^2 as a doubled real eigenvalue; working
    # with the squared matrix keeps the arithmetic real.
    ev = np.linalg.eigvals(m @ m)
    nu = np.sqrt(np.abs(np.real(ev)))
    nu.sort()
    return nu[::2]


def symplectic_eigenvalues(cm: np.ndarray, method: str = "auto") -> tuple[float, ...]:
    r"""Symplectic eigenvalues of a covariance matrix, ascending.

    Args:
        cm: 2x2 or 4x4 symmetric covariance matrix.
        method: "auto" picks the closed form for canonical-form input and the
            numeric route otherwise; "delta" forces the closed form through the
            block determinants; "numeric" forces the eigenvalue route through
            (Omega sigma)^2. The two routes exist so they can cross-check each
            other.

    Returns:
        (nu,) for one mode, (nu_minus, nu_plus) for two modes.
    """
    cm = _as_cov(cm)
    if cm.shape[0] == 2:
        det = float(np.linalg.det(cm))
        return (float(np.sqrt(max(det, 0.0))),)
    if method not in ("auto", "delta", "numeric"):
        raise ValueError(f"unknown method {method!r}")
    if method == "numeric" or (method == "auto" and not _is_canonical_struct(cm)):
        nu = _numeric_nu(cm)
        return (float(nu[0]), float(nu[1]))
    A, B, C = cm[:2, :2], cm[2:, 2:], cm[:2, 2:]
    delta = float(np.linalg.det(A) + np.linalg.det(B) + 2.0 * np.linalg.det(C))
    det = float(np.linalg.det(cm))
    return _nu_pair_from_delta(delta, det)


def ppt_symplectic_eigenvalue(cm: np.ndarray, method: str = "auto") -> float:
    r"""Smallest symplectic eigenvalue of the partial transpose of ``cm``.

    The state is separable across the 1|2 split iff the returned value is
    >= 1/2. Accepts the same ``method`` choices as ``symplectic_eigenvalues``.
    """
    cm = _as_cov(cm)
    if cm.shape[0] != 4:
        raise ValueError("partial transposition needs a two-mode covariance matrix")
    if method not in ("auto", "delta", "numeric"):
        raise ValueError(f"unknown method {method!r}")
    if method == "numeric" or (method == "auto" and not _is_canonical_struct(cm)):
        pt = _LAMBDA_B @ cm @ _LAMBDA_B
        return float(_numeric_nu(pt)[0])
    A, B, C = cm[:2, :2], cm[2:, 2:], cm[:2, 2:]
    delta = float(np.linalg.det(A) + np.linalg.det(B) - 2.0 * np.linalg.det(C))
    det = float(np.linalg.det(cm))
    return _nu_pair_from_delta(delta, det)[0]


def is_physical(cm: np.ndarray, tol: float = 1e-9) -> bool:
    r"""Whether ``cm`` is the covariance matrix of a quantum state.

    True iff cm is positive semidefinite within ``tol`` and its smallest
    symplectic eigenvalue is >= 1/2 - tol. Raises ValueError for input that is
    not symmetric within ``tol``.
    """
    cm = _as_cov(cm, tol=max(tol, 1e-12))
    if float(np.min(np.linalg.eigvalsh(cm))) < -tol:
        return False
    return float(symplectic_eigenvalues(cm)[0]) >= 0.5 - tol


class SymplecticInvariants(NamedTuple):
    """Local-symplectic invariants of a two-mode state: the block determinants."""

    I1: float
    I2: float
    I3: float
    I4: float

    @property
    def i_prime(self) -> float:
        """The combination I1 I2 - I3^2 + I4 entering the invariant criteria."""
        return self.I1 * self.I2 - self.I3 * self.I3 + self.I4


def invariants_of(cf: "Iterable[float] | np.ndarray") -> SymplecticInvariants:
    r"""Local-symplectic invariants (I1, I2, I3, I4) of a two-mode state.

    Args:
        cf: either canonical-form parameters, anything that unpacks to
            (a, b, c1, c2), or a full 4x4 covariance matrix.

    Returns:
        SymplecticInvariants with I1 = det A, I2 = det B, I3 = det C and
        I4 = det of the full matrix. For canonical parameters these are
        (a^2, b^2, c1 c2, (ab - c1^2)(ab - c2^2)).
    """
    arr = np.asarray(cf, dtype=float) if isinstance(cf, np.ndarray) else None
    if arr is not None and arr.ndim == 2:
        A, B, C = blocks(arr)
        return SymplecticInvariants(
            float(np.linalg.det(A)),
            float(np.linalg.det(B)),
            float(np.linalg.det(C)),
            float(np.linalg.det(arr)),
        )
    a, b, c1, c2 = (float(v) for v in cf)
    return SymplecticInvariants(
        a * a, b * b, c1 * c2, (a * b - c1 * c1) * (a * b - c2 * c2)
    )
