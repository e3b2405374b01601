r"""Reduction of two-mode covariance matrices to canonical form.

Any physical two-mode covariance matrix can be brought to the form
[[a I, C], [C, b I]] with C = diag(c1, c2) by local symplectic operations
(one rotation + squeeze + rotation per mode). a and b are the square roots of
the local determinants and are therefore fixed; the residual freedom in
(c1, c2) is pinned down by the convention c1 >= |c2|, c1 >= 0, with c2
carrying the sign of det C.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .phase_space import UnphysicalStateError, _as_cov, is_physical
from .states import CanonicalForm

__all__ = ["LocalSymplectic", "canonicalize", "transform_blocks"]


@dataclass(frozen=True, eq=False)
class LocalSymplectic:
    """A pair of single-mode symplectic matrices acting as S_A (+) S_B."""

    SA: np.ndarray
    SB: np.ndarray

    def __post_init__(self) -> None:
        for name, s in (("SA", self.SA), ("SB", self.SB)):
            s = np.asarray(s, dtype=float)
            if s.shape != (2, 2):
                raise ValueError(f"{name} must be 2x2")
            if abs(np.linalg.det(s) - 1.0) > 1e-9:
                raise ValueError(f"{name} must have unit determinant")
            object.__setattr__(self, name, s)

    @property
    def matrix(self) -> np.ndarray:
        m = np.zeros((4, 4))
        m[:2, :2] = self.SA
        m[2:, 2:] = self.SB
        return m


def _rot(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def _isotropize(blk: np.ndarray) -> np.ndarray:
    """Single-mode symplectic S with S blk S^T proportional to the identity."""
    theta = 0.5 * np.arctan2(2.0 * blk[0, 1], blk[0, 0] - blk[1, 1])
    r = _rot(-theta)
    d = r @ blk @ r.T
    q = (d[1, 1] / d[0, 0]) ** 0.25
    return np.diag([q, 1.0 / q]) @ r


def _rotation_split(m: np.ndarray) -> tuple[float, float, float, float]:
    """Factor a real 2x2 matrix as R(theta_u) diag(sx, sy) R(theta_v)^T.

    Signed SVD by rotations: sx >= |sy| and sx >= 0, with sy allowed to be
    negative so both factors can stay proper rotations.
    """
    e = 0.5 * (m[0, 0] + m[1, 1])
    f = 0.5 * (m[0, 0] - m[1, 1])
    g = 0.5 * (m[1, 0] + m[0, 1])
    h = 0.5 * (m[1, 0] - m[0, 1])
    q = np.hypot(e, h)
    r = np.hypot(f, g)
    asum = np.arctan2(g, f)
    adif = np.arctan2(h, e)
    return 0.5 * (asum + adif), q + r, q - r, 0.5 * (asum - adif)


def canonicalize(cm: np.ndarray, tol: float = 1e-9) -> tuple[CanonicalForm, LocalSymplectic]:
    r"""Bring a physical two-mode covariance matrix to canonical form.

    Args:
        cm: 4x4 symmetric physical covariance matrix.
        tol: physicality tolerance.

    Returns:
        (cf, ls) with ls.matrix @ cm @ ls.matrix.T equal to the canonical
        matrix of cf. Input that already satisfies the canonical convention
        comes back with identity transforms.

    Raises:
        UnphysicalStateError: if cm is not a physical state within tol.
    """
    cm = _as_cov(cm, tol=max(tol, 1e-12))
    if cm.shape[0] != 4:
        raise ValueError("canonicalize needs a two-mode (4x4) covariance matrix")
    if not is_physical(cm, tol=tol):
        raise UnphysicalStateError("covariance matrix is not a physical state")

    sa = _isotropize(cm[:2, :2])
    sb = _isotropize(cm[2:, 2:])
    corr = sa @ cm[:2, 2:] @ sb.T
    theta_u, sx, sy, theta_v = _rotation_split(corr)
    sa = _rot(-theta_u) @ sa
    sb = _rot(-theta_v) @ sb

    # the physicality gate already bounds the local determinants at 1/4 up to
    # tol; absorb the downward ulp so pure reduced states stay representable
    a = max(float(np.sqrt(np.linalg.det(cm[:2, :2]))), 0.5)
    b = max(float(np.sqrt(np.linalg.det(cm[2:, 2:]))), 0.5)
    cf = CanonicalForm(a, b, float(sx), float(sy))

    # Already-conventional input keeps exact identity transforms instead of
    # accumulating rotation roundoff.
    ls = LocalSymplectic(sa, sb)
    if np.allclose(ls.matrix, np.eye(4), atol=1e-12):
        ls = LocalSymplectic(np.eye(2), np.eye(2))
    return cf, ls


def transform_blocks(cm: np.ndarray, ls: LocalSymplectic) -> np.ndarray:
    """Apply a local symplectic pair to a two-mode covariance matrix."""
    cm = _as_cov(cm)
    if cm.shape[0] != 4:
        raise ValueError("transform_blocks needs a two-mode covariance matrix")
    s = ls.matrix
    return s @ cm @ s.T
