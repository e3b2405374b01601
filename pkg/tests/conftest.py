"""Shared generators for the randomized suites.

Sampling conventions: canonical parameters are drawn log-uniform in [1/2, hi]
for a and b, uniform in the positive-semidefinite box |c| <= sqrt(ab) for the
correlations, then filtered by det(sigma) >= 1/16 together with
Delta <= 4 det(sigma) + 1/4; with the PSD box these two are equivalent to
nu_minus >= 1/2.
"""

from __future__ import annotations

import math

import numpy as np

from cvsteer import LocalSymplectic, TmstSpec


def rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def random_local_symplectic(rng, max_log_squeeze: float = 1.0) -> LocalSymplectic:
    def one() -> np.ndarray:
        q = math.exp(rng.uniform(-max_log_squeeze, max_log_squeeze))
        return (
            rotation(rng.uniform(0.0, 2.0 * math.pi))
            @ np.diag([q, 1.0 / q])
            @ rotation(rng.uniform(0.0, 2.0 * math.pi))
        )

    return LocalSymplectic(one(), one())


def random_physical_canonical(rng, n: int, hi: float = 5.0) -> np.ndarray:
    """(n, 4) array of physical canonical parameters (a, b, c1, c2)."""
    out = np.empty((0, 4))
    while out.shape[0] < n:
        m = max(4 * (n - out.shape[0]), 1024)
        a = np.exp(rng.uniform(math.log(0.5), math.log(hi), m))
        b = np.exp(rng.uniform(math.log(0.5), math.log(hi), m))
        root = np.sqrt(a * b)
        c1 = rng.uniform(-1.0, 1.0, m) * root
        c2 = rng.uniform(-1.0, 1.0, m) * root
        delta = a * a + b * b + 2.0 * c1 * c2
        det = (a * b - c1 * c1) * (a * b - c2 * c2)
        keep = (delta <= 4.0 * det + 0.25) & (det >= 0.0625)
        out = np.vstack([out, np.column_stack([a, b, c1, c2])[keep]])
    return out[:n]


def conventional_pair(c1: float, c2: float) -> tuple[float, float]:
    """Order correlations per the canonical convention c1 >= |c2|, c1 >= 0.

    A swap of (c1, c2) and a joint sign flip are both local rotations, so this
    picks the representative of the same orbit the canonicalizer reports.
    """
    hi, lo = (c1, c2) if abs(c1) >= abs(c2) else (c2, c1)
    if hi < 0.0:
        hi, lo = -hi, -lo
    return hi, lo


def random_tmst(rng, n: int, mu_lo: float = 0.05, r_hi: float = 2.0) -> list[TmstSpec]:
    return [
        TmstSpec(
            float(rng.uniform(mu_lo, 1.0)),
            float(rng.uniform(mu_lo, 1.0)),
            float(rng.uniform(0.0, r_hi)),
        )
        for _ in range(n)
    ]


def circular_diff(x: float, y: float) -> float:
    """Distance between two angles on the circle."""
    d = (x - y) % (2.0 * math.pi)
    return min(d, 2.0 * math.pi - d)
