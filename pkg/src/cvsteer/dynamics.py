r"""Lossy-channel dynamics of twin-beam states with thermal noise on one mode.

Mode A of the state is coupled to a reservoir with damping rate gamma and
mean thermal photon number n_th; mode B is untouched. The covariance matrix
evolves as

    sigma_t = G^(1/2) sigma_0 G^(1/2) + (I - G) sigma_inf,

with G = diag(e^(-gamma t), e^(-gamma t), 1, 1) and
sigma_inf = (n_th + 1/2) I on mode A. A twin beam stays a two-mode squeezed
thermal state along the whole flow, with purities and squeezing given in
closed form, so every criterion can be followed analytically in time.

Because evolution acts on mode A only and conditioning acts on mode B only,
conditioning commutes with the flow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .phase_space import _as_cov
from .states import TmstSpec, tmst_cm
from .steering import negativity, sigma_steerability

__all__ = [
    "ChannelSpec",
    "TimePoint",
    "evolve",
    "noised_tmst_params",
    "t_ns",
    "t_ent",
    "timeline",
    "timeline_csv",
]


@dataclass(frozen=True)
class ChannelSpec:
    """Single-mode thermal loss channel: damping rate gamma, noise photons n_th."""

    gamma: float
    n_th: float

    def __post_init__(self) -> None:
        if not (self.gamma >= 0.0) or not math.isfinite(self.gamma):
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if not (self.n_th >= 0.0) or not math.isfinite(self.n_th):
            raise ValueError(f"n_th must be >= 0, got {self.n_th}")


def evolve(cm: np.ndarray, ch: ChannelSpec, t: float) -> np.ndarray:
    """Evolve a two-mode covariance matrix for time t, noise acting on mode A."""
    cm = _as_cov(cm)
    if cm.shape[0] != 4:
        raise ValueError("evolve needs a two-mode covariance matrix")
    if not (t >= 0.0) or not math.isfinite(t):
        raise ValueError(f"t must be >= 0, got {t}")
    e = math.exp(-ch.gamma * t)
    se = math.sqrt(e)
    out = cm.copy()
    out[:2, :] *= se
    out[:, :2] *= se
    drift = (1.0 - e) * (ch.n_th + 0.5)
    out[0, 0] += drift
    out[1, 1] += drift
    return out


def noised_tmst_params(n_s: float, ch: ChannelSpec, t: float) -> TmstSpec:
    r"""Squeezed-thermal parameters of an evolved twin beam.

    The initial state is a twin beam with squeezing photon number
    n_s = sinh(r)^2. Exact closed form: with w = e^(-gamma t) and
    S = sqrt(((n_s - n_th) w + 1 + n_s + n_th)^2 - 4 w n_s (1 + n_s)),

        muA' = 1 / ((n_s - n_th)(w - 1) + S),
        muB' = 1 / ((n_th - n_s)(w - 1) + S),
        r'   = (1/2) arccosh(((n_s - n_th) w + 1 + n_s + n_th) / S).

    Written through the decaying factor w so it stays finite at any time.
    tmst_cm of the result equals evolve(twb_cm(r), ch, t).
    """
    if not (n_s >= 0.0) or not math.isfinite(n_s):
        raise ValueError(f"n_s must be >= 0, got {n_s}")
    if not (t >= 0.0) or not math.isfinite(t):
        raise ValueError(f"t must be >= 0, got {t}")
    w = math.exp(-ch.gamma * t)
    num = (n_s - ch.n_th) * w + 1.0 + n_s + ch.n_th
    s = math.sqrt(max(num * num - 4.0 * w * n_s * (1.0 + n_s), 0.0))
    mu_a = 1.0 / ((n_s - ch.n_th) * (w - 1.0) + s)
    mu_b = 1.0 / ((ch.n_th - n_s) * (w - 1.0) + s)
    r = 0.5 * math.acosh(max(num / s, 1.0))
    return TmstSpec(min(mu_a, 1.0), min(mu_b, 1.0), r)


def t_ns(n_s: float, ch: ChannelSpec) -> float:
    r"""Time at which conditional nonclassicality is lost.

    (1/gamma) ln(1 + n_s / (n_th (1 + 2 n_s))); the steerability parameter of
    the evolved state crosses 1 exactly here. Returns math.inf when gamma = 0
    or n_th = 0 (the threshold is never reached).
    """
    if not (n_s >= 0.0) or not math.isfinite(n_s):
        raise ValueError(f"n_s must be >= 0, got {n_s}")
    if ch.gamma == 0.0 or ch.n_th == 0.0:
        return math.inf
    return math.log(1.0 + n_s / (ch.n_th * (1.0 + 2.0 * n_s))) / ch.gamma


def t_ent(ch: ChannelSpec) -> float:
    r"""Time at which entanglement is lost: (1/gamma) ln(1 + 1/n_th).

    Independent of the initial squeezing. Returns math.inf when gamma = 0 or
    n_th = 0 (entanglement survives at all times).
    """
    if ch.gamma == 0.0 or ch.n_th == 0.0:
        return math.inf
    return math.log(1.0 + 1.0 / ch.n_th) / ch.gamma


class TimePoint(NamedTuple):
    """One sample of the evolved family."""

    t: float
    spec: TmstSpec
    sigma_steer: float
    negativity: float
    overlap: bool


def timeline(
    n_s: float,
    ch: ChannelSpec,
    times: Iterable[float] | None = None,
    n_times: int = 200,
) -> list[TimePoint]:
    r"""Sample steerability and negativity along the noisy evolution.

    The default grid is n_times points, linear on [0, 1.2 t_ent]; when t_ent
    is infinite it falls back to three damping times (or [0, 1] for gamma = 0).
    ``overlap`` records whether the conditional-nonclassicality region is still
    reachable (steerability parameter > 1); it flips to False at the first
    sample at or past the nonclassicality lifetime.
    """
    if times is None:
        te = t_ent(ch)
        if math.isfinite(te):
            span = 1.2 * te
        elif ch.gamma > 0.0:
            span = 3.0 / ch.gamma
        else:
            span = 1.0
        times = np.linspace(0.0, span, n_times)
    points = []
    for t in times:
        spec = noised_tmst_params(n_s, ch, float(t))
        sig = sigma_steerability(spec)
        eps = negativity(tmst_cm(spec)) if spec.muA > 0.0 else 0.0
        points.append(TimePoint(float(t), spec, sig, eps, sig > 1.0))
    return points


def timeline_csv(points: Iterable[TimePoint]) -> str:
    """Render a timeline as CSV with columns t,muA,muB,r,sigma_steer,negativity,overlap."""
    lines = ["t,muA,muB,r,sigma_steer,negativity,overlap"]
    for p in points:
        lines.append(
            f"{p.t!r},{p.spec.muA!r},{p.spec.muB!r},{p.spec.r!r},"
            f"{p.sigma_steer!r},{p.negativity!r},{'true' if p.overlap else 'false'}"
        )
    return "\n".join(lines) + "\n"
