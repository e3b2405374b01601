r"""Steering and conditional-nonclassicality criteria for two-mode states.

Direction convention: "BA" means mode B is measured to steer / infer mode A,
"AB" the reverse. All logarithms are natural.

Criteria on canonical parameters (a, b, c1, c2), direction BA:

    WNS (conditional nonclassicality under homodyne, worst case over the
    measured quadrature): a - max(c1^2, c2^2)/b < 1/2.
    SNS (conditional nonclassicality for every homodyne quadrature):
    a - min(c1^2, c2^2)/b < 1/2.
    EPR (Reid inference product): (a - c1^2/b)(a - c2^2/b) < 1/4.
    Remote Wigner negativity after photon counting on A:
    Tr[A - C B^-1 C^T] < 1.

The same WNS/SNS decisions are exposed through the local-symplectic
invariants (I1, I2, I3, I4), which lets the criteria be evaluated without
canonicalizing first and provides an independent route for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .canonical import canonicalize
from .phase_space import (
    SymplecticInvariants,
    _as_cov,
    blocks,
    canonical_ppt_eigenvalue,
    canonical_symplectic_eigenvalues,
    invariants_of,
    ppt_symplectic_eigenvalue,
)
from .states import CanonicalForm, TmstSpec

__all__ = [
    "SteeringReport",
    "sigma_steerability",
    "sigma_photon_form",
    "tmst_entangled",
    "negativity",
    "wns",
    "sns",
    "wns_invariant",
    "sns_invariant",
    "epr_steerable",
    "reid_variances",
    "wigner_remote",
    "directionality",
    "gaussian_discord",
    "steering_report",
]

_DIRECTIONS = ("BA", "AB")
_DIRECTION_NAMES = {"BA": "B_steers_A", "AB": "A_steers_B"}


def _check_direction(direction: str) -> str:
    if direction not in _DIRECTIONS:
        raise ValueError(f"direction must be 'BA' or 'AB', got {direction!r}")
    return direction


def sigma_steerability(spec: TmstSpec, direction: str = "BA") -> float:
    r"""Steerability parameter of a two-mode squeezed thermal state.

    For direction "BA" (B measures, A is steered):
        varsigma = (muA - muB)/2 + ((muA + muB)/2) cosh(2 r).
    The state is steerable in that direction iff varsigma > 1. Finite for
    boundary purities 0.
    """
    _check_direction(direction)
    mu1, mu2 = (spec.muA, spec.muB) if direction == "BA" else (spec.muB, spec.muA)
    return 0.5 * (mu1 - mu2) + 0.5 * (mu1 + mu2) * math.cosh(2.0 * spec.r)


def sigma_photon_form(n_a: float, n_b: float, n_s: float) -> bool:
    r"""Steerability (B steers A) in terms of mean photon numbers.

    n_a, n_b are the thermal photon numbers of the two modes
    (n = (1/mu - 1)/2) and n_s = sinh(r)^2 the squeezing photon number.
    Equivalent to sigma_steerability > 1:
        n_s > n_a (1 + 2 n_b) / (1 + n_a + n_b).
    """
    for name, v in (("n_a", n_a), ("n_b", n_b), ("n_s", n_s)):
        if not (v >= 0.0) or not math.isfinite(v):
            raise ValueError(f"{name} must be >= 0, got {v}")
    return n_s > n_a * (1.0 + 2.0 * n_b) / (1.0 + n_a + n_b)


def tmst_entangled(spec: TmstSpec) -> bool:
    r"""Entanglement of a two-mode squeezed thermal state (PPT condition).

    sqrt((muA + muB)^2 cosh^2(2r) - 4 muA muB) > 2 - (muA + muB) cosh(2r).
    Finite for boundary purities 0 (where the state is never entangled for
    finite r unless the other purity compensates).
    """
    s = (spec.muA + spec.muB) * math.cosh(2.0 * spec.r)
    lhs = math.sqrt(max(s * s - 4.0 * spec.muA * spec.muB, 0.0))
    return lhs > 2.0 - s


def negativity(cm: np.ndarray) -> float:
    r"""Logarithmic negativity max(0, -ln(2 nu_pt)) of a two-mode state.

    nu_pt is the smallest symplectic eigenvalue of the partial transpose;
    natural logarithm, so a twin beam of squeezing r has negativity 2 r.
    """
    return max(0.0, -math.log(2.0 * ppt_symplectic_eigenvalue(cm)))


def _oriented(cf: CanonicalForm, direction: str) -> tuple[float, float, float, float]:
    a, b, c1, c2 = cf
    return (a, b, c1, c2) if _check_direction(direction) == "BA" else (b, a, c1, c2)


def wns(cf: CanonicalForm, direction: str = "BA") -> tuple[bool, float]:
    r"""Weak conditional-nonclassicality criterion.

    Returns (holds, value) with value = a - max(c1^2, c2^2)/b for direction
    "BA": the smallest conditional variance reachable by homodyning the
    measured mode. The criterion holds iff value < 1/2, i.e. some homodyne
    quadrature leaves the steered mode nonclassical.
    """
    a, b, c1, c2 = _oriented(cf, direction)
    value = a - max(c1 * c1, c2 * c2) / b
    return value < 0.5, value


def sns(cf: CanonicalForm, direction: str = "BA") -> tuple[bool, float]:
    r"""Strong conditional-nonclassicality criterion.

    Returns (holds, value) with value = a - min(c1^2, c2^2)/b for direction
    "BA": the largest conditional variance over homodyne quadratures along
    the canonical axes. Holds iff value < 1/2, i.e. every homodyne quadrature
    leaves the steered mode nonclassical.
    """
    a, b, c1, c2 = _oriented(cf, direction)
    value = a - min(c1 * c1, c2 * c2) / b
    return value < 0.5, value


def _invariant_value(inv: SymplecticInvariants, direction: str, branch: float) -> float:
    i1, i2 = (inv.I1, inv.I2) if direction == "BA" else (inv.I2, inv.I1)
    ip = inv.i_prime
    disc = ip * ip - 4.0 * inv.I1 * inv.I2 * inv.I4
    root = math.sqrt(max(disc, 0.0))
    return (ip + branch * root) / (2.0 * i2 * math.sqrt(i1))


def wns_invariant(inv: SymplecticInvariants, direction: str = "BA") -> tuple[bool, float]:
    r"""WNS criterion straight from the symplectic invariants.

    value = (I' - sqrt(I'^2 - 4 I1 I2 I4)) / (2 I2 sqrt(I1)) with
    I' = I1 I2 - I3^2 + I4; direction "AB" swaps I1 and I2. Equals the
    canonical-parameter WNS value; holds iff < 1/2. The discriminant is
    clamped at zero against roundoff.
    """
    _check_direction(direction)
    value = _invariant_value(inv, direction, -1.0)
    return value < 0.5, value


def sns_invariant(inv: SymplecticInvariants, direction: str = "BA") -> tuple[bool, float]:
    """SNS criterion from the invariants: the + branch of the same surd."""
    _check_direction(direction)
    value = _invariant_value(inv, direction, +1.0)
    return value < 0.5, value


def reid_variances(cf: CanonicalForm, direction: str = "BA") -> tuple[float, float]:
    r"""Conditional inference variances (x, p) of the steered mode.

    For direction "BA": (a - c1^2/b, a - c2^2/b).
    """
    a, b, c1, c2 = _oriented(cf, direction)
    return a - c1 * c1 / b, a - c2 * c2 / b


def epr_steerable(cf: CanonicalForm, direction: str = "BA") -> tuple[bool, float]:
    r"""EPR steering via the Reid inference product.

    Returns (steerable, product) with product = (a - c1^2/b)(a - c2^2/b) for
    direction "BA"; steerable iff product < 1/4.
    """
    vx, vp = reid_variances(cf, direction)
    product = vx * vp
    return product < 0.25, product


def wigner_remote(cm: np.ndarray, direction: str = "BA") -> tuple[bool, float]:
    r"""Remote Wigner-negativity criterion under photon counting.

    Returns (negative_capable, trace) with trace = Tr[A - C B^-1 C^T] for
    direction "BA" (the conditional covariance of A after a sharp Gaussian
    readout of B); photon counting on the steered mode can then exhibit a
    negative Wigner function iff trace < 1. Note the trace is not invariant
    under local squeezing of the steered mode; it is evaluated in the frame
    of the matrix as given.
    """
    cm = _as_cov(cm)
    A, B, C = blocks(cm)
    if _check_direction(direction) == "AB":
        A, B, C = B, A, C.T
    det_b = B[0, 0] * B[1, 1] - B[0, 1] * B[1, 0]
    adj = np.array([[B[1, 1], -B[0, 1]], [-B[0, 1], B[0, 0]]])
    trace = float(np.trace(A - (C @ adj @ C.T) / det_b))
    return trace < 1.0, trace


def directionality(spec: TmstSpec) -> str:
    r"""Classify the steering directions of a two-mode squeezed thermal state.

    Returns "two_way", "one_way_BA", "one_way_AB" or "none" according to
    which of the two steerability parameters exceed 1.
    """
    ba = sigma_steerability(spec, "BA") > 1.0
    ab = sigma_steerability(spec, "AB") > 1.0
    if ba and ab:
        return "two_way"
    if ba:
        return "one_way_BA"
    if ab:
        return "one_way_AB"
    return "none"


def _entropy_f(x: float) -> float:
    # f(x) = ((x+1)/2) ln((x+1)/2) - ((x-1)/2) ln((x-1)/2), the thermal-state
    # entropy in nats as a function of the doubled symplectic eigenvalue.
    if x <= 1.0 + 1e-15:
        return 0.0
    xp = 0.5 * (x + 1.0)
    xm = 0.5 * (x - 1.0)
    return xp * math.log(xp) - xm * math.log(xm)


def _discord_canonical(a: float, b: float, c1: float, c2: float) -> float:
    """Gaussian discord with the second slot measured, canonical parameters.

    Closed-form minimum of the conditional entropy over single-mode Gaussian
    measurements, written in the doubled-variance convention internally.
    """
    A = 4.0 * a * a
    B = 4.0 * b * b
    C = 4.0 * c1 * c2
    D = 16.0 * (a * b - c1 * c1) * (a * b - c2 * c2)
    # Product states only; a single vanishing correlation (c1 != 0, c2 = 0)
    # still carries discord and the C = 0 general branch below is exact there.
    if max(abs(c1), abs(c2)) < 1e-14 * max(1.0, a, b):
        return 0.0
    nu_m, nu_p = canonical_symplectic_eigenvalues(a, b, c1, c2)
    two_branch = (D - A * B) ** 2 <= (1.0 + B) * C * C * (A + D)
    if two_branch and (B - 1.0) ** 2 > 1e-30:
        inner = max(C * C + (B - 1.0) * (D - A), 0.0)
        e_min = (
            2.0 * C * C + (B - 1.0) * (D - A) + 2.0 * abs(C) * math.sqrt(inner)
        ) / (B - 1.0) ** 2
    else:
        rad = max(C ** 4 + (D - A * B) ** 2 - 2.0 * C * C * (A * B + D), 0.0)
        e_min = (A * B - C * C + D - math.sqrt(rad)) / (2.0 * B)
    e_min = max(e_min, 1.0)
    return (
        _entropy_f(math.sqrt(B))
        - _entropy_f(2.0 * nu_m)
        - _entropy_f(2.0 * nu_p)
        + _entropy_f(math.sqrt(e_min))
    )


def gaussian_discord(cm: np.ndarray, direction: str = "BA") -> float:
    r"""Gaussian quantum discord of a two-mode state, in nats.

    Direction "BA" measures mode B (discord of A given Gaussian measurements
    of B); "AB" measures mode A. The state is canonicalized first; the
    measurement minimization is the standard two-branch closed form. Always
    >= 0 up to roundoff; exactly 0 for product states.
    """
    _check_direction(direction)
    cf, _ = canonicalize(cm)
    a, b, c1, c2 = cf
    if direction == "BA":
        return _discord_canonical(a, b, c1, c2)
    return _discord_canonical(b, a, c1, c2)


@dataclass(frozen=True)
class SteeringReport:
    """Full criteria panel for one two-mode state and one direction."""

    direction: str
    canonical: CanonicalForm
    invariants: SymplecticInvariants
    sigma_steer: float | None
    wns: bool
    wns_value: float
    sns: bool
    sns_value: float
    epr: bool
    epr_product: float
    negativity: float
    reid_x: float
    reid_p: float
    wigner_remote: bool
    wigner_remote_trace: float
    discord_BA: float
    discord_AB: float

    @property
    def wns_margin(self) -> float:
        """1/2 minus the smallest conditional variance; positive iff WNS holds."""
        return 0.5 - self.wns_value

    @property
    def sns_margin(self) -> float:
        return 0.5 - self.sns_value

    def to_dict(self) -> dict:
        """JSON-ready dictionary with stable field names."""
        return {
            "direction": _DIRECTION_NAMES[self.direction],
            "canonical": {
                "a": self.canonical.a,
                "b": self.canonical.b,
                "c1": self.canonical.c1,
                "c2": self.canonical.c2,
            },
            "invariants": {
                "I1": self.invariants.I1,
                "I2": self.invariants.I2,
                "I3": self.invariants.I3,
                "I4": self.invariants.I4,
            },
            "sigma_steer": self.sigma_steer,
            "wns": self.wns,
            "wns_margin": self.wns_margin,
            "sns": self.sns,
            "sns_margin": self.sns_margin,
            "epr": self.epr,
            "epr_product": self.epr_product,
            "negativity": self.negativity,
            "reid_x": self.reid_x,
            "reid_p": self.reid_p,
            "wigner_remote": self.wigner_remote,
            "wigner_remote_trace": self.wigner_remote_trace,
            "discord_BA": self.discord_BA,
            "discord_AB": self.discord_AB,
        }


def steering_report(
    cm: np.ndarray, direction: str = "BA", tmst: TmstSpec | None = None
) -> SteeringReport:
    r"""Evaluate every criterion for one state and direction.

    Args:
        cm: 4x4 covariance matrix; canonicalized internally. Must be physical.
        direction: "BA" (B steers A, default) or "AB".
        tmst: optional squeezed-thermal parameters of the same state; when
            given, the closed-form steerability parameter is included
            (it is defined through those parameters only).

    Returns:
        SteeringReport; the Wigner-remote trace is evaluated in the frame of
        the input matrix, everything else on the canonical form.
    """
    _check_direction(direction)
    cf, _ = canonicalize(cm)
    inv = invariants_of(cf)
    a, b, c1, c2 = cf
    wns_holds, wns_value = wns(cf, direction)
    sns_holds, sns_value = sns(cf, direction)
    epr_holds, epr_product = epr_steerable(cf, direction)
    reid_x, reid_p = reid_variances(cf, direction)
    wig_holds, wig_trace = wigner_remote(cm, direction)
    eps = max(0.0, -math.log(2.0 * canonical_ppt_eigenvalue(a, b, c1, c2)))
    return SteeringReport(
        direction=direction,
        canonical=cf,
        invariants=inv,
        sigma_steer=sigma_steerability(tmst, direction) if tmst is not None else None,
        wns=wns_holds,
        wns_value=wns_value,
        sns=sns_holds,
        sns_value=sns_value,
        epr=epr_holds,
        epr_product=epr_product,
        negativity=eps,
        reid_x=reid_x,
        reid_p=reid_p,
        wigner_remote=wig_holds,
        wigner_remote_trace=wig_trace,
        discord_BA=_discord_canonical(a, b, c1, c2),
        discord_AB=_discord_canonical(b, a, c1, c2),
    )
