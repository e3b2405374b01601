r"""Five self-contained consistency checks on hand-picked states.

Each check bundles a state with the qualitative claims that make it
interesting (separable yet conditionally nonclassical, EPR-steerable without
the strong criterion, vanishing discord asymptotics, ...). They run from the
CLI (``cvsteer appendix``) and from the test suite; a failure means the
criteria implementations disagree with each other, not merely with a stored
number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .canonical import canonicalize
from .phase_space import is_physical, ppt_symplectic_eigenvalue
from .states import CanonicalForm, canonical_cm, gqd_sequence, swns_cm
from .steering import (
    epr_steerable,
    gaussian_discord,
    negativity,
    reid_variances,
    sns,
    wigner_remote,
    wns,
)

__all__ = ["CheckResult", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str


def check_separable_wns() -> CheckResult:
    """A separable state satisfying the weak criterion but not the strong one."""
    cf = CanonicalForm(13.9, 13.9, 4.6, -13.7)
    cm = canonical_cm(cf)
    nu_pt = ppt_symplectic_eigenvalue(cm)
    wns_holds, wns_value = wns(cf)
    sns_holds, sns_value = sns(cf)
    passed = (
        cf.physical
        and nu_pt >= 0.5
        and negativity(cm) == 0.0
        and wns_holds
        and not sns_holds
    )
    return CheckResult(
        "separable_wns",
        passed,
        f"nu_pt={nu_pt:.6f} wns={wns_value:.6f} sns={sns_value:.6f}",
    )


def check_separable_by_sign() -> CheckResult:
    """Positive c1 c2 forces separability yet the weak criterion still holds."""
    cf = CanonicalForm(1.8, 1.8, 0.4, 1.6)
    cm = canonical_cm(cf)
    nu_pt = ppt_symplectic_eigenvalue(cm)
    wns_holds, wns_value = wns(cf)
    passed = (
        cf.physical
        and cf.c1 * cf.c2 > 0.0
        and nu_pt >= 0.5
        and wns_holds
        and wns_value > 0.0
    )
    return CheckResult(
        "separable_by_sign", passed, f"nu_pt={nu_pt:.6f} wns={wns_value:.6f}"
    )


def check_swns_state() -> CheckResult:
    """The engineered separable state with nonclassical conditional states."""
    cm = swns_cm(1.0 / 32.0, 0.25)
    cf, _ = canonicalize(cm)
    # Already in canonical form: every off-pattern entry vanishes.
    pattern = canonical_cm(cm[0, 0], cm[2, 2], cm[0, 2], cm[1, 3])
    structural = float(np.max(np.abs(cm - pattern))) <= 1e-9
    nu_pt = ppt_symplectic_eigenvalue(cm)
    wns_holds, wns_value = wns(cf)
    passed = (
        structural
        and is_physical(cm)
        and nu_pt >= 0.5
        and wns_holds
        and wns_value > 0.0
    )
    return CheckResult(
        "swns_state",
        passed,
        f"a={cf.a:.6f} c1={cf.c1:.6f} c2={cf.c2:.6f} "
        f"nu_pt={nu_pt:.6f} wns={wns_value:.6f}",
    )


def check_discord_sequence(n_max: int = 50, n_tail: int = 100) -> CheckResult:
    """Weakly nonclassically steerable states whose discords vanish with n."""
    prev_ba = math.inf
    prev_ab = math.inf
    ok = True
    for n in range(3, n_max + 1):
        cf = gqd_sequence(n)
        cm = canonical_cm(cf)
        wns_holds, wns_value = wns(cf)
        d_ba = gaussian_discord(cm, "BA")
        d_ab = gaussian_discord(cm, "AB")
        ok = ok and cf.physical and wns_holds
        ok = ok and abs(wns_value - n / (2.0 * n + 1.0)) <= 1e-12
        ok = ok and d_ba < prev_ba and d_ab < prev_ab
        prev_ba, prev_ab = d_ba, d_ab
    tail = gqd_sequence(n_tail)
    tail_ba = gaussian_discord(canonical_cm(tail), "BA")
    tail_ab = gaussian_discord(canonical_cm(tail), "AB")
    ok = ok and tail_ba < 0.05 and tail_ab < 0.05
    return CheckResult(
        "discord_sequence",
        ok,
        f"D_BA({n_tail})={tail_ba:.3e} D_AB({n_tail})={tail_ab:.3e}",
    )


def check_epr_without_sns() -> CheckResult:
    """EPR steerable with an anisotropic gap: one Reid variance above 1/2."""
    cf = CanonicalForm(0.9, 0.9, 0.55, -0.7)
    cm = canonical_cm(cf)
    epr_holds, product = epr_steerable(cf)
    sns_holds, sns_value = sns(cf)
    wns_holds, _ = wns(cf)
    vx, vp = reid_variances(cf)
    wig_holds, trace = wigner_remote(cm)
    passed = (
        cf.physical
        and epr_holds
        and not sns_holds
        and wns_holds
        and max(vx, vp) > 0.5 > min(vx, vp)
        and wig_holds
        and abs(trace - (vx + vp)) <= 1e-12
    )
    return CheckResult(
        "epr_without_sns",
        passed,
        f"epr={product:.6f} sns={sns_value:.6f} reid=({vx:.6f},{vp:.6f}) "
        f"wigner_trace={trace:.6f}",
    )


def run_all() -> list[CheckResult]:
    """Run the five checks in a fixed order."""
    return [
        check_separable_wns(),
        check_separable_by_sign(),
        check_swns_state(),
        check_discord_sequence(),
        check_epr_without_sns(),
    ]
