import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from conftest import random_physical_canonical, random_tmst
from cvsteer import (
    CanonicalForm,
    TmstSpec,
    canonical_cm,
    directionality,
    epr_steerable,
    gaussian_discord,
    gqd_sequence,
    invariants_of,
    negativity,
    ppt_symplectic_eigenvalue,
    reid_variances,
    sigma_photon_form,
    sigma_steerability,
    sns,
    sns_invariant,
    steering_report,
    swns_cm,
    tmst_cm,
    tmst_entangled,
    twb_cm,
    wigner_remote,
    wns,
    wns_invariant,
)

A3 = CanonicalForm(0.9, 0.9, 0.55, -0.7)


def test_sigma_steerability_values():
    assert_allclose(sigma_steerability(TmstSpec(0.4, 0.4, 1.2)), 2.222778866786203, rtol=1e-14)
    assert_allclose(sigma_steerability(TmstSpec(0.15, 0.15, 1.2)), 0.833542075044826, rtol=1e-14)
    # symmetric states steer equally in both directions
    s = TmstSpec(0.3, 0.3, 0.9)
    assert sigma_steerability(s, "BA") == sigma_steerability(s, "AB")
    # finite at the boundary purity
    assert math.isfinite(sigma_steerability(TmstSpec(0.0, 0.4, 1.2)))
    with pytest.raises(ValueError, match="direction"):
        sigma_steerability(s, "ba")


def test_sigma_directionality_is_purity_ordered():
    r = 0.5 * math.acosh(2.0)
    spec = TmstSpec(0.75, 0.25, r)
    assert_allclose(sigma_steerability(spec, "BA"), 1.25, rtol=1e-12)
    assert_allclose(sigma_steerability(spec, "AB"), 0.75, rtol=1e-12)


def test_photon_form_matches_purity_form():
    rng = np.random.default_rng(67)
    for spec in random_tmst(rng, 10_000, mu_lo=0.02):
        n_a = 0.5 * (1.0 / spec.muA - 1.0)
        n_b = 0.5 * (1.0 / spec.muB - 1.0)
        n_s = math.sinh(spec.r) ** 2
        s = sigma_steerability(spec)
        if abs(s - 1.0) < 1e-10:
            continue
        assert sigma_photon_form(n_a, n_b, n_s) == (s > 1.0)


def test_photon_form_validation():
    with pytest.raises(ValueError, match="n_a"):
        sigma_photon_form(-0.1, 0.0, 1.0)
    with pytest.raises(ValueError, match="n_s"):
        sigma_photon_form(0.1, 0.0, math.inf)


def test_tmst_entangled_windows():
    # symmetric purity mu: separable below cosh(2r) = (1 + mu^2)/(2 mu),
    # entangled above; steerable only above cosh(2r) = 1/mu
    mu = 0.4
    lo, hi = (1.0 + mu * mu) / (2.0 * mu), 1.0 / mu

    def spec_of(ch):
        return TmstSpec(mu, mu, 0.5 * math.acosh(ch))

    assert not tmst_entangled(spec_of(lo - 0.05))
    mid = spec_of(0.5 * (lo + hi))
    assert tmst_entangled(mid)
    assert sigma_steerability(mid) < 1.0
    above = spec_of(hi + 0.1)
    assert tmst_entangled(above)
    assert sigma_steerability(above) > 1.0
    # boundary purity: entangled iff cosh(2r) > 1/muA
    assert tmst_entangled(TmstSpec(0.8, 0.0, 0.5 * math.acosh(1.3)))
    assert not tmst_entangled(TmstSpec(0.8, 0.0, 0.5 * math.acosh(1.2)))
    assert not tmst_entangled(TmstSpec(1.0, 1.0, 0.0))


def test_negativity_values():
    assert abs(negativity(twb_cm(1.2)) - 2.4) <= 1e-12
    assert negativity(canonical_cm(1.3, 0.8, 0.0, 0.0)) == 0.0
    assert negativity(canonical_cm(gqd_sequence(3))) == 0.0


def test_wns_sns_examples():
    cf = CanonicalForm(13.9, 13.9, 4.6, -13.7)
    held, value = wns(cf)
    assert held and abs(value - 0.3971223021582766) < 1e-12
    held, value = sns(cf)
    assert not held
    assert_allclose(value, 13.9 - 4.6**2 / 13.9, rtol=1e-12)

    held, value = wns(CanonicalForm(1.8, 1.8, 0.4, 1.6))
    assert held
    assert_allclose(value, 0.68 / 1.8, rtol=1e-12)

    # the weak value never exceeds the strong value
    rng = np.random.default_rng(71)
    for form in random_physical_canonical(rng, 500):
        cf = CanonicalForm(*form)
        assert wns(cf)[1] <= sns(cf)[1] + 1e-12


def test_wns_direction_swap():
    cf = CanonicalForm(0.6, 3.0, 1.0, -0.5)
    assert_allclose(wns(cf, "BA")[1], 0.6 - 1.0 / 3.0, rtol=1e-12)
    assert_allclose(wns(cf, "AB")[1], 3.0 - 1.0 / 0.6, rtol=1e-12)


def test_invariant_route_matches_canonical_route():
    examples = [
        CanonicalForm(13.9, 13.9, 4.6, -13.7),
        CanonicalForm(1.8, 1.8, 0.4, 1.6),
        A3,
        gqd_sequence(3),
    ]
    rng = np.random.default_rng(73)
    examples += [CanonicalForm(*f) for f in random_physical_canonical(rng, 300)]
    for cf in examples:
        inv = invariants_of(tuple(cf))
        for direction in ("BA", "AB"):
            held_c, val_c = wns(cf, direction)
            held_i, val_i = wns_invariant(inv, direction)
            assert_allclose(val_i, val_c, rtol=1e-8, atol=1e-10)
            if abs(val_c - 0.5) > 1e-8:
                assert held_i == held_c
            held_c, val_c = sns(cf, direction)
            held_i, val_i = sns_invariant(inv, direction)
            assert_allclose(val_i, val_c, rtol=1e-8, atol=1e-10)
            if abs(val_c - 0.5) > 1e-8:
                assert held_i == held_c


def test_uncorrelated_state_is_never_conditionally_nonclassical():
    cf = CanonicalForm(0.9, 1.4, 0.0, 0.0)
    assert not wns(cf)[0]
    assert not sns(cf)[0]
    assert wns(cf)[1] == 0.9


def test_reid_and_epr_values():
    assert reid_variances(A3) == (0.9 - 0.55**2 / 0.9, 0.9 - 0.7**2 / 0.9)
    assert_allclose(reid_variances(A3), (0.5638888888888889, 0.3555555555555556), rtol=1e-12)
    held, product = epr_steerable(A3)
    assert held
    assert_allclose(product, 0.20049382716049385, rtol=1e-12)
    vx, vp = reid_variances(A3, "AB")
    assert_allclose((vx, vp), reid_variances(A3, "BA"), rtol=1e-12)  # symmetric state


def test_wigner_remote_trace():
    cm = canonical_cm(0.9, 0.9, 0.55, -0.7)
    held, trace = wigner_remote(cm)
    assert held
    assert_allclose(trace, 0.9194444444444445, rtol=1e-12)
    assert_allclose(trace, 2.0 * 0.9 - (0.55**2 + 0.7**2) / 0.9, rtol=1e-12)
    # AB conditions the other block
    asym = canonical_cm(0.6, 3.0, 1.0, -0.5)
    assert_allclose(wigner_remote(asym, "BA")[1], 2.0 * 0.6 - 1.25 / 3.0, rtol=1e-12)
    assert_allclose(wigner_remote(asym, "AB")[1], 2.0 * 3.0 - 1.25 / 0.6, rtol=1e-12)


def test_directionality_classification():
    r2 = 0.5 * math.acosh(2.0)
    assert directionality(TmstSpec(0.75, 0.25, r2)) == "one_way_BA"
    assert directionality(TmstSpec(0.25, 0.75, r2)) == "one_way_AB"
    assert directionality(TmstSpec(1.0, 1.0, 1.2)) == "two_way"
    assert directionality(TmstSpec(0.4, 0.4, 0.0)) == "none"


def test_one_way_window_midpoints():
    rng = np.random.default_rng(79)
    n = 0
    while n < 100:
        mu_b = float(rng.uniform(0.05, 0.9))
        mu_a = float(rng.uniform(mu_b + 0.05, 1.0)) if mu_b + 0.05 < 1.0 else 1.0
        lo = (2.0 - mu_a + mu_b) / (mu_a + mu_b)
        hi = (2.0 + mu_a - mu_b) / (mu_a + mu_b)
        if lo >= hi or lo < 1.0:
            continue
        spec = TmstSpec(mu_a, mu_b, 0.5 * math.acosh(0.5 * (lo + hi)))
        assert directionality(spec) == "one_way_BA"
        assert tmst_entangled(spec)
        n += 1


def test_discord_values():
    cm3 = canonical_cm(gqd_sequence(3))
    assert_allclose(gaussian_discord(cm3, "BA"), 0.028463551922406627, rtol=1e-9)
    assert_allclose(gaussian_discord(cm3, "AB"), 0.1433029813285409, rtol=1e-9)
    cm = tmst_cm(TmstSpec(0.4, 0.4, 1.2))
    assert_allclose(gaussian_discord(cm, "BA"), 1.0440634286486583, rtol=1e-9)
    assert_allclose(gaussian_discord(cm, "AB"), gaussian_discord(cm, "BA"), rtol=1e-9)
    sw = swns_cm(1.0 / 32.0, 0.25)
    assert_allclose(gaussian_discord(sw, "BA"), 0.05284635631159085, rtol=1e-9)
    assert gaussian_discord(canonical_cm(1.3, 0.8, 0.0, 0.0), "BA") == 0.0
    assert gaussian_discord(canonical_cm(1.3, 0.8, 0.0, 0.0), "AB") == 0.0


def test_discord_nonnegative_and_positive_with_correlations():
    rng = np.random.default_rng(83)
    for form in random_physical_canonical(rng, 300):
        cm = canonical_cm(*form)
        d = gaussian_discord(cm)
        assert d >= -1e-10
        if max(abs(form[2]), abs(form[3])) > 1e-3:
            assert d > 0.0


def test_asymmetry_follows_local_purities():
    # the direction that measures the less pure mode has the smaller weak
    # value, equivalently I1 < I2 makes B -> A the easier direction
    rng = np.random.default_rng(89)
    checked = 0
    for form in random_physical_canonical(rng, 1000):
        a, b, c1, c2 = form
        if abs(a - b) < 1e-6:
            continue
        cf = CanonicalForm(a, b, c1, c2)
        inv = invariants_of(form)
        assert (wns(cf, "BA")[1] < wns(cf, "AB")[1]) == (inv.I1 < inv.I2)
        checked += 1
    assert checked > 800


def test_tmst_criteria_collapse_to_sigma():
    rng = np.random.default_rng(97)
    for spec in random_tmst(rng, 500):
        s = sigma_steerability(spec)
        if abs(s - 1.0) < 1e-12 or spec.muA == 0.0 or spec.muB == 0.0:
            continue
        a, b, c = spec.abc()
        cf = CanonicalForm(a, b, c, -c)
        steer = s > 1.0
        assert wns(cf)[0] == steer
        assert sns(cf)[0] == steer
        assert epr_steerable(cf)[0] == steer
        if steer:
            assert tmst_entangled(spec)
        assert_allclose(wns(cf)[1], 0.5 / s, rtol=1e-10)


def test_separable_yet_weakly_steerable_family():
    for n in (3, 7, 20):
        cf = gqd_sequence(n)
        cm = canonical_cm(cf)
        assert ppt_symplectic_eigenvalue(cm) >= 0.5 - 1e-12
        assert negativity(cm) == 0.0
        held, value = wns(cf)
        assert held
        assert_allclose(value, n / (2.0 * n + 1.0), rtol=1e-10)
        assert not epr_steerable(cf)[0]


def test_steering_report_fields():
    spec = TmstSpec(0.4, 0.4, 1.2)
    cm = tmst_cm(spec)
    rep = steering_report(cm, tmst=spec)
    assert rep.direction == "BA"
    assert_allclose(rep.sigma_steer, 2.222778866786203, rtol=1e-12)
    assert rep.wns and rep.sns and rep.epr
    assert_allclose(rep.wns_value, 0.5 / rep.sigma_steer, rtol=1e-10)
    assert_allclose(rep.wns_margin, 0.5 - rep.wns_value, rtol=1e-12)
    assert_allclose(rep.negativity, negativity(cm), rtol=1e-12)
    assert_allclose(rep.discord_BA, 1.0440634286486583, rtol=1e-9)

    bare = steering_report(cm)
    assert bare.sigma_steer is None

    d = rep.to_dict()
    assert d["direction"] == "B_steers_A"
    assert set(d) == {
        "direction",
        "canonical",
        "invariants",
        "sigma_steer",
        "wns",
        "wns_margin",
        "sns",
        "sns_margin",
        "epr",
        "epr_product",
        "negativity",
        "reid_x",
        "reid_p",
        "wigner_remote",
        "wigner_remote_trace",
        "discord_BA",
        "discord_AB",
    }
    assert set(d["canonical"]) == {"a", "b", "c1", "c2"}
    assert set(d["invariants"]) == {"I1", "I2", "I3", "I4"}
    ab = steering_report(cm, direction="AB", tmst=spec)
    assert ab.to_dict()["direction"] == "A_steers_B"


def test_report_rejects_bad_direction():
    with pytest.raises(ValueError, match="direction"):
        steering_report(tmst_cm(TmstSpec(0.4, 0.4, 1.2)), direction="both")
