import math

import numpy as np
import pytest
from scipy.integrate import quad

from doublewell import build_potential, sine_example
from doublewell.errors import DomainError
from doublewell.functional import eval_K
from doublewell.probe import (
    SpikeFamily,
    frechet_probe,
    dual_candidates,
    integrate_profile,
    local_max_certificate,
    lp_nonextremum_probe,
    place_spike,
    spike_terms,
    spike_values,
    stationary_point,
    sup_norm_probe,
)

from conftest import CERT_EPS, CERT_ETA, CERT_GAMMA, VBAR_AT_PI


def test_vbar_matches_bisection(example_vbar):
    assert example_vbar.values[1024] == pytest.approx(VBAR_AT_PI, abs=1e-12)
    assert example_vbar.in_c0


def test_certificate(example, example_vbar):
    c = local_max_certificate(example, example_vbar)
    assert c.gamma_bar == pytest.approx(CERT_GAMMA, abs=1e-12)
    assert c.eta == pytest.approx(CERT_ETA, abs=1e-11)
    assert c.epsilon == pytest.approx(CERT_EPS, abs=1e-11)
    assert c.bound(c.epsilon) == pytest.approx(0.0, abs=1e-12)
    assert c.bound(0.99 * c.epsilon) < 0


def test_primitive_of_vbar(example_vbar):
    u = integrate_profile(example_vbar, 1.5)
    assert u.values[0] == 1.5
    assert u.values[-1] - 1.5 == pytest.approx(example_vbar.integral(), abs=1e-12)
    # vbar <= 0 everywhere, so the primitive decreases
    assert np.all(np.diff(u.values) <= 1e-15)


def test_sup_probe_all_negative(example, example_F, example_vbar):
    rep = sup_norm_probe(example, example_F, example_vbar, trials=200, seed=3)
    assert rep.passed and rep.details["negative"] == 201
    assert all(s.value_2 < 0 and s.x_or_n < CERT_EPS for s in rep.samples)


def test_sup_probe_reproducible(example, example_F, example_vbar):
    a = sup_norm_probe(example, example_F, example_vbar, trials=20, seed=11).to_json()
    b = sup_norm_probe(example, example_F, example_vbar, trials=20, seed=11).to_json()
    assert a == b


@pytest.mark.parametrize("p", [1.0, 2.0, 3.0, math.inf])
def test_spike_moments_against_quad(p):
    fam = SpikeFamily(p, 0.6, 7.0, 0.5)
    for s in (1, 2, 3, 4):
        ref, _ = quad(lambda t: spike_values(fam, t) ** s, fam.x0, fam.x0 + fam.width, points=[fam.center])
        assert fam.power_integral(s) == pytest.approx(ref, rel=1e-12)


def test_spike_norm_closed_form():
    fam = SpikeFamily(2.0, 0.9, 10.0)
    assert fam.norm() == pytest.approx(math.sqrt(2 / 3) * 10 ** -0.05, rel=1e-15)


def test_spike_terms_match_grid_quadrature(example, example_F, example_vbar):
    fam = place_spike(example_vbar, 2.0, 0.9, 4.0)
    st = spike_terms(example, example_F, example_vbar, fam)
    h = example_vbar.like(spike_values(fam, example_vbar.x))
    exact = eval_K(example, example_F, example_vbar + h) - eval_K(example, example_F, example_vbar)
    assert abs(st.delta_k - exact) <= st.delta_k_err


def test_spike_family_validation():
    with pytest.raises(DomainError):
        SpikeFamily(2.0, 1.0, 10.0)
    with pytest.raises(DomainError):
        SpikeFamily(2.0, 0.5, 1.0, 0.5, (0.0, 2.0))


def test_lp_probe_p2(example, example_F, example_vbar):
    rep = lp_nonextremum_probe(example, example_F, example_vbar, 2.0, gamma=0.9)
    assert rep.passed
    assert rep.details["n_star"] == 100.0
    spikes = rep.series("lp_not_max")
    assert spikes[0].value_1 == pytest.approx(math.sqrt(2 / 3) * 10 ** -0.05, rel=1e-15)
    with pytest.raises(DomainError):
        lp_nonextremum_probe(example, example_F, example_vbar, 4.0)


@pytest.mark.parametrize("p", [1.0, 2.0, 3.0])
def test_frechet_slope(example, example_F, example_vbar, p):
    rep = frechet_probe(example, example_F, example_vbar, p)
    assert rep.passed
    assert rep.fitted_slope == pytest.approx(rep.expected_slope, rel=0.10)


@pytest.mark.parametrize("p", [4.0, 8.0, math.inf])
def test_frechet_decay(example, example_F, example_vbar, p):
    rep = frechet_probe(example, example_F, example_vbar, p)
    assert rep.passed and rep.fitted_slope < 0
    bounds = [s.bound for s in rep.samples]
    assert all(b1 > b2 for b1, b2 in zip(bounds, bounds[1:]))


@pytest.mark.parametrize("s, p", [(2, 1.0), (3, 2.0), (4, 2.0)])
def test_moment_rates(example, example_F, example_vbar, s, p):
    rep = frechet_probe(example, example_F, example_vbar, p, s=s)
    assert rep.passed
    assert rep.fitted_slope == pytest.approx(rep.expected_slope, rel=0.10)


@pytest.mark.parametrize("s, p", [(2, 2.0), (3, 4.0), (2, math.inf)])
def test_moment_decay_when_p_at_least_s(example, example_F, example_vbar, s, p):
    rep = frechet_probe(example, example_F, example_vbar, p, s=s, gamma=0.5)
    ratios = [x.value_2 for x in rep.samples]
    assert rep.passed and all(r1 > r2 for r1, r2 in zip(ratios, ratios[1:]))


def test_candidates(example, example_F, example_vbar):
    c = dual_candidates(example, example_F)
    w = math.sqrt(6.0)
    assert abs(c.v1.values[0] - w) < 1e-9 and abs(c.v2.values[0] + w) < 1e-9
    assert c.admissible == {"v1": False, "v2": False, "v3": True}
    assert np.max(np.abs(c.v3.values - example_vbar.values)) < 1e-12
    table = c.table(example_vbar)
    assert table["v3"]["max_abs_diff_vbar"] < 1e-12


def test_candidates_need_constant_sign():
    from doublewell import Problem, Profile

    p = Problem(0, 2 * math.pi, 3.0, Profile.constant(1.0, 0, 2 * math.pi),
                Profile.from_spec({"preset": "cosine", "amplitude": 0.5}, 0, 2 * math.pi))
    with pytest.raises(DomainError):
        dual_candidates(p, build_potential(p, 256))


def test_stationary_point_negative_load():
    p = sine_example(amplitude=0.5)
    F = build_potential(p, 2048)
    v = stationary_point(p, F)
    assert v.values[1024] == pytest.approx(-VBAR_AT_PI, abs=1e-12)
