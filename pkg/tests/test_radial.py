import math

import numpy as np
import pytest

from doublewell.errors import DomainError
from doublewell.problem import Profile, validate_forcing
from doublewell.radial import (
    RadialProblem,
    build_radial_potential,
    direct_energy,
    eval_I,
    gamma_n,
    radial_candidates,
    radial_refutation,
)

from conftest import annulus, rel


def smooth_radial_profiles(count=10):
    """Pairs (upsilon, upsilon') with closed-form derivatives."""
    rng = np.random.default_rng(2024)
    out = []
    for _ in range(count):
        a, w, ph, b = rng.uniform(0.1, 1.0), rng.uniform(0.5, 3.0), rng.uniform(0, 6), rng.uniform(-0.5, 0.5)
        out.append((
            lambda r, a=a, w=w, ph=ph, b=b: a * np.sin(w * r + ph) + b * r * r,
            lambda r, a=a, w=w, ph=ph, b=b: a * w * np.cos(w * r + ph) + 2 * b * r,
        ))
    return out


def test_sphere_constants():
    assert gamma_n(2) == 2 * math.pi
    assert gamma_n(3) == 4 * math.pi
    assert gamma_n(1) == 2.0
    with pytest.raises(DomainError):
        gamma_n(0)


@pytest.mark.parametrize("n", [2, 3])
def test_potential_closed_form(n):
    rp = annulus(n)
    F = build_radial_potential(rp, 2048)
    r = F.x
    # theta F = -(r - 1)(r - 2) for both dimensions with this load
    assert np.max(np.abs(F.values * r ** (n - 1) + (r - 1) * (r - 2))) < 1e-12
    assert F.values[1024] == pytest.approx((0.25 / 1.5 ** (n - 1)), abs=1e-13)


@pytest.mark.parametrize("n", [2, 3])
def test_potential_ode_residual(n):
    rp = annulus(n)
    F = build_radial_potential(rp, 2048)
    r = F.x
    thetaF = r ** (n - 1) * F.values
    d = np.gradient(thetaF, F.spacing, edge_order=2)
    assert np.max(np.abs(d + r ** (n - 1) * rp.forcing(r))) < 1e-8


def test_validation_of_reduced_problem(annulus2):
    rep = validate_forcing(annulus2.reduced())
    assert rep.all_ok
    assert rep.l1_norm == pytest.approx(0.5, abs=1e-12)
    assert rep.l1_bound == pytest.approx(annulus2.l1_bound, rel=1e-12)


def test_I_of_zero_closed_form(annulus2):
    F = build_radial_potential(annulus2)
    zero = F.like(np.zeros(F.m + 1))
    # H(0) = lam**2 / 2 integrated over the annulus of area 3 pi
    assert eval_I(annulus2, zero) == pytest.approx(1.125 * 3 * math.pi, rel=1e-13)


@pytest.mark.parametrize("n", [2, 3])
def test_direct_quadrature_matches_reduction(n):
    rp = annulus(n)
    F = build_radial_potential(rp, 2048)
    worst = 0.0
    for up, dup in smooth_radial_profiles(10 if n == 2 else 3):
        # F vanishes at both radii, so I[u] depends on u only through v = u'
        direct = direct_energy(rp, up)
        worst = max(worst, rel(direct, eval_I(rp, F.like(dup(F.x)))))
    assert worst < 1e-8


def test_radial_candidates_conventions_agree(annulus2):
    a = radial_candidates(annulus2, 1024)
    b = radial_candidates(annulus2, 1024, convention="r^n")
    for g, h in zip((a.v1, a.v2, a.v3), (b.v1, b.v2, b.v3)):
        assert np.max(np.abs(g.values - h.values)) < 1e-12
    with pytest.raises(DomainError):
        radial_candidates(annulus2, 1024, convention="r")


@pytest.mark.parametrize("n", [2, 3])
def test_refutation_passes(n):
    rep = radial_refutation(annulus(n), 2048, trials=200, seed=5)
    assert rep.passed
    assert rep.details["gamma_n"] == gamma_n(n)


def test_radial_problem_validation():
    f = Profile.constant(0.0, 1, 2)
    with pytest.raises(DomainError):
        RadialProblem(2, 2.0, 1.0, 1.0, 1.0, f)
    with pytest.raises(DomainError):
        RadialProblem(2, 1.0, 2.0, 1.0, -1.0, f)


def test_oversized_load_rejected():
    f = Profile("polynomial", {"coeffs": [-30.0, 20.0], "power_shift": -1}, 1.0, 2.0)
    with pytest.raises(DomainError):
        build_radial_potential(RadialProblem(2, 1.0, 2.0, 1.5, 1.0, f))
