import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from doublewell.cubic import (
    correspondence_check,
    e_poly,
    e_roots,
    g_branch,
    g_poly,
    g_roots,
    kappa,
    residual_tolerance,
    solve_e,
    solve_g,
)
from doublewell.errors import DomainError

lams = st.sampled_from([0.5, 1.5, 3.0, 10.0])


def brackets(lam):
    k = kappa(lam)
    return [(-2 * k, -k), (-k, k), (k, 2 * k)]


@given(lam=lams, t=st.floats(-0.999, 0.999))
@settings(max_examples=300, deadline=None)
def test_roots_match_brentq_in_their_brackets(lam, t):
    A = t * kappa(lam) ** 3
    z = g_roots(A, lam)
    for zi, (lo, hi) in zip(z, brackets(lam)):
        ref = brentq(lambda s: g_poly(s, lam) - A, lo, hi, xtol=1e-15, rtol=1e-15)
        assert zi == pytest.approx(ref, abs=1e-9)
        assert lo <= zi <= hi


@given(lam=lams, t=st.floats(-0.999, 0.999))
@settings(max_examples=300, deadline=None)
def test_residual_below_tolerance(lam, t):
    A = t * kappa(lam) ** 3
    z = g_roots(A, lam)
    assert np.max(np.abs(g_poly(z, lam) - A)) < residual_tolerance(A, lam) + 1e-15


def test_zero_load_roots_exact():
    z = g_roots(0.0, 3.0)
    assert tuple(z) == (-math.sqrt(6.0), 0.0, math.sqrt(6.0))


def test_known_triples():
    assert solve_g(0.5, 1.5).as_tuple() == pytest.approx((-1.532088886, -0.347296355, 1.879385242), abs=1e-9)
    assert solve_e(0.25, 1.5).as_tuple() == pytest.approx((0.266044443, -0.326351822, -1.439692621), abs=1e-9)


def test_vectorised_shape_and_branch_selection():
    A = np.linspace(-1.9, 1.9, 11).reshape(11, 1)
    z = g_roots(A, 3.0)
    assert z.shape == (11, 1, 3)
    assert np.array_equal(g_branch(A, 3.0, 2), z[..., 1])


def test_g_outside_domain_raises():
    with pytest.raises(DomainError):
        g_roots(kappa(3.0) ** 3, 3.0)
    with pytest.raises(DomainError):
        kappa(0.0)


@given(lam=lams, nu=st.sampled_from([0.5, 1.0, 2.0]), t=st.floats(0.0, 0.999))
@settings(max_examples=200, deadline=None)
def test_e_roots_against_numpy_roots(lam, nu, t):
    A2 = t * 8 * lam**3 * nu**2 / 27
    e = e_roots(A2, lam, nu)
    assert e[0] >= e[1] >= e[2]
    if t > 1e-6:
        ref = np.sort(np.roots([2.0 / nu, 2.0 * lam, 0.0, -A2]).real)[::-1]
        assert np.allclose(e, ref, atol=1e-7 * max(1.0, nu * lam))
        assert np.max(np.abs(e_poly(e, lam, nu) - A2)) < 1e-9 * max(1.0, A2)


def test_e_outside_domain_raises():
    with pytest.raises(DomainError):
        e_roots(-1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        e_roots(8 / 27, 1.0, 1.0)


@given(lam=lams, nu=st.sampled_from([0.5, 1.0, 2.0]), t=st.floats(0.01, 0.99))
@settings(max_examples=200, deadline=None)
def test_correspondence(lam, nu, t):
    A = t * nu * kappa(lam) ** 3
    assert max(correspondence_check(A, lam, nu)) < 1e-10 * max(1.0, A)
