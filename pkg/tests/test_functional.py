import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doublewell.functional import eval_gateaux, eval_K, lp_norm, parse_p, taylor_decompose
from doublewell.errors import DomainError

from conftest import K_VBAR_QUAD


def test_K_of_zero_is_closed_form(example, example_F):
    zero = example_F.like(np.zeros(example_F.m + 1))
    assert eval_K(example, example_F, zero) == pytest.approx(0.5 * 9 * 2 * math.pi, rel=1e-14)


def test_K_at_vbar_matches_quad_oracle(example, example_F, example_vbar):
    assert eval_K(example, example_F, example_vbar) == pytest.approx(K_VBAR_QUAD, rel=1e-12)


def test_gateaux_is_derivative(example, example_F):
    x = example_F.x
    v = example_F.like(0.3 * np.sin(x))
    h = example_F.like(np.sin(2 * x) * x)
    T = eval_gateaux(example, example_F, v, h)
    errs = []
    for t in (1e-2, 5e-3):
        fd = (eval_K(example, example_F, v + h * t) - eval_K(example, example_F, v - h * t)) / (2 * t)
        errs.append(abs(fd - T))
    # central difference error is O(t**2)
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.05)


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_taylor_identity_is_exact(seed):
    from doublewell import build_potential, sine_example

    prob = sine_example()
    F = build_potential(prob, 512)
    rng = np.random.default_rng(seed)
    t = (F.x - F.x[0]) / (F.x[-1] - F.x[0])
    v = F.like(np.polynomial.chebyshev.chebval(2 * t - 1, rng.normal(size=5)))
    h = F.like(np.polynomial.chebyshev.chebval(2 * t - 1, rng.normal(size=5)))
    terms = taylor_decompose(prob, F, v, h)
    assert abs(terms.residual) < 1e-10 * max(1.0, abs(terms.k_at_v_plus_h))


def test_lp_norms_of_sine(example_F):
    h = example_F.like(np.sin(example_F.x))
    assert lp_norm(h, 2) == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    assert lp_norm(h, 1) == pytest.approx(4.0, rel=1e-10)
    assert lp_norm(h, "inf") == pytest.approx(1.0, abs=1e-6)


def test_parse_p():
    assert parse_p("inf") == math.inf and parse_p(3) == 3.0
    with pytest.raises(DomainError):
        parse_p(0.5)
