"""End-to-end verdict on the three claimed extrema.

The claimed profiles are ``u_j' = v_j`` with ``v_j`` from
:func:`doublewell.probe.dual_candidates`; ``u1`` and ``u2`` are claimed
local minimisers and ``u3`` a local maximiser of ``J`` under the
constraint ``u'(a) = u'(b) = 0``.  A claim holds here when the profile
satisfies the constraint, coincides with the unique stationary profile
``vbar`` and that profile is certified to be of the claimed type.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from .functional import eval_gateaux, eval_K
from .probe import (
    c1_norm,
    dual_candidates,
    integrate_profile,
    local_max_certificate,
    lp_nonextremum_probe,
    stationary_point,
    sup_norm_probe,
)
from .problem import DEFAULT_NODES, Problem, build_potential, validate_forcing

__all__ = ["CLAIMS", "stationarity_residuals", "assess_problem"]

CLAIMS = {"minimizer_u1": ("v1", "minimizer"), "minimizer_u2": ("v2", "minimizer"),
          "maximizer_u3": ("v3", "maximizer")}


def stationarity_residuals(problem: Problem, F, vbar, count: int = 20) -> np.ndarray:
    """``T_vbar(h_k)`` for the first ``count`` sine modes vanishing at the ends."""
    x = vbar.x
    t = (x - x[0]) / (x[-1] - x[0])
    out = []
    for k in range(1, count + 1):
        h = np.sin(k * math.pi * t)
        h[0] = h[-1] = 0.0
        out.append(eval_gateaux(problem, F, vbar, vbar.like(h)))
    return np.asarray(out)


def assess_problem(
    problem: Problem,
    m: int = DEFAULT_NODES,
    trials: int = 1000,
    seed: int = 0,
    p: float = 2.0,
    gamma: float | None = None,
    tol: float = 1e-8,
) -> dict[str, Any]:
    """Run validation, stationary solve, certificate, probes and candidates.

    ``tol`` is the relative stationarity tolerance, scaled by
    ``max theta * ||F||_inf * (b - a)``.
    """
    validation = validate_forcing(problem, m)
    F = build_potential(problem, m)
    vbar = stationary_point(problem, F)
    ubar = integrate_profile(vbar, 0.0)
    cert = local_max_certificate(problem, vbar)
    residuals = stationarity_residuals(problem, F, vbar)
    scale = float(np.max(problem.theta(F.x))) * F.sup * (problem.b - problem.a)
    stationary_ok = bool(np.max(np.abs(residuals)) <= tol * max(scale, 1e-300))
    sup = sup_norm_probe(problem, F, vbar, trials, seed, cert)
    lp = lp_nonextremum_probe(problem, F, vbar, p, gamma=gamma, certificate=cert)
    candidates = dual_candidates(problem, F).table(vbar)

    assertions = {}
    for claim, (name, kind) in CLAIMS.items():
        info = candidates[name]
        if not info["in_c0"]:
            holds, reason = False, "derivative does not vanish at the endpoints (constraint violated)"
        elif info["max_abs_diff_vbar"] > 1e-9:
            holds, reason = False, "not the unique stationary profile"
        elif kind == "maximizer" and sup.passed:
            holds, reason = True, "coincides with the certified sup-norm local maximizer"
        elif kind == "minimizer" and sup.passed:
            holds, reason = False, "the unique stationary profile is a strict local maximizer"
        else:
            holds, reason = False, "sup-norm certificate failed"
        assertions[claim] = {"holds": holds, "reason": reason}

    return {
        "problem": {"a": problem.a, "b": problem.b, "lambda": problem.lam, "nu": problem.nu,
                    "mu": problem.mu, "m": m, "name": problem.name},
        "validation": validation.as_dict(),
        "stationary": {
            "K_vbar": eval_K(problem, F, vbar),
            "vbar_sup": vbar.sup,
            "vbar_in_c0": vbar.in_c0,
            "stationarity_max_abs": float(np.max(np.abs(residuals))),
            "stationarity_tolerance": tol * scale,
            "stationary_ok": stationary_ok,
            "ubar_c1_norm": c1_norm(ubar, vbar),
        },
        "certificate": {"gamma_bar": cert.gamma_bar, "eta": cert.eta, "epsilon": cert.epsilon},
        "probes": {
            "sup_max": {"verdict": sup.verdict, **{k: sup.details[k] for k in ("negative", "total")}},
            "lp_nonextremum": {"verdict": lp.verdict, "p": lp.parameters["p"],
                               "gamma": lp.parameters["gamma"], "n_star": lp.details["n_star"],
                               "maximizer_p_ge_4": "inconclusive"},
        },
        "candidates": candidates,
        "assertions": assertions,
        "assertions_true": [c for c, v in assertions.items() if v["holds"]],
        "assertions_false": [c for c, v in assertions.items() if not v["holds"]],
    }
