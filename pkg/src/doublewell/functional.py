"""Quadrature of the reduced functional K, its derivative and Lp norms.

All integrals use composite Simpson on the shared uniform grid.  Because
``H`` is a quartic, the expansion of ``K(v + h)`` around ``v`` terminates:

    K(v+h) = K(v) + T_v(h) + int g2 h**2 + int g3 h**3 + int g4 h**4

with ``g2 = theta (3/2 v**2 - lam)/2``, ``g3 = theta v / 2``, ``g4 = theta / 8``
and ``T_v(h) = int theta (v (v**2/2 - lam) - F) h``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .problem import GridFunction, Problem, eval_H, simpson

__all__ = [
    "TaylorTerms",
    "weight_on",
    "taylor_coefficients",
    "eval_K",
    "eval_gateaux",
    "gateaux_density",
    "taylor_decompose",
    "lp_norm",
    "parse_p",
]


def weight_on(problem: Problem, g: GridFunction) -> np.ndarray:
    """``theta`` sampled on the grid of ``g``."""
    return np.asarray(problem.theta(g.x), dtype=float)


def parse_p(p) -> float:
    """Normalise an Lp exponent; ``"inf"``/``math.inf`` mean the sup norm."""
    if isinstance(p, str):
        p = math.inf if p.strip().lower() in ("inf", "infinity", "oo") else float(p)
    p = float(p)
    if math.isnan(p) or p < 1:
        raise DomainError(f"Lp exponent must be >= 1 or inf, got {p!r}")
    return p


def eval_K(problem: Problem, F: GridFunction, v: GridFunction) -> float:
    """``K(v) = int theta (H(v) - F v)``."""
    F.check_grid(v)
    theta = weight_on(problem, v)
    return simpson(theta * (eval_H(v.values, problem.lam) - F.values * v.values), v.spacing)


def gateaux_density(problem: Problem, F: GridFunction, v: GridFunction) -> np.ndarray:
    """Pointwise integrand ``theta (v (v**2/2 - lam) - F)`` of ``T_v``."""
    F.check_grid(v)
    vv = v.values
    return weight_on(problem, v) * (vv * (0.5 * vv * vv - problem.lam) - F.values)


def eval_gateaux(problem: Problem, F: GridFunction, v: GridFunction, h: GridFunction) -> float:
    """Directional derivative ``T_v(h)``."""
    v.check_grid(h)
    return simpson(gateaux_density(problem, F, v) * h.values, v.spacing)


def taylor_coefficients(problem: Problem, v: GridFunction) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Coefficient functions ``(g2, g3, g4)`` of the quartic expansion at ``v``."""
    theta = weight_on(problem, v)
    vv = v.values
    return 0.5 * theta * (1.5 * vv * vv - problem.lam), 0.5 * theta * vv, 0.125 * theta


@dataclass(frozen=True)
class TaylorTerms:
    k_at_v: float
    t1: float
    t2: float
    t3: float
    t4: float
    k_at_v_plus_h: float

    @property
    def remainder(self) -> float:
        """``K(v+h) - K(v) - T_v(h)`` assembled from the higher-order terms."""
        return self.t2 + self.t3 + self.t4

    @property
    def residual(self) -> float:
        """Defect of the exact identity; quadrature rounding only."""
        return self.k_at_v_plus_h - (self.k_at_v + self.t1 + self.t2 + self.t3 + self.t4)


def taylor_decompose(problem: Problem, F: GridFunction, v: GridFunction, h: GridFunction) -> TaylorTerms:
    F.check_grid(v, h)
    g2, g3, g4 = taylor_coefficients(problem, v)
    hh = h.values
    dx = v.spacing
    return TaylorTerms(
        k_at_v=eval_K(problem, F, v),
        t1=eval_gateaux(problem, F, v, h),
        t2=simpson(g2 * hh**2, dx),
        t3=simpson(g3 * hh**3, dx),
        t4=simpson(g4 * hh**4, dx),
        k_at_v_plus_h=eval_K(problem, F, v + h),
    )


def lp_norm(h: GridFunction, p) -> float:
    """``(int |h|**p)**(1/p)`` by Simpson, or the node maximum for ``p = inf``."""
    p = parse_p(p)
    if math.isinf(p):
        return h.sup
    return simpson(np.abs(h.values) ** p, h.spacing) ** (1.0 / p)
