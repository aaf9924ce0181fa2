"""Branch-resolved roots of the two cubics behind the double-well problem.

``G(z) = z (z**2/2 - lam)`` is the stationarity cubic of the reduced
functional and ``E(y) = 2 y**2 (lam + y/nu)`` is the dual cubic used to
state the competing candidate profiles.  For ``|A| < kappa**3`` with
``kappa = sqrt(2 lam / 3)`` the equation ``G(z) = A`` has three real roots,
one on each monotone piece of ``G``:

    z1 in (-2 kappa, -kappa),  z2 in (-kappa, kappa),  z3 in (kappa, 2 kappa)

The roots are taken from the trigonometric form of the depressed cubic, in
which the angle index *is* the branch index, and then polished by Newton.
Roots of ``E(y) = A**2`` are obtained through ``y = A / z``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "BranchTriple",
    "EBranchTriple",
    "kappa",
    "g_poly",
    "g_prime",
    "e_poly",
    "g_roots",
    "g_branch",
    "solve_g",
    "e_roots",
    "solve_e",
    "correspondence_check",
    "residual_tolerance",
]

# |A| / kappa**3 above which the double-root conditioning takes over
NEAR_MERGE = 0.99


def kappa(lam: float) -> float:
    """Location ``sqrt(2 lam / 3)`` of the critical points of ``G``."""
    if not lam > 0:
        raise DomainError(f"lambda must be positive, got {lam!r}")
    return math.sqrt(2.0 * lam / 3.0)


def g_poly(z, lam):
    return z * (0.5 * z * z - lam)


def g_prime(z, lam):
    return 1.5 * z * z - lam


def e_poly(y, lam, nu=1.0):
    return 2.0 * y * y * (lam + y / nu)


def residual_tolerance(a_value: float, lam: float) -> float:
    """Absolute tolerance on ``|G(z) - A|`` used by the invariants."""
    k3 = kappa(lam) ** 3
    if abs(a_value) > NEAR_MERGE * k3:
        return 1e-8 * max(1.0, k3)
    return 1e-12 * max(1.0, k3)


def _newton_polish(z, a, lam, steps=2):
    for _ in range(steps):
        d = g_prime(z, lam)
        r = g_poly(z, lam) - a
        safe = np.abs(d) > 1e-300
        step = np.where(safe, r / np.where(safe, d, 1.0), 0.0)
        trial = z - step
        better = np.abs(g_poly(trial, lam) - a) <= np.abs(r)
        z = np.where(better, trial, z)
    return z


def g_roots(a_values, lam: float) -> np.ndarray:
    """Roots of ``G(z) = A``, vectorised over ``A``.

    Returns an array of shape ``np.shape(a_values) + (3,)`` whose last axis
    holds ``(z1, z2, z3)`` in increasing order.
    """
    k = kappa(lam)
    k3 = k**3
    a = np.asarray(a_values, dtype=float)
    if not np.all(np.isfinite(a)):
        raise DomainError("right-hand side contains non-finite values")
    if np.any(np.abs(a) >= k3):
        worst = float(np.max(np.abs(a)))
        raise DomainError(
            f"|A| = {worst:.17g} must be below kappa**3 = {k3:.17g} for three real roots"
        )
    phi = np.arccos(np.clip(a / k3, -1.0, 1.0))
    z3 = 2.0 * k * np.cos(phi / 3.0)
    z2 = 2.0 * k * np.cos(phi / 3.0 - 2.0 * math.pi / 3.0)
    z1 = 2.0 * k * np.cos(phi / 3.0 - 4.0 * math.pi / 3.0)
    roots = np.stack([z1, z2, z3], axis=-1)
    roots = _newton_polish(roots, a[..., None], lam)
    # exact values at A = 0, where z2 would otherwise carry ~1e-16 noise
    zero = a == 0.0
    if np.any(zero):
        w = math.sqrt(2.0 * lam)
        roots[zero] = (-w, 0.0, w)
    return roots


def g_branch(a_values, lam: float, branch: int) -> np.ndarray:
    """Single branch ``z_branch(A)`` for ``branch`` in {1, 2, 3}."""
    if branch not in (1, 2, 3):
        raise DomainError(f"branch must be 1, 2 or 3, got {branch!r}")
    return g_roots(a_values, lam)[..., branch - 1]


@dataclass(frozen=True)
class BranchTriple:
    """The three ordered real roots of ``G(z) = A``."""

    a_value: float
    z1: float
    z2: float
    z3: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.z1, self.z2, self.z3)


@dataclass(frozen=True)
class EBranchTriple:
    """The three real roots ``e3 <= e2 <= e1`` of ``E(y) = A2``."""

    a2_value: float
    e1: float
    e2: float
    e3: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.e1, self.e2, self.e3)


def solve_g(a_value: float, lam: float) -> BranchTriple:
    """Three real roots of ``z (z**2/2 - lam) = A``; needs ``|A| < kappa**3``."""
    z1, z2, z3 = (float(t) for t in g_roots(float(a_value), lam))
    return BranchTriple(float(a_value), z1, z2, z3)


def _e_limit(lam, nu):
    return 8.0 * lam**3 * nu**2 / 27.0


def e_roots(a2_values, lam: float, nu: float = 1.0) -> np.ndarray:
    """Roots of ``E(y) = A2`` ordered as ``(e1, e2, e3)`` with ``e1 >= e2 >= e3``.

    With ``A = sqrt(A2)`` and ``z`` a root of ``G(z) = A / nu``, ``y = A / z``
    solves ``E(y) = A2``; the map sends ``z3 -> e1``, ``z1 -> e2`` and
    ``z2 -> e3``.  At ``A2 = 0`` the cubic factors as ``2 y**2 (lam + y/nu)``.
    """
    if not (lam > 0 and nu > 0):
        raise DomainError("lambda and nu must be positive")
    a2 = np.asarray(a2_values, dtype=float)
    limit = _e_limit(lam, nu)
    if not np.all(np.isfinite(a2)) or np.any(a2 < 0.0) or np.any(a2 >= limit):
        raise DomainError(f"A2 must lie in [0, {limit:.17g})")
    a = np.sqrt(np.atleast_1d(a2))
    z = g_roots(a / nu, lam)
    out = np.empty(a.shape + (3,))
    pos = a > 0.0
    out[pos] = a[pos, None] / z[pos][:, [2, 0, 1]]
    out[~pos] = (0.0, 0.0, -nu * lam)
    return out.reshape(a2.shape + (3,))


def solve_e(a2_value: float, lam: float, nu: float = 1.0) -> EBranchTriple:
    """Three real roots of ``2 y**2 (lam + y/nu) = A2`` for ``0 <= A2 < 8 lam**3 nu**2 / 27``."""
    e1, e2, e3 = (float(t) for t in e_roots(float(a2_value), lam, nu))
    return EBranchTriple(float(a2_value), e1, e2, e3)


def correspondence_check(a_value: float, lam: float, nu: float = 1.0) -> tuple[float, float, float]:
    """Residuals of the branch correspondence between the two cubics.

    For ``0 < A < nu kappa**3`` the roots of ``G(z) = A/nu`` and of
    ``E(y) = A**2`` pair up as ``z1*e2 = z2*e3 = z3*e1 = A``.  Returns
    ``(|z1 e2 - A|, |z2 e3 - A|, |z3 e1 - A|)``.

    The E roots here come from :func:`e_roots` fed with ``A**2``, which
    goes through an independent square root; for ``nu == 1`` this is
    exactly the pairing ``z_j(A) = A / E_sigma(j)^{-1}(A**2)``.
    """
    a = float(a_value)
    if not a > 0:
        raise DomainError("the correspondence is stated for A > 0")
    t = solve_g(a / nu, lam)
    e = solve_e(a * a, lam, nu)
    return (abs(t.z1 * e.e2 - a), abs(t.z2 * e.e3 - a), abs(t.z3 * e.e1 - a))
