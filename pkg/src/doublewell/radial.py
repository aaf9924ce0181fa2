"""Radially symmetric problem on an annulus ``R2 < |x| < R1`` in R^n.

For ``u(x) = upsilon(|x|)`` the energy

    I[u] = int_Omega nu/2 (|grad u|**2/2 - lam)**2 - f(|x|) u(x) dx

reduces to ``gamma_n * K(v)`` with ``v = upsilon'``, where ``K`` is the 1D
functional on ``[R2, R1]`` with weight ``theta = nu r**(n-1)``, forcing
``f / nu`` and ``gamma_n = 2 pi**(n/2) / Gamma(n/2)``.  The potential

    F(r) = -(1/r**(n-1)) int_R2^r f(rho) rho**(n-1) drho

is ``r`` times the one of the ``1/r**n`` convention; the reduced problem
works with ``F / nu``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .functional import eval_gateaux, eval_K
from .probe import (
    Candidates,
    ProbeReport,
    ProbeSample,
    dual_candidates,
    local_max_certificate,
    lp_nonextremum_probe,
    stationary_point,
    sup_norm_probe,
)
from .problem import (
    DEFAULT_NODES,
    GridFunction,
    Problem,
    Profile,
    build_potential,
    eval_H,
    validate_forcing,
)
from .cubic import e_roots

__all__ = [
    "RadialProblem",
    "gamma_n",
    "build_radial_potential",
    "eval_I",
    "direct_energy",
    "radial_candidates",
    "radial_refutation",
]


def gamma_n(n: int) -> float:
    """Area of the unit sphere in R^n, ``2 pi**(n/2) / Gamma(n/2)``."""
    if int(n) != n or n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)


@dataclass(frozen=True)
class RadialProblem:
    n: int
    r2: float
    r1: float
    lam: float
    nu: float
    forcing: Profile
    name: str = ""

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.n!r}")
        if not 0 < self.r2 < self.r1:
            raise DomainError(f"need 0 < R2 < R1, got R2={self.r2}, R1={self.r1}")
        if not (self.lam > 0 and self.nu > 0):
            raise DomainError("lambda and nu must be positive")

    def theta(self, r):
        return np.power(np.asarray(r, dtype=float), self.n - 1)

    def reduced(self) -> Problem:
        """Weighted 1D problem on ``[R2, R1]`` with ``nu`` folded into the weight."""
        a, b = self.r2, self.r1
        weight = Profile("polynomial", {"coeffs": [self.nu], "power_shift": self.n - 1}, a, b)
        return Problem(a, b, self.lam, weight, self.forcing.scaled(1.0 / self.nu), self.nu, self.name)

    @property
    def l1_bound(self) -> float:
        """``nu R2**(n-1) (2 lam / 3)**1.5``."""
        return self.nu * self.r2 ** (self.n - 1) * (2.0 * self.lam / 3.0) ** 1.5


def build_radial_potential(rp: RadialProblem, m: int = DEFAULT_NODES) -> GridFunction:
    """``F(r) = -(1/r**(n-1)) int_R2^r f rho**(n-1)``; requires ``|F| < nu kappa**3``."""
    red = rp.reduced()
    F = build_potential(red, m)
    if F.sup >= red.kappa3:
        raise DomainError(
            f"max |F|/nu = {F.sup:.6g} is not below (2 lam/3)**1.5 = {red.kappa3:.6g}"
        )
    return F * rp.nu


def eval_I(rp: RadialProblem, v: GridFunction) -> float:
    """``gamma_n K(v)`` for the derivative profile ``v = upsilon'`` sampled on a grid."""
    red = rp.reduced()
    if (v.a, v.b) != (red.a, red.b):
        raise DomainError("profile grid must span [R2, R1]")
    F = build_potential(red, v.m)
    return gamma_n(rp.n) * eval_K(red, F, v)


def _gauss(lo, hi, k):
    t, w = np.polynomial.legendre.leggauss(k)
    return 0.5 * (hi - lo) * t + 0.5 * (hi + lo), 0.5 * (hi - lo) * w


def direct_energy(
    rp: RadialProblem,
    upsilon: Callable,
    radial_nodes: int = 48,
    panels: int = 16,
    angular_nodes: int = 16,
    step: float = 4e-4,
) -> float:
    """Energy of ``u = upsilon(|x|)`` by tensor quadrature over the annulus itself.

    Cartesian points on a polar (n=2) or spherical (n=3) product rule;
    ``grad u`` by fourth-order central differences in each coordinate, and
    the load term uses ``f(|x|) u(x)`` directly.  Independent of the
    reduction, it serves as the oracle for ``eval_I``.
    """
    if rp.n not in (2, 3):
        raise DomainError("direct quadrature is available for n = 2 and n = 3 only")
    edges = np.linspace(rp.r2, rp.r1, panels + 1)
    rs, wr = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        r, w = _gauss(lo, hi, radial_nodes)
        rs.append(r)
        wr.append(w)
    r, wr = np.concatenate(rs), np.concatenate(wr)

    phi = 2.0 * math.pi * np.arange(angular_nodes) / angular_nodes
    wphi = np.full(angular_nodes, 2.0 * math.pi / angular_nodes)
    if rp.n == 2:
        R, P = np.meshgrid(r, phi, indexing="ij")
        W = np.outer(wr * r, wphi)
        pts = np.stack([R * np.cos(P), R * np.sin(P)], axis=-1)
    else:
        c, wc = np.polynomial.legendre.leggauss(angular_nodes)
        R, C, P = np.meshgrid(r, c, phi, indexing="ij")
        S = np.sqrt(1.0 - C * C)
        W = (wr * r * r)[:, None, None] * wc[None, :, None] * wphi[None, None, :]
        pts = np.stack([R * S * np.cos(P), R * S * np.sin(P), R * C], axis=-1)

    def u(q):
        return upsilon(np.linalg.norm(q, axis=-1))

    grad_sq = np.zeros(pts.shape[:-1])
    for d in range(rp.n):
        e = np.zeros(rp.n)
        e[d] = step
        du = (-u(pts + 2 * e) + 8 * u(pts + e) - 8 * u(pts - e) + u(pts - 2 * e)) / (12 * step)
        grad_sq += du * du
    radius = np.linalg.norm(pts, axis=-1)
    density = rp.nu * eval_H(np.sqrt(grad_sq), rp.lam) - rp.forcing(radius) * u(pts)
    return float(np.sum(W * density))


def radial_candidates(rp: RadialProblem, m: int = DEFAULT_NODES, convention: str = "r^(n-1)") -> Candidates:
    """Dual-cubic candidate derivative profiles on ``[R2, R1]``.

    ``convention="r^n"`` evaluates them literally with the ``1/r**n``
    potential ``F_n = F / r`` as ``F_n(r) r / E_j^{-1}(F_n(r)**2 r**2)``;
    ``"r^(n-1)"`` uses ``F / E_j^{-1}(F**2)``.  Both describe the same
    profiles.
    """
    red = rp.reduced()
    F_red = build_potential(red, m)
    if convention == "r^(n-1)":
        return dual_candidates(red, F_red)
    if convention != "r^n":
        raise DomainError(f"unknown potential convention {convention!r}")
    cand = dual_candidates(red, F_red)
    r = F_red.x
    Fn = rp.nu * F_red.values / r
    A = Fn[1:-1] * r[1:-1]
    e = e_roots(A * A, rp.lam, rp.nu)
    out = []
    for j, ref in enumerate((cand.v1, cand.v2, cand.v3)):
        vals = ref.values.copy()
        vals[1:-1] = A / e[:, j]
        out.append(ref.like(vals))
    return Candidates(*out, sign=cand.sign)


def _c0_basis(x, count):
    t = (x - x[0]) / (x[-1] - x[0])
    for k in range(1, count + 1):
        h = np.sin(k * math.pi * t)
        h[0] = h[-1] = 0.0
        yield h


def radial_refutation(
    rp: RadialProblem,
    m: int = DEFAULT_NODES,
    trials: int = 1000,
    seed: int = 0,
    p: float = 2.0,
    gamma: float | None = None,
) -> ProbeReport:
    """Rerun the 1D analysis on the reduced problem of an annulus.

    Checks that only the ``z2`` candidate vanishes at both radii and that it
    coincides with the stationary profile, then runs the sup-norm and Lp
    probes on the reduced functional.
    """
    red = rp.reduced()
    report = validate_forcing(red, m)
    F = build_potential(red, m)
    if report.sign != 1:
        raise DomainError("the refutation is run in the case F > 0 on (R2, R1)")
    vbar = stationary_point(red, F)
    cand = radial_candidates(rp, m)
    cand_n = radial_candidates(rp, m, convention="r^n")
    w = math.sqrt(2.0 * rp.lam)

    samples = []
    for j, g in enumerate((cand.v1, cand.v2, cand.v3), start=1):
        ends = (float(g.values[0]), float(g.values[-1]))
        if j < 3:
            ok = abs(abs(ends[0]) - w) < 1e-9 and abs(abs(ends[1]) - w) < 1e-9 and not g.in_c0
        else:
            ok = g.in_c0 and float(np.max(np.abs(g.values - vbar.values))) < 1e-12
        samples.append(ProbeSample("candidate_endpoints", j, rp.r2, ends[0], ends[1], w, bool(ok)))

    scale = float(np.max(red.theta(F.x))) * max(F.sup, 1e-300) * (rp.r1 - rp.r2)
    for k, h in enumerate(_c0_basis(F.x, 20), start=1):
        t = eval_gateaux(red, F, vbar, vbar.like(h))
        samples.append(ProbeSample("stationarity", k, float(k), t, t, 1e-8 * scale, abs(t) < 1e-8 * scale))

    cert = local_max_certificate(red, vbar)
    sup = sup_norm_probe(red, F, vbar, trials, seed, cert)
    lp = lp_nonextremum_probe(red, F, vbar, p, gamma=gamma, certificate=cert)
    gap = max(
        float(np.max(np.abs(a.values - b.values)))
        for a, b in zip((cand.v1, cand.v2, cand.v3), (cand_n.v1, cand_n.v2, cand_n.v3))
    )
    ok = all(s.ok for s in samples) and sup.passed and lp.passed and report.all_ok
    return ProbeReport(
        mode="radial",
        samples=samples,
        verdict="pass" if ok else "fail",
        columns={
            "x_or_n": "R2 (candidate rows) or basis index (stationarity rows)",
            "value_1": "v_j(R2) or T_vbar(h_k)",
            "value_2": "v_j(R1) or T_vbar(h_k)",
            "bound": "sqrt(2 lam) or stationarity tolerance",
        },
        parameters={"n": rp.n, "r2": rp.r2, "r1": rp.r1, "lambda": rp.lam, "nu": rp.nu,
                    "m": m, "trials": trials, "seed": seed, "p": p},
        details={
            "gamma_n": gamma_n(rp.n),
            "validation": report.as_dict(),
            "certificate": {"gamma_bar": cert.gamma_bar, "eta": cert.eta, "epsilon": cert.epsilon},
            "sup_probe": sup.verdict,
            "lp_probe": lp.verdict,
            "lp_n_star": lp.details["n_star"],
            "convention_gap": gap,
            "K_vbar": eval_K(red, F, vbar),
            "I_vbar": gamma_n(rp.n) * eval_K(red, F, vbar),
        },
    )
