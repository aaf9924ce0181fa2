"""Stationary profile, competing candidates and extremum probes.

The only stationary point of ``K`` on ``C0[a, b]`` is ``vbar = z2(F)``.  This
module builds it, certifies it as a strict local maximiser for the sup
norm, and runs the spike-family experiments showing that in ``Lp`` with
``p < 4`` it is not an extremum and ``K`` is not Frechet differentiable.

Spike perturbations have support ``2/n`` and cannot be resolved by a
grid for large ``n``.  Their contributions ``int g h**s`` are evaluated as
``g(x_c) * M_s`` with the closed-form moment ``M_s`` and the spike centre
``x_c`` placed on a grid node; ``L_s M_s / n`` (``L_s`` a Lipschitz
estimate of ``g``) bounds the error and is carried in every sample.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np
from scipy import integrate

from .cubic import e_roots, g_branch
from .errors import CertificateError, DomainError
from .functional import (
    eval_K,
    gateaux_density,
    lp_norm,
    parse_p,
    taylor_coefficients,
    weight_on,
)
from .problem import GridFunction, Problem

__all__ = [
    "Certificate",
    "Candidates",
    "SpikeFamily",
    "ProbeSample",
    "ProbeReport",
    "CSV_COLUMNS",
    "stationary_point",
    "dual_candidates",
    "local_max_certificate",
    "smooth_c0_perturbation",
    "sup_norm_probe",
    "spike_moments",
    "spike_values",
    "spike_terms",
    "lp_nonextremum_probe",
    "frechet_probe",
    "fitted_slope",
    "c1_norm",
    "integrate_profile",
    "remainder_window",
    "moment_window",
]

CSV_COLUMNS = ("series", "index", "x_or_n", "value_1", "value_2", "bound", "verdict")
SLOPE_RTOL = 0.10
SLOPE_N = tuple(int(round(t)) for t in np.logspace(6, 12, 13))
SPIKE_N = tuple(10**k for k in range(1, 7))


# --------------------------------------------------------------------------
# profiles


def stationary_point(problem: Problem, F: GridFunction) -> GridFunction:
    """``vbar = z2 o F``, the unique zero of the Gateaux derivative in C0."""
    if np.any(np.abs(F.values) >= problem.kappa3):
        raise DomainError(
            f"||F||_inf = {F.sup:.6g} violates the smallness bound kappa**3 = {problem.kappa3:.6g}"
        )
    vals = g_branch(F.values, problem.lam, 2)
    if F.in_c0:
        vals[0] = vals[-1] = 0.0
    return F.like(vals)


@dataclass(frozen=True)
class Candidates:
    """Derivative profiles ``v_j = A / E_j^{-1}(A**2)`` with ``A = nu F``.

    ``endpoints`` maps ``"v1"``, ``"v2"``, ``"v3"`` to their values at ``a``
    and ``b``; only ``v3`` vanishes there.
    """

    v1: GridFunction
    v2: GridFunction
    v3: GridFunction
    sign: int

    @property
    def endpoints(self) -> dict[str, tuple[float, float]]:
        return {
            name: (float(g.values[0]), float(g.values[-1]))
            for name, g in (("v1", self.v1), ("v2", self.v2), ("v3", self.v3))
        }

    @property
    def admissible(self) -> dict[str, bool]:
        return {"v1": self.v1.in_c0, "v2": self.v2.in_c0, "v3": self.v3.in_c0}

    def table(self, vbar: GridFunction) -> dict[str, dict[str, Any]]:
        """Endpoint values, admissibility and node-wise distance to ``vbar``."""
        out = {}
        for name, g in (("v1", self.v1), ("v2", self.v2), ("v3", self.v3)):
            g.check_grid(vbar)
            out[name] = {
                "endpoint_a": float(g.values[0]),
                "endpoint_b": float(g.values[-1]),
                "in_c0": g.in_c0,
                "max_abs_diff_vbar": float(np.max(np.abs(g.values - vbar.values))),
            }
        return out


def dual_candidates(problem: Problem, F: GridFunction) -> Candidates:
    """Evaluate the three dual-cubic candidate profiles on the grid.

    Interior nodes use the roots of ``E(y) = A**2`` (with the problem's
    ``nu``); the endpoints, where ``F = 0`` and ``v_j`` is ``0/0``, take the
    one-sided limits ``+-sqrt(2 lam)`` and ``0``.
    """
    inner = F.values[1:-1]
    if np.all(inner > 0):
        sign = 1
    elif np.all(inner < 0):
        sign = -1
    else:
        raise DomainError("candidate profiles need F of constant sign on (a, b)")
    A = problem.nu * F.values
    e = e_roots(A[1:-1] ** 2, problem.lam, problem.nu)
    w = math.sqrt(2.0 * problem.lam)
    limits = (sign * w, -sign * w, 0.0)
    out = []
    for j in range(3):
        vals = np.empty_like(A)
        vals[1:-1] = A[1:-1] / e[:, j]
        vals[0] = vals[-1] = limits[j]
        out.append(F.like(vals))
    return Candidates(*out, sign=sign)


def integrate_profile(v: GridFunction, u0: float = 0.0) -> GridFunction:
    """``u(x) = u0 + int_a^x v`` by cumulative Simpson."""
    cum = integrate.cumulative_simpson(v.values, dx=v.spacing, initial=0.0)
    return v.like(u0 + cum)


def c1_norm(u: GridFunction, du: GridFunction) -> float:
    """``||u||_inf + ||u'||_inf`` from samples of ``u`` and ``u'``."""
    u.check_grid(du)
    return u.sup + du.sup


# --------------------------------------------------------------------------
# sup-norm certificate


@dataclass(frozen=True)
class Certificate:
    """Radius ``epsilon`` of a sup-norm ball on which ``K(vbar + h) < K(vbar)``."""

    gamma_bar: float
    eta: float
    epsilon: float
    lam: float

    def bound(self, t):
        """Upper bound ``-eta + gamma_bar t / 2 + t**2 / 8`` on the bracket."""
        return -self.eta + 0.5 * self.gamma_bar * t + 0.125 * np.square(t)


def local_max_certificate(problem: Problem, vbar: GridFunction) -> Certificate:
    gamma = vbar.sup
    if gamma >= problem.kappa:
        raise CertificateError(f"max |vbar| = {gamma:.6g} is not below kappa = {problem.kappa:.6g}")
    eta = -0.5 * (1.5 * gamma * gamma - problem.lam)
    eps = 2.0 * (math.sqrt(gamma * gamma + 2.0 * eta) - gamma)
    return Certificate(gamma, eta, eps, problem.lam)


def smooth_c0_perturbation(x: np.ndarray, rng: np.random.Generator, sup: float) -> np.ndarray:
    """Random sum of 1-5 sine modes vanishing at both ends, scaled to ``sup``."""
    t = (x - x[0]) / (x[-1] - x[0])
    n_modes = int(rng.integers(1, 6))
    modes = rng.choice(np.arange(1, 11), size=n_modes, replace=False)
    coef = rng.normal(size=n_modes)
    h = np.sin(np.pi * np.outer(t, modes)) @ coef
    h[0] = h[-1] = 0.0
    return h * (sup / np.max(np.abs(h)))


@dataclass(frozen=True)
class ProbeSample:
    series: str
    index: int
    x_or_n: float
    value_1: float
    value_2: float
    bound: float
    ok: bool

    def row(self) -> tuple:
        return (
            self.series,
            self.index,
            repr(float(self.x_or_n)),
            repr(float(self.value_1)),
            repr(float(self.value_2)),
            repr(float(self.bound)),
            "pass" if self.ok else "fail",
        )


@dataclass
class ProbeReport:
    """Samples of one probe plus the verdict derived from them.

    ``columns`` documents what ``x_or_n``, ``value_1``, ``value_2`` and
    ``bound`` hold for this mode.
    """

    mode: str
    samples: list[ProbeSample]
    verdict: str
    columns: dict[str, str]
    parameters: dict[str, Any] = field(default_factory=dict)
    fitted_slope: float | None = None
    expected_slope: float | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def series(self, name: str) -> list[ProbeSample]:
        return [s for s in self.samples if s.series == name]

    def as_dict(self) -> dict[str, Any]:
        return _jsonable(
            {
                "mode": self.mode,
                "verdict": self.verdict,
                "columns": self.columns,
                "parameters": self.parameters,
                "fitted_slope": self.fitted_slope,
                "expected_slope": self.expected_slope,
                "details": self.details,
                "samples": [asdict(s) for s in self.samples],
            }
        )

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True, allow_nan=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(CSV_COLUMNS)
        for s in self.samples:
            w.writerow(s.row())
        return buf.getvalue()


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        f = float(obj)
        if math.isinf(f):
            return "inf" if f > 0 else "-inf"
        return f
    return obj


def sup_norm_probe(
    problem: Problem,
    F: GridFunction,
    vbar: GridFunction,
    trials: int = 1000,
    seed: int = 0,
    certificate: Certificate | None = None,
    adversarial: bool = True,
) -> ProbeReport:
    """Random smooth C0 perturbations inside the certified ball.

    Every trial must give ``K(vbar + h) - K(vbar) < 0`` and a negative
    bracket ``(3/2 vbar**2 - lam)/2 + vbar h / 2 + h**2 / 8`` at all nodes
    where ``h != 0``.  With ``adversarial`` an extra trial
    ``h = -0.9 eps vbar / ||vbar||_inf`` is appended as index ``trials``.
    """
    cert = certificate or local_max_certificate(problem, vbar)
    rng = np.random.default_rng(seed)
    x = vbar.x
    k0 = eval_K(problem, F, vbar)
    hs = []
    for _ in range(trials):
        target = cert.epsilon * rng.uniform(0.01, 0.99)
        hs.append(smooth_c0_perturbation(x, rng, target))
    if adversarial and vbar.sup > 0:
        hs.append(-0.9 * cert.epsilon * vbar.values / vbar.sup)
    samples = []
    vb = vbar.values
    for i, h in enumerate(hs):
        dk = eval_K(problem, F, vbar + h) - k0
        bracket = 0.5 * (1.5 * vb * vb - problem.lam) + 0.5 * vb * h + 0.125 * h * h
        nz = h != 0.0
        worst = float(np.max(bracket[nz])) if np.any(nz) else -cert.eta
        hsup = float(np.max(np.abs(h)))
        ok = dk < 0 and worst < 0 and hsup < cert.epsilon
        samples.append(ProbeSample("sup_max", i, hsup, worst, dk, cert.epsilon, bool(ok)))
    n_ok = sum(s.ok for s in samples)
    return ProbeReport(
        mode="sup_max",
        samples=samples,
        verdict="pass" if n_ok == len(samples) else "fail",
        columns={
            "x_or_n": "||h||_inf",
            "value_1": "max bracket over nodes with h != 0",
            "value_2": "K(vbar+h) - K(vbar)",
            "bound": "certified radius epsilon",
        },
        parameters={"trials": trials, "seed": seed, "adversarial": adversarial},
        details={
            "gamma_bar": cert.gamma_bar,
            "eta": cert.eta,
            "epsilon": cert.epsilon,
            "negative": n_ok,
            "total": len(samples),
        },
    )


# --------------------------------------------------------------------------
# spike family


@dataclass(frozen=True)
class SpikeFamily:
    """Tent ``h_n`` of width ``2/n`` starting at ``x0``.

    For finite ``p`` the peak is ``n**(gamma/p)`` so that
    ``||h_n||_p = (2/(p+1))**(1/p) n**((gamma-1)/p) -> 0``.  At ``p = inf``
    that formula gives unit height; the peak ``n**(gamma-1)`` is used
    instead so the sup norm still vanishes.
    """

    p: float
    gamma_exp: float
    n: float
    x0: float = 0.0
    interval: tuple[float, float] | None = None

    def __post_init__(self):
        p = parse_p(self.p)
        object.__setattr__(self, "p", p)
        if not 0.0 < self.gamma_exp < 1.0:
            raise DomainError(f"spike exponent must lie in (0, 1), got {self.gamma_exp}")
        if not self.n >= 1:
            raise DomainError(f"spike index must be >= 1, got {self.n}")
        if self.interval is not None:
            a, b = self.interval
            if self.width > b - a or self.x0 < a or self.x0 + self.width > b:
                raise DomainError(
                    f"spike support [{self.x0}, {self.x0 + self.width}] leaves [{a}, {b}]"
                )

    @property
    def width(self) -> float:
        return 2.0 / self.n

    @property
    def center(self) -> float:
        return self.x0 + 1.0 / self.n

    @property
    def peak(self) -> float:
        if math.isinf(self.p):
            return float(self.n) ** (self.gamma_exp - 1.0)
        return float(self.n) ** (self.gamma_exp / self.p)

    @property
    def alpha(self) -> float:
        """Slope of the rising edge, ``n**(1 + gamma/p)`` for finite ``p``."""
        return self.n * self.peak

    def power_integral(self, s: float) -> float:
        """``int |h_n|**s = 2 peak**s / ((s+1) n)``."""
        return 2.0 * self.peak**s / ((s + 1.0) * self.n)

    def norm(self, q=None) -> float:
        q = self.p if q is None else parse_p(q)
        if math.isinf(q):
            return self.peak
        return self.power_integral(q) ** (1.0 / q)


def spike_moments(family: SpikeFamily, s: float) -> tuple[float, float]:
    """Closed-form ``(int |h_n|**s, ||h_n||_p)``; no quadrature involved."""
    if s < 1:
        raise DomainError(f"moment power must be >= 1, got {s}")
    return family.power_integral(s), family.norm()


def spike_values(family: SpikeFamily, x) -> np.ndarray:
    """Samples of the tent at the points ``x``."""
    t = np.asarray(x, dtype=float) - family.x0
    up = family.alpha * t
    down = family.alpha * (family.width - t)
    return np.where((t >= 0) & (t <= family.width), np.minimum(up, down), 0.0).clip(min=0.0)


def _lipschitz(values: np.ndarray, dx: float) -> float:
    return float(np.max(np.abs(np.gradient(values, dx))))


def _center_index(weights: np.ndarray, x: np.ndarray, halfwidth: float) -> int:
    """Node maximising ``|weights|`` with room for a half-width on both sides."""
    a, b = x[0], x[-1]
    room = (x - halfwidth >= a) & (x + halfwidth <= b)
    room[0] = room[-1] = False
    if not np.any(room):
        raise DomainError("no node leaves room for the spike support")
    score = np.where(room, np.abs(weights), -np.inf)
    best = np.flatnonzero(score >= score.max() * (1.0 - 1e-12))
    mid = 0.5 * (a + b)
    return int(best[np.argmin(np.abs(x[best] - mid))])


@dataclass(frozen=True)
class SpikeTerms:
    """Midpoint estimates ``g_s(x_c) M_s`` and their error bounds."""

    n: float
    norm: float
    t1: float
    t2: float
    t3: float
    t4: float
    err1: float
    err2: float
    err3: float
    err4: float

    @property
    def remainder(self) -> float:
        return self.t2 + self.t3 + self.t4

    @property
    def remainder_err(self) -> float:
        return self.err2 + self.err3 + self.err4

    @property
    def delta_k(self) -> float:
        return self.t1 + self.remainder

    @property
    def delta_k_err(self) -> float:
        return self.err1 + self.remainder_err

    @property
    def abs_terms(self) -> float:
        """``|t2| + |t3| + |t4|`` plus their error bounds."""
        return abs(self.t2) + abs(self.t3) + abs(self.t4) + self.remainder_err


def spike_terms(
    problem: Problem, F: GridFunction, v: GridFunction, family: SpikeFamily
) -> SpikeTerms:
    """Taylor terms of ``K(v + h_n) - K(v)`` for a spike centred on a node of ``v``."""
    x = v.x
    i = int(round((family.center - v.a) / v.spacing))
    if abs(x[i] - family.center) > 1e-9 * max(1.0, abs(family.center)):
        raise DomainError("spike centre must sit on a grid node")
    coeffs = (gateaux_density(problem, F, v), *taylor_coefficients(problem, v))
    dx = v.spacing
    t, err = [], []
    for s, g in enumerate(coeffs, start=1):
        moment = family.power_integral(s)
        t.append(float(g[i]) * moment)
        err.append(_lipschitz(g, dx) * moment / family.n)
    return SpikeTerms(family.n, family.norm(), *t, *err)


def place_spike(v: GridFunction, p, gamma: float, n: float, weights=None) -> SpikeFamily:
    """Spike of index ``n`` centred on the node maximising ``|weights|``."""
    weights = np.ones_like(v.values) if weights is None else weights
    i = _center_index(np.asarray(weights), v.x, 1.0 / n)
    return SpikeFamily(p, gamma, n, v.x[i] - 1.0 / n, (v.a, v.b))


def fitted_slope(ns: Sequence[float], values: Sequence[float]) -> float:
    """Least-squares slope of ``log|values|`` against ``log ns``."""
    return float(np.polyfit(np.log(np.asarray(ns, float)), np.log(np.abs(values)), 1)[0])


def remainder_window(p: float) -> tuple[float, float]:
    """Exponents for which the quartic term outgrows ``||h_n||_p``: ``((p-1)/3, 1)``."""
    return ((p - 1.0) / 3.0, 1.0)


def moment_window(p: float, s: int) -> tuple[float, float]:
    """Exponents for which ``int g h_n**s / ||h_n||_p`` blows up: ``((p-1)/(s-1), 1)``."""
    return ((p - 1.0) / (s - 1.0), 1.0)


def _midpoint(window):
    return 0.5 * (window[0] + window[1])


# --------------------------------------------------------------------------
# Lp probes


def lp_nonextremum_probe(
    problem: Problem,
    F: GridFunction,
    vbar: GridFunction,
    p,
    n_values: Iterable[float] = SPIKE_N,
    gamma: float | None = None,
    smooth_steps: int = 8,
    certificate: Certificate | None = None,
) -> ProbeReport:
    """Two sequences with ``||h||_p -> 0`` of opposite effect on ``K``.

    ``lp_not_max``: spikes with ``K(vbar + h_n) > K(vbar)`` from some
    index ``n*`` on (certified by estimate minus error bound).
    ``lp_not_min``: shrinking smooth bumps inside the sup-norm ball, all
    with ``K(vbar + h) < K(vbar)``.
    """
    p = parse_p(p)
    if p >= 4:
        raise DomainError("the Lp non-extremum probe is for p in [1, 4)")
    window = remainder_window(p)
    gamma = _midpoint(window) if gamma is None else float(gamma)
    if not window[0] < gamma < window[1]:
        raise DomainError(f"gamma = {gamma} outside the admissible window {window}")
    cert = certificate or local_max_certificate(problem, vbar)
    theta = weight_on(problem, vbar)
    ns = sorted(float(n) for n in n_values)

    samples = []
    for k, n in enumerate(ns):
        fam = place_spike(vbar, p, gamma, n, theta)
        st = spike_terms(problem, F, vbar, fam)
        ok = st.delta_k - st.delta_k_err > 0
        samples.append(ProbeSample("lp_not_max", k, n, st.norm, st.delta_k, st.delta_k_err, ok))
    flags = [s.ok for s in samples]
    n_star = None
    for k in range(len(flags)):
        if all(flags[k:]):
            n_star = ns[k]
            break
    norms = [s.value_1 for s in samples]
    not_max = (
        n_star is not None
        and bool(np.all(np.diff(norms) < 0))
        and flags[-1]
    )

    k0 = eval_K(problem, F, vbar)
    x = vbar.x
    bump = np.sin(np.pi * (x - x[0]) / (x[-1] - x[0]))
    bump[0] = bump[-1] = 0.0
    smooth = []
    for k in range(1, smooth_steps + 1):
        h = vbar.like(0.9 * cert.epsilon * bump / k)
        dk = eval_K(problem, F, vbar + h) - k0
        smooth.append(ProbeSample("lp_not_min", k, float(k), lp_norm(h, p), dk, 0.0, dk < 0))
    snorms = [s.value_1 for s in smooth]
    not_min = all(s.ok for s in smooth) and bool(np.all(np.diff(snorms) < 0))

    return ProbeReport(
        mode="lp_nonextremum",
        samples=samples + smooth,
        verdict="pass" if (not_max and not_min) else "fail",
        columns={
            "x_or_n": "spike index n (lp_not_max) or shrink factor k (lp_not_min)",
            "value_1": "||h||_p",
            "value_2": "K(vbar+h) - K(vbar)",
            "bound": "error bound on value_2",
        },
        parameters={"p": p, "gamma": gamma, "window": list(window), "n_values": ns},
        details={
            "n_star": n_star,
            "not_maximizer": not_max,
            "not_minimizer": not_min,
            "spike_center": place_spike(vbar, p, gamma, ns[-1], theta).center,
        },
    )


def frechet_probe(
    problem: Problem,
    F: GridFunction,
    v: GridFunction,
    p,
    n_values: Iterable[float] = SLOPE_N,
    s: int | None = None,
    gamma: float | None = None,
    g: GridFunction | None = None,
) -> ProbeReport:
    """Growth of ``Lp``-normalised spike contributions.

    With ``s`` in {2, 3, 4} this is the single-term ratio
    ``|int g h_n**s| / ||h_n||_p`` (``g`` defaults to the order-``s``
    Taylor coefficient at ``v``): for ``p < s`` its log-log slope must be
    ``(gamma (s-1) - (p-1)) / p`` within 10 %; for ``p >= s`` it must
    decrease to 0.

    With ``s=None`` the full remainder ``(K(v+h) - K(v) - T_v h) / ||h||_p``
    is used: slope ``(1 - p + 3 gamma) / p`` for ``p < 4``; for ``p >= 4``
    the bound ``(|t2| + |t3| + |t4|) / ||h||_p`` must decrease to 0 and
    dominate the remainder.
    """
    p = parse_p(p)
    ns = sorted(float(n) for n in n_values)
    if s is not None:
        if s not in (2, 3, 4):
            raise DomainError(f"moment power s must be 2, 3 or 4, got {s!r}")
        return _moment_probe(problem, F, v, p, ns, s, gamma, g)

    window = remainder_window(p)
    blowup = p < 4
    if gamma is None:
        gamma = _midpoint(window) if blowup else 0.5
    theta = weight_on(problem, v)
    samples = []
    ratios, bounds = [], []
    for k, n in enumerate(ns):
        fam = place_spike(v, p, gamma, n, theta)
        st = spike_terms(problem, F, v, fam)
        ratio = st.remainder / st.norm
        bound = st.abs_terms / st.norm
        ratios.append(ratio)
        bounds.append(bound)
        ok = ratio - st.remainder_err / st.norm > 0 if blowup else abs(ratio) <= bound
        samples.append(ProbeSample("remainder", k, n, st.norm, ratio, bound, bool(ok)))

    # only the p < 4 growth rate is predicted; for p >= 4 decay is checked
    expected = (1.0 - p + 3.0 * gamma) / p if blowup else None
    if blowup:
        slope = fitted_slope(ns, ratios) if all(r > 0 for r in ratios) else None
        verdict = (
            slope is not None
            and expected > 0
            and abs(slope - expected) <= SLOPE_RTOL * abs(expected)
            and all(x.ok for x in samples)
        )
    else:
        slope = fitted_slope(ns, bounds)
        verdict = bool(np.all(np.diff(bounds) < 0)) and all(x.ok for x in samples) and slope < 0
    return ProbeReport(
        mode="frechet",
        samples=samples,
        verdict="pass" if verdict else "fail",
        columns={
            "x_or_n": "spike index n",
            "value_1": "||h_n||_p",
            "value_2": "(K(v+h_n) - K(v) - T_v h_n) / ||h_n||_p",
            "bound": "(|t2|+|t3|+|t4| + error) / ||h_n||_p",
        },
        parameters={"p": p, "gamma": gamma, "s": None, "n_values": ns},
        fitted_slope=slope,
        expected_slope=expected,
        details={
            "regime": "not Frechet differentiable" if blowup else "Frechet differentiable",
            "slope_rtol": SLOPE_RTOL,
        },
    )


def _moment_probe(problem, F, v, p, ns, s, gamma, g):
    blowup = p < s
    window = moment_window(p, s) if blowup else (0.0, 1.0)
    if gamma is None:
        gamma = _midpoint(window)
    if g is None:
        gvals = taylor_coefficients(problem, v)[s - 2]
    else:
        v.check_grid(g)
        gvals = g.values
    if not np.any(gvals):
        raise DomainError("moment probe needs g != 0")
    lip = _lipschitz(gvals, v.spacing)
    samples, ratios = [], []
    for k, n in enumerate(ns):
        fam = place_spike(v, p, gamma, n, gvals)
        i = int(round((fam.center - v.a) / v.spacing))
        moment, norm = spike_moments(fam, s)
        ratio = abs(gvals[i]) * moment / norm
        err = lip * moment / (n * norm)
        ratios.append(ratio)
        samples.append(ProbeSample(f"moment_s{s}", k, n, norm, ratio, err, ratio > err))
    if math.isinf(p):
        expected = (gamma - 1.0) * (s - 1.0) - 1.0
    else:
        expected = (gamma * (s - 1.0) - (p - 1.0)) / p
    slope = fitted_slope(ns, ratios)
    if blowup:
        ok = abs(slope - expected) <= SLOPE_RTOL * abs(expected) and expected > 0
    else:
        ok = bool(np.all(np.diff(ratios) < 0)) and slope < 0
    return ProbeReport(
        mode="moment",
        samples=samples,
        verdict="pass" if ok and all(x.ok for x in samples) else "fail",
        columns={
            "x_or_n": "spike index n",
            "value_1": "||h_n||_p",
            "value_2": "|int g h_n**s| / ||h_n||_p",
            "bound": "midpoint error bound on value_2",
        },
        parameters={"p": p, "gamma": gamma, "s": s, "window": list(window), "n_values": ns},
        fitted_slope=slope,
        expected_slope=expected,
        details={"regime": "ratio diverges" if blowup else "ratio -> 0", "slope_rtol": SLOPE_RTOL},
    )
