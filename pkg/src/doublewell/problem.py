"""Problem data, admissibility checks and the potential ``F``.

A :class:`Problem` bundles the interval ``[a, b]``, the well parameter
``lam``, a positive weight ``theta`` and a forcing ``f``.  The functional is

    J(u) = int_a^b theta * (H(u') - f u),   H(y) = (y**2/2 - lam)**2 / 2

and for ``u' = v`` vanishing at both ends it equals

    K(v) = int_a^b theta * (H(v) - F v),   F(x) = -(1/theta(x)) int_a^x theta f.

For a constant weight the potential is the plain ``-int_a^x f``; the
weighted form is what makes the identity hold for ``theta = r**(n-1)`` on an
annulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

import numpy as np
from scipy import integrate, optimize

from .cubic import kappa
from .errors import DomainError, GridMismatch, QuadratureError

__all__ = [
    "Profile",
    "Problem",
    "GridFunction",
    "ValidationReport",
    "eval_H",
    "simpson",
    "validate_forcing",
    "build_potential",
    "sine_example",
    "DEFAULT_NODES",
]

DEFAULT_NODES = 2048


def eval_H(y, lam):
    """Double-well density ``(y**2/2 - lam)**2 / 2``."""
    return 0.5 * (0.5 * np.square(y) - lam) ** 2


class Profile:
    """A real function on ``[a, b]`` given by a named preset or by samples.

    Presets (``spec`` keys in parentheses):

    * ``constant`` (value)
    * ``sine`` / ``cosine`` (amplitude, frequency=1, phase=0):
      ``amplitude * sin(frequency * x + phase)``
    * ``polynomial`` (coeffs ascending, power_shift=0):
      ``x**power_shift * sum(c_k x**k)``
    * ``samples`` (values on a uniform grid over ``[a, b]``, linear interpolation)
    """

    PRESETS = ("constant", "sine", "cosine", "polynomial", "samples")

    def __init__(self, kind: str, params: Mapping[str, Any], a: float, b: float):
        if kind not in self.PRESETS:
            raise DomainError(f"unknown preset {kind!r}; expected one of {self.PRESETS}")
        self.kind = kind
        self.params = dict(params)
        self.a = float(a)
        self.b = float(b)
        if kind == "samples":
            vals = np.asarray(self.params["values"], dtype=float)
            if vals.ndim != 1 or vals.size < 2:
                raise DomainError("samples must be a 1-D list with at least two values")
            self._nodes = np.linspace(self.a, self.b, vals.size)
            self._vals = vals

    @classmethod
    def from_spec(cls, spec: Mapping[str, Any] | float, a: float, b: float) -> "Profile":
        if isinstance(spec, (int, float)):
            return cls("constant", {"value": float(spec)}, a, b)
        spec = dict(spec)
        if "samples" in spec:
            return cls("samples", {"values": spec.pop("samples")}, a, b)
        kind = spec.pop("preset", None)
        if kind is None:
            raise DomainError("function spec needs a 'preset' or 'samples' entry")
        return cls(kind, spec, a, b)

    @classmethod
    def constant(cls, value: float, a: float, b: float) -> "Profile":
        return cls("constant", {"value": float(value)}, a, b)

    @property
    def is_analytic(self) -> bool:
        return self.kind != "samples"

    def to_spec(self) -> dict[str, Any]:
        if self.kind == "samples":
            return {"samples": [float(t) for t in self._vals]}
        return {"preset": self.kind, **self.params}

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        p = self.params
        if self.kind == "constant":
            return np.full_like(x, float(p["value"]))
        if self.kind in ("sine", "cosine"):
            arg = float(p.get("frequency", 1.0)) * x + float(p.get("phase", 0.0))
            trig = np.sin if self.kind == "sine" else np.cos
            return float(p["amplitude"]) * trig(arg)
        if self.kind == "polynomial":
            coeffs = np.asarray(p["coeffs"], dtype=float)
            out = np.polynomial.polynomial.polyval(x, coeffs)
            shift = float(p.get("power_shift", 0.0))
            if shift:
                out = out * np.power(x, shift)
            return out
        return np.interp(x, self._nodes, self._vals)

    def scaled(self, factor: float) -> "Profile":
        """The same profile multiplied by ``factor``."""
        p = dict(self.params)
        if self.kind == "constant":
            p["value"] = float(p["value"]) * factor
        elif self.kind in ("sine", "cosine"):
            p["amplitude"] = float(p["amplitude"]) * factor
        elif self.kind == "polynomial":
            p["coeffs"] = [float(c) * factor for c in p["coeffs"]]
        else:
            p["values"] = [float(c) * factor for c in self._vals]
        return Profile(self.kind, p, self.a, self.b)

    def __repr__(self) -> str:
        if self.kind == "samples":
            return f"Profile(samples[{self._vals.size}])"
        return f"Profile({self.kind}, {self.params})"


@dataclass(frozen=True)
class Problem:
    """Data of the weighted double-well problem on ``[a, b]``.

    ``nu`` records the stiffness of the original ``nu/2 (y**2/2 - lam)**2``
    density when it has been folded into ``theta`` (``theta = nu`` and
    ``f -> f / nu``); it only enters the dual-cubic candidates.
    """

    a: float
    b: float
    lam: float
    theta: Profile
    forcing: Profile
    nu: float = 1.0
    name: str = ""
    mu: float = field(init=False)

    def __post_init__(self):
        if not self.a < self.b:
            raise DomainError(f"need a < b, got [{self.a}, {self.b}]")
        if not self.lam > 0:
            raise DomainError(f"lambda must be positive, got {self.lam}")
        if not self.nu > 0:
            raise DomainError(f"nu must be positive, got {self.nu}")
        probe = np.linspace(self.a, self.b, 4097)
        mu = float(np.min(self.theta(probe)))
        if not mu > 0:
            raise DomainError(f"weight theta must be strictly positive, min = {mu}")
        object.__setattr__(self, "mu", mu)

    @property
    def kappa(self) -> float:
        return kappa(self.lam)

    @property
    def kappa3(self) -> float:
        return kappa(self.lam) ** 3

    def grid(self, m: int = DEFAULT_NODES) -> np.ndarray:
        _check_nodes(m)
        return np.linspace(self.a, self.b, m + 1)

    def on_grid(self, fn: Callable | Profile, m: int = DEFAULT_NODES) -> "GridFunction":
        """Sample a callable on the problem's uniform grid."""
        return GridFunction(self.a, self.b, fn(self.grid(m)))

    def with_forcing(self, forcing: Profile) -> "Problem":
        return Problem(self.a, self.b, self.lam, self.theta, forcing, self.nu, self.name)


def sine_example(amplitude: float = -0.5, lam: float = 3.0) -> Problem:
    """``f = amplitude * sin x`` on ``[0, 2 pi]`` with unit weight."""
    a, b = 0.0, 2.0 * math.pi
    return Problem(
        a,
        b,
        lam,
        Profile.constant(1.0, a, b),
        Profile("sine", {"amplitude": amplitude}, a, b),
        name="sine",
    )


def _check_nodes(m):
    if int(m) != m or m < 2 or m % 2:
        raise DomainError(f"node count m must be a positive even integer, got {m!r}")


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples of a real function on the uniform grid ``a = x_0 < ... < x_m = b``."""

    a: float
    b: float
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=float)
        if vals.ndim != 1:
            raise DomainError("grid values must be one-dimensional")
        _check_nodes(vals.size - 1)
        if not np.all(np.isfinite(vals)):
            raise QuadratureError("grid function has non-finite values")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def m(self) -> int:
        return self.values.size - 1

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.a, self.b, self.m + 1)

    @property
    def spacing(self) -> float:
        return (self.b - self.a) / self.m

    @property
    def sup(self) -> float:
        return float(np.max(np.abs(self.values)))

    @property
    def in_c0(self) -> bool:
        tol = 1e-9 * max(1.0, self.sup)
        return abs(self.values[0]) <= tol and abs(self.values[-1]) <= tol

    def same_grid(self, other: "GridFunction") -> bool:
        return self.m == other.m and self.a == other.a and self.b == other.b

    def check_grid(self, *others: "GridFunction") -> None:
        for o in others:
            if not self.same_grid(o):
                raise GridMismatch(
                    f"grid [{self.a}, {self.b}]/{self.m} differs from [{o.a}, {o.b}]/{o.m}"
                )

    def like(self, values) -> "GridFunction":
        return GridFunction(self.a, self.b, values)

    def integral(self) -> float:
        return simpson(self.values, self.spacing)

    def __add__(self, other):
        if isinstance(other, GridFunction):
            self.check_grid(other)
            return self.like(self.values + other.values)
        return self.like(self.values + other)

    def __sub__(self, other):
        if isinstance(other, GridFunction):
            self.check_grid(other)
            return self.like(self.values - other.values)
        return self.like(self.values - other)

    def __mul__(self, c):
        return self.like(self.values * float(c))

    __rmul__ = __mul__

    def __neg__(self):
        return self.like(-self.values)


def simpson(values, dx: float) -> float:
    """Composite Simpson rule on an odd number of equally spaced samples."""
    y = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(y)):
        raise QuadratureError("non-finite integrand samples")
    return float(integrate.simpson(y, dx=dx))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the admissibility conditions for the forcing.

    ``l1_norm`` is ``||theta f||_1`` and ``l1_bound`` is ``mu * kappa**3``;
    for ``theta = 1`` these are ``||f||_1`` and ``(2 lam / 3)**1.5``.
    """

    balance_ok: bool
    balance_residual: float
    sign_ok: bool
    sign: int
    l1_ok: bool
    l1_norm: float
    l1_bound: float
    finf_ok: bool
    f_sup: float
    f_sup_bound: float
    zero_crossings: int

    @property
    def all_ok(self) -> bool:
        return self.balance_ok and self.sign_ok and self.l1_ok and self.finf_ok

    def as_dict(self) -> dict[str, Any]:
        return {
            "balance_ok": self.balance_ok,
            "balance_residual": self.balance_residual,
            "sign_ok": self.sign_ok,
            "sign": self.sign,
            "l1_ok": self.l1_ok,
            "l1_norm": self.l1_norm,
            "l1_bound": self.l1_bound,
            "finf_ok": self.finf_ok,
            "f_sup": self.f_sup,
            "f_sup_bound": self.f_sup_bound,
            "zero_crossings": self.zero_crossings,
            "all_ok": self.all_ok,
        }


def _weighted_forcing(problem: Problem, x):
    w = problem.theta(x) * problem.forcing(x)
    if not np.all(np.isfinite(w)):
        raise QuadratureError("forcing or weight is non-finite at a node")
    return w


def _sign_changes(y) -> np.ndarray:
    s = np.sign(y)
    nz = np.flatnonzero(s)
    return nz[:-1][s[nz[:-1]] != s[nz[1:]]]


def _weighted_integrals(problem: Problem, x, w):
    """``int theta f`` and ``int |theta f|`` over ``[a, b]``."""
    if not (problem.theta.is_analytic and problem.forcing.is_analytic):
        return simpson(w, x[1] - x[0]), simpson(np.abs(w), x[1] - x[0])

    def tf(t):
        return float(problem.theta(t) * problem.forcing(t))

    # interior zeros of theta*f become quad breakpoints for the |.| integrand
    breaks = []
    for i in _sign_changes(w):
        j = i + 1
        while w[j] == 0.0:
            j += 1
        breaks.append(optimize.brentq(tf, x[i], x[j], xtol=1e-15))
    zero_nodes = x[1:-1][w[1:-1] == 0.0]
    pts = sorted(set(breaks) | set(zero_nodes.tolist()))
    edges = [problem.a, *pts, problem.b]
    pieces = [
        integrate.quad(tf, lo, hi, limit=400, epsabs=1e-14, epsrel=1e-13)[0]
        for lo, hi in zip(edges[:-1], edges[1:])
        if hi > lo
    ]
    # theta*f has one sign on each piece, so the signed sum cancels exactly
    return math.fsum(pieces), math.fsum(abs(t) for t in pieces)


def validate_forcing(problem: Problem, m: int = DEFAULT_NODES) -> ValidationReport:
    """Check balance, constant sign of ``F`` and the L1 smallness condition.

    The sign condition is read on ``F`` at interior nodes (``F > 0`` or
    ``F < 0`` on ``(a, b)``); the number of sign changes of ``f`` at the
    nodes is reported for information only.
    """
    x = problem.grid(m)
    w = _weighted_forcing(problem, x)
    total, l1 = _weighted_integrals(problem, x, w)
    scale = float(np.max(np.abs(w)))
    balance_ok = abs(total) <= 1e-10 * (problem.b - problem.a) * scale

    F = build_potential(problem, m).values
    inner = F[1:-1]
    if np.all(inner > 0):
        sign = 1
    elif np.all(inner < 0):
        sign = -1
    else:
        sign = 0

    k3 = problem.kappa3
    l1_bound = problem.mu * k3
    f_sup = float(np.max(np.abs(F)))
    return ValidationReport(
        balance_ok=bool(balance_ok),
        balance_residual=float(total),
        sign_ok=sign != 0,
        sign=sign,
        l1_ok=bool(l1 < l1_bound),
        l1_norm=float(l1),
        l1_bound=float(l1_bound),
        finf_ok=bool(f_sup < k3),
        f_sup=f_sup,
        f_sup_bound=float(k3),
        zero_crossings=int(_sign_changes(problem.forcing(x)).size),
    )


def build_potential(problem: Problem, m: int = DEFAULT_NODES) -> GridFunction:
    """``F(x) = -(1/theta(x)) int_a^x theta f`` by cumulative Simpson; ``F(a) = 0``."""
    x = problem.grid(m)
    w = _weighted_forcing(problem, x)
    cum = integrate.cumulative_simpson(w, dx=x[1] - x[0], initial=0.0)
    F = -cum / problem.theta(x)
    F[0] = 0.0
    return GridFunction(problem.a, problem.b, F)
