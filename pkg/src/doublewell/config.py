"""JSON run configurations (``schema: 1``).

1D problem::

    {"schema": 1, "a": 0, "b": 6.283185307179586, "lambda": 3,
     "nu_or_theta": 1, "f": {"preset": "sine", "amplitude": -0.5}, "m": 2048}

A number for ``nu_or_theta`` is the stiffness ``nu`` of
``nu/2 (y**2/2 - lam)**2`` and ``f`` is the load of that energy (the
weight becomes ``nu`` and the forcing ``f / nu``); a function spec is used
as the weight ``theta`` with ``f`` taken as given.

Radial problem::

    {"schema": 1, "n": 2, "r2": 1, "r1": 2, "lambda": 1.5, "nu": 1,
     "f": {"preset": "polynomial", "coeffs": [-3, 2], "power_shift": -1}, "m": 2048}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import ConfigError, DoubleWellError
from .problem import DEFAULT_NODES, Problem, Profile
from .radial import RadialProblem

__all__ = ["load_config", "parse_config"]

SCHEMA = 1
LINE_KEYS = {"schema", "a", "b", "lambda", "nu_or_theta", "f", "m", "name"}
RADIAL_KEYS = {"schema", "n", "r2", "r1", "lambda", "nu", "f", "m", "name"}


def _number(cfg, key):
    try:
        return float(cfg[key])
    except KeyError:
        raise ConfigError(f"missing required field {key!r}") from None
    except (TypeError, ValueError):
        raise ConfigError(f"field {key!r} must be a number") from None


def parse_config(cfg: dict[str, Any]) -> tuple[Problem | RadialProblem, int]:
    """Build a problem and the node count from a decoded config."""
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    if cfg.get("schema") != SCHEMA:
        raise ConfigError(f"unsupported or missing schema (expected {SCHEMA})")
    radial = "n" in cfg
    allowed = RADIAL_KEYS if radial else LINE_KEYS
    unknown = sorted(set(cfg) - allowed)
    if unknown:
        raise ConfigError(f"unknown config fields: {', '.join(unknown)}")
    m = cfg.get("m", DEFAULT_NODES)
    if not isinstance(m, int) or m < 8 or m % 2:
        raise ConfigError("m must be an even integer >= 8")
    if "f" not in cfg:
        raise ConfigError("missing required field 'f'")
    name = str(cfg.get("name", ""))
    try:
        if radial:
            n = cfg["n"]
            if not isinstance(n, int):
                raise ConfigError("n must be an integer")
            r2, r1 = _number(cfg, "r2"), _number(cfg, "r1")
            forcing = Profile.from_spec(cfg["f"], r2, r1)
            return RadialProblem(n, r2, r1, _number(cfg, "lambda"), float(cfg.get("nu", 1.0)),
                                 forcing, name), m
        a, b = _number(cfg, "a"), _number(cfg, "b")
        lam = _number(cfg, "lambda")
        weight = cfg.get("nu_or_theta", 1.0)
        forcing = Profile.from_spec(cfg["f"], a, b)
        if isinstance(weight, (int, float)):
            nu = float(weight)
            if not nu > 0:
                raise ConfigError("nu must be positive")
            return Problem(a, b, lam, Profile.constant(nu, a, b), forcing.scaled(1.0 / nu), nu, name), m
        return Problem(a, b, lam, Profile.from_spec(weight, a, b), forcing, 1.0, name), m
    except ConfigError:
        raise
    except (DoubleWellError, KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid config: {exc}") from exc


def load_config(path: str | Path) -> tuple[Problem | RadialProblem, int]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return parse_config(cfg)
