"""Command-line front end.

Every subcommand loads a ``schema: 1`` JSON config (the built-in sine
example when ``--config`` is omitted), prints a short summary and, with
``--out``, writes artifacts plus a ``manifest.json``.  Artifacts are a
deterministic function of config, flags and library version; the
timestamp lives only in the manifest.

Exit status: 0 on success, 1 on config or input errors, 2 when a verdict
fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .assessment import assess_problem
from .config import load_config
from .errors import ConfigError, DoubleWellError
from .functional import eval_K, parse_p
from .probe import (
    CSV_COLUMNS,
    ProbeReport,
    ProbeSample,
    _jsonable,
    frechet_probe,
    dual_candidates,
    integrate_profile,
    local_max_certificate,
    lp_nonextremum_probe,
    stationary_point,
    sup_norm_probe,
)
from .problem import Problem, build_potential, sine_example, validate_forcing
from .radial import RadialProblem, eval_I, gamma_n, radial_refutation

__all__ = ["RunManifest", "build_parser", "main", "run"]

COMMANDS = ("validate", "solve", "probe-sup", "probe-lp", "frechet", "candidates", "radial", "report")
EXIT_OK, EXIT_CONFIG, EXIT_VERDICT = 0, 1, 2


@dataclass
class RunManifest:
    command: str
    config: str | None
    seed: int
    out: str | None
    overrides: dict[str, Any] = field(default_factory=dict)
    version: str = __version__
    timestamp: str = ""

    def to_json(self) -> str:
        return json.dumps(_jsonable(asdict(self)), indent=2, sort_keys=True) + "\n"


def _dumps(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def _table(samples: Sequence[ProbeSample]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(CSV_COLUMNS)
    for s in samples:
        w.writerow(s.row())
    return buf.getvalue()


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _exponent(text: str) -> float:
    try:
        return parse_p(text)
    except (DoubleWellError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(kind):
    def parse(text):
        value = kind(text)
        if not value > 0:
            raise argparse.ArgumentTypeError(f"expected a positive value, got {text!r}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON problem config (default: built-in sine example)")
    common.add_argument("--out", help="directory for JSON/CSV artifacts")
    common.add_argument("--seed", type=_seed, default=0, help="RNG seed (unsigned 64-bit)")
    common.add_argument("--m", type=int, default=None, help="grid intervals (even); overrides the config")
    common.add_argument("--p", type=_exponent, default=2.0, help="Lp exponent, a real >= 1 or 'inf'")
    common.add_argument("--tol", type=_positive(float), default=1e-8, help="relative stationarity tolerance")
    common.add_argument("--trials", type=_positive(int), default=1000, help="sup-norm probe trials")
    common.add_argument("--gamma", type=float, default=None, help="spike exponent (default: window midpoint)")

    parser = argparse.ArgumentParser(prog="doublewell", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "validate": "check balance, sign and L1 conditions on the forcing",
        "solve": "stationary profile, its primitive, K and the sup-norm certificate",
        "probe-sup": "random perturbations inside the certified sup-norm ball",
        "probe-lp": "spike and bump sequences showing no Lp extremum (p < 4)",
        "frechet": "normalised remainder growth along spike families",
        "candidates": "dual-cubic candidate profiles and their endpoint values",
        "radial": "reduced pipeline for an annulus config",
        "report": "aggregate verdict on the three claimed extrema",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "frechet":
            sp.add_argument("--s", type=int, choices=(2, 3, 4), default=None,
                            help="single moment power instead of the full remainder")
    return parser


def _load(args) -> tuple[Problem | RadialProblem, int]:
    if args.config is None:
        problem, m = sine_example(), 2048
    else:
        problem, m = load_config(args.config)
    if args.m is not None:
        if args.m < 8 or args.m % 2:
            raise ConfigError("--m must be an even integer >= 8")
        m = args.m
    return problem, m


def _line_problem(problem) -> Problem:
    return problem.reduced() if isinstance(problem, RadialProblem) else problem


class _Run:
    """Collects artifacts and the exit status of one invocation."""

    def __init__(self, args):
        self.args = args
        self.files: dict[str, str] = {}
        self.ok = True
        self.lines: list[str] = []

    def say(self, line: str):
        self.lines.append(line)

    def report(self, stem: str, rep: ProbeReport):
        self.files[f"{stem}.json"] = rep.to_json()
        self.files[f"{stem}.csv"] = rep.to_csv()
        self.ok &= rep.passed


def _validate(run, problem, m):
    rep = validate_forcing(_line_problem(problem), m)
    for key, value in rep.as_dict().items():
        run.say(f"{key}: {value}")
    run.files["validation.json"] = _dumps(rep.as_dict())
    run.ok &= rep.all_ok


def _stationary(problem, m):
    line = _line_problem(problem)
    F = build_potential(line, m)
    return line, F, stationary_point(line, F)


def _solve(run, problem, m):
    line, F, vbar = _stationary(problem, m)
    ubar = integrate_profile(vbar, 0.0)
    cert = local_max_certificate(line, vbar)
    K = eval_K(line, F, vbar)
    rows = [
        ProbeSample("profile", i, x, v, u, cert.gamma_bar, abs(v) <= cert.gamma_bar)
        for i, (x, v, u) in enumerate(zip(vbar.x, vbar.values, ubar.values))
    ]
    summary = {
        "K_vbar": K,
        "vbar_sup": vbar.sup,
        "vbar_in_c0": vbar.in_c0,
        "ubar_sup": ubar.sup,
        "certificate": {"gamma_bar": cert.gamma_bar, "eta": cert.eta, "epsilon": cert.epsilon},
        "columns": {"x_or_n": "x", "value_1": "vbar(x)", "value_2": "ubar(x)", "bound": "gamma_bar"},
    }
    if isinstance(problem, RadialProblem):
        summary["I_vbar"] = eval_I(problem, vbar)
    run.files["solve.json"] = _dumps(summary)
    run.files["solve.csv"] = _table(rows)
    run.say(f"K(vbar) = {K!r}")
    run.say(f"gamma_bar = {cert.gamma_bar!r}  eta = {cert.eta!r}  epsilon = {cert.epsilon!r}")
    run.ok &= vbar.in_c0


def _probe_sup(run, problem, m):
    line, F, vbar = _stationary(problem, m)
    rep = sup_norm_probe(line, F, vbar, run.args.trials, run.args.seed, adversarial=False)
    run.report("probe_sup", rep)
    d = rep.details
    run.say(f"negative Delta K: {d['negative']}/{d['total']} (epsilon = {d['epsilon']!r})")
    run.say(f"verdict: {rep.verdict}")


def _probe_lp(run, problem, m):
    line, F, vbar = _stationary(problem, m)
    rep = lp_nonextremum_probe(line, F, vbar, run.args.p, gamma=run.args.gamma)
    run.report("probe_lp", rep)
    run.say(f"p = {rep.parameters['p']}  gamma = {rep.parameters['gamma']!r}  n* = {rep.details['n_star']}")
    run.say(f"verdict: {rep.verdict}")


def _frechet(run, problem, m):
    line, F, vbar = _stationary(problem, m)
    rep = frechet_probe(line, F, vbar, run.args.p, s=run.args.s, gamma=run.args.gamma)
    run.report("frechet" if run.args.s is None else f"moment_s{run.args.s}", rep)
    run.say(f"p = {rep.parameters['p']}  gamma = {rep.parameters['gamma']!r}")
    run.say(f"fitted slope = {rep.fitted_slope!r}  expected = {rep.expected_slope!r}")
    run.say(f"verdict: {rep.verdict}")


def _candidates(run, problem, m):
    line, F, vbar = _stationary(problem, m)
    cand = dual_candidates(line, F)
    w = math.sqrt(2.0 * line.lam)
    rows = []
    for name, g in (("v1", cand.v1), ("v2", cand.v2), ("v3", cand.v3)):
        rows += [
            ProbeSample(name, i, x, val, ref, w, True)
            for i, (x, val, ref) in enumerate(zip(g.x, g.values, vbar.values))
        ]
    table = cand.table(vbar)
    run.files["candidates.json"] = _dumps({
        "sign_of_F": cand.sign,
        "sqrt_2_lambda": w,
        "endpoints": table,
        "columns": {"x_or_n": "x", "value_1": "v_j(x)", "value_2": "vbar(x)", "bound": "sqrt(2 lam)"},
    })
    run.files["candidates.csv"] = _table(rows)
    for name, info in table.items():
        run.say(f"{name}: v(a) = {info['endpoint_a']!r}  v(b) = {info['endpoint_b']!r}  admissible = {info['in_c0']}")
    run.ok &= cand.admissible == {"v1": False, "v2": False, "v3": True}


def _radial(run, problem, m):
    if not isinstance(problem, RadialProblem):
        raise ConfigError("the radial command needs a config with n, r2, r1")
    rep = radial_refutation(problem, m, run.args.trials, run.args.seed, run.args.p, run.args.gamma)
    run.report("radial", rep)
    d = rep.details
    run.say(f"gamma_n = {d['gamma_n']!r}  I(vbar) = {d['I_vbar']!r}")
    run.say(f"sup probe: {d['sup_probe']}  Lp probe: {d['lp_probe']} (n* = {d['lp_n_star']})")
    run.say(f"verdict: {rep.verdict}")


def _report(run, problem, m):
    a = run.args
    summary = assess_problem(_line_problem(problem), m, a.trials, a.seed, a.p, a.gamma, a.tol)
    if isinstance(problem, RadialProblem):
        summary["radial"] = {"n": problem.n, "gamma_n": gamma_n(problem.n)}
    run.files["summary.json"] = _dumps(summary)
    run.say(f"assertions_true: {summary['assertions_true']}")
    run.say(f"assertions_false: {summary['assertions_false']}")
    run.ok &= (
        summary["validation"]["balance_ok"]
        and summary["stationary"]["stationary_ok"]
        and summary["probes"]["sup_max"]["verdict"] == "pass"
        and summary["probes"]["lp_nonextremum"]["verdict"] == "pass"
    )


HANDLERS = {
    "validate": _validate,
    "solve": _solve,
    "probe-sup": _probe_sup,
    "probe-lp": _probe_lp,
    "frechet": _frechet,
    "candidates": _candidates,
    "radial": _radial,
    "report": _report,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    if args.command != "frechet":
        args.s = None
    try:
        problem, m = _load(args)
        state = _Run(args)
        HANDLERS[args.command](state, problem, m)
        if args.out is not None:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            for name, text in state.files.items():
                (out / name).write_text(text, encoding="utf-8", newline="")
            manifest = RunManifest(
                command=args.command,
                config=args.config,
                seed=args.seed,
                out=str(out),
                overrides={"m": m, "p": args.p, "tol": args.tol, "trials": args.trials,
                           "gamma": args.gamma, "s": args.s},
                timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
            )
            (out / "manifest.json").write_text(manifest.to_json(), encoding="utf-8")
    except ConfigError as exc:
        print(f"config error: {exc}", file=stderr)
        return EXIT_CONFIG
    except (DoubleWellError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CONFIG
    for line in state.lines:
        print(line, file=stdout)
    return EXIT_OK if state.ok else EXIT_VERDICT


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))
