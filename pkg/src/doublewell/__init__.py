"""Stationary points and extremum probes for a 1D double-well functional.

    J(u) = int_a^b theta (H(u') - f u),   H(y) = (y**2/2 - lam)**2 / 2

Everything works on the derivative ``v = u'`` through the reduced
functional ``K(v) = int theta (H(v) - F v)``.
"""

__version__ = "0.1.0"

from .assessment import CLAIMS, assess_problem
from .cubic import (
    BranchTriple,
    EBranchTriple,
    correspondence_check,
    e_roots,
    g_branch,
    g_roots,
    kappa,
    solve_e,
    solve_g,
)
from .errors import (
    CertificateError,
    ConfigError,
    DomainError,
    DoubleWellError,
    GridMismatch,
    QuadratureError,
)
from .functional import eval_gateaux, eval_K, lp_norm, taylor_decompose
from .probe import (
    Candidates,
    Certificate,
    ProbeReport,
    SpikeFamily,
    frechet_probe,
    dual_candidates,
    local_max_certificate,
    lp_nonextremum_probe,
    stationary_point,
    sup_norm_probe,
)
from .problem import (
    GridFunction,
    Problem,
    Profile,
    ValidationReport,
    build_potential,
    sine_example,
    validate_forcing,
)
from .radial import (
    RadialProblem,
    build_radial_potential,
    direct_energy,
    eval_I,
    gamma_n,
    radial_candidates,
    radial_refutation,
)

__all__ = [
    "CLAIMS",
    "assess_problem",
    "eval_gateaux",
    "eval_K",
    "lp_norm",
    "taylor_decompose",
    "__version__",
    "BranchTriple",
    "EBranchTriple",
    "correspondence_check",
    "e_roots",
    "g_branch",
    "g_roots",
    "kappa",
    "solve_e",
    "solve_g",
    "CertificateError",
    "ConfigError",
    "DomainError",
    "DoubleWellError",
    "GridMismatch",
    "QuadratureError",
    "Candidates",
    "Certificate",
    "ProbeReport",
    "SpikeFamily",
    "frechet_probe",
    "dual_candidates",
    "local_max_certificate",
    "lp_nonextremum_probe",
    "stationary_point",
    "sup_norm_probe",
    "GridFunction",
    "Problem",
    "Profile",
    "ValidationReport",
    "build_potential",
    "sine_example",
    "validate_forcing",
    "RadialProblem",
    "build_radial_potential",
    "direct_energy",
    "eval_I",
    "gamma_n",
    "radial_candidates",
    "radial_refutation",
]
