"""Annulus in the plane reduced to a weighted interval problem.

Compares the energy of u(x) = upsilon(|x|) computed by a polar product
rule on the annulus with 2 pi K(upsilon'), then reruns the sup-norm and
L2 experiments on the reduced functional.
"""

import math

import numpy as np

from doublewell.problem import Profile
from doublewell.radial import (
    RadialProblem,
    build_radial_potential,
    direct_energy,
    eval_I,
    radial_refutation,
)

f = Profile("polynomial", {"coeffs": [-3.0, 2.0], "power_shift": -1}, 1.0, 2.0)
rp = RadialProblem(2, 1.0, 2.0, 1.5, 1.0, f, "annulus")
F = build_radial_potential(rp, 2048)
print(f"F(1.5) = {F.values[1024]:.12f} (closed form 1/6), L1 bound {rp.l1_bound:.4f}")

for a, w in ((0.3, 1.0), (0.8, 2.5)):
    direct = direct_energy(rp, lambda r: a * np.sin(w * r))
    reduced = eval_I(rp, F.like(a * w * np.cos(w * F.x)))
    print(f"upsilon = {a} sin({w} r): direct {direct:.12f}, reduced {reduced:.12f}")

rep = radial_refutation(rp, trials=500, seed=1)
print(f"\nI(vbar) = {rep.details['I_vbar']:.10f} = {rep.details['I_vbar'] / math.pi:.10f} pi")
for s in rep.series("candidate_endpoints"):
    print(f"  v{s.index}: ({s.value_1:+.6f}, {s.value_2:+.6f})  admissible = {s.value_1 == s.value_2 == 0.0}")
print(f"sup probe {rep.details['sup_probe']}, L2 probe {rep.details['lp_probe']}, verdict {rep.verdict}")
