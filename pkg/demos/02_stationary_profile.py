"""The unique stationary derivative profile for the sine load.

Builds F = -int f on [0, 2 pi], solves vbar = z2(F) node-wise, checks the
derivative of K vanishes in twenty directions and writes the certified
sup-norm radius around vbar.
"""

import numpy as np

from doublewell import build_potential, local_max_certificate, sine_example, stationary_point
from doublewell.assessment import stationarity_residuals
from doublewell.functional import eval_K
from doublewell.probe import integrate_profile

prob = sine_example()
F = build_potential(prob, 2048)
vbar = stationary_point(prob, F)
ubar = integrate_profile(vbar)

print(f"F(pi) = {F.values[1024]:.12f}  (closed form 1)")
print(f"vbar(pi) = {vbar.values[1024]:.10f}, vbar(0) = {vbar.values[0]}, vbar(2 pi) = {vbar.values[-1]}")
print(f"K(vbar) = {eval_K(prob, F, vbar):.10f}")
print(f"u(2 pi) - u(0) = {ubar.values[-1]:.8f}")

res = stationarity_residuals(prob, F, vbar, 20)
print(f"max |T_vbar(sin k pi t)|, k = 1..20: {np.max(np.abs(res)):.2e}")

c = local_max_certificate(prob, vbar)
print(f"\ncertificate: gamma = {c.gamma_bar:.8f}, eta = {c.eta:.8f}, epsilon = {c.epsilon:.8f}")
for t in (0.5, 1.0, 2.0, c.epsilon, 3.0):
    print(f"  bracket bound at ||h|| = {t:.4f}: {c.bound(t): .6f}")
