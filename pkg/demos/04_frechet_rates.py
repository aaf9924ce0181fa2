"""Normalised Taylor remainder along spike families.

For p < 4 the remainder divided by ||h_n||_p grows like n**((1-p+3 gamma)/p)
so K is not Frechet differentiable in Lp; for p >= 4 the ratio decays.
The output is plot-ready: log n against log ratio.
"""

import math

from doublewell import build_potential, sine_example, stationary_point
from doublewell.probe import frechet_probe

prob = sine_example()
F = build_potential(prob, 2048)
vbar = stationary_point(prob, F)

for p in (1.0, 2.0, 3.0, 4.0, 8.0, math.inf):
    rep = frechet_probe(prob, F, vbar, p)
    expected = f"{rep.expected_slope:+.4f}" if p < 4 else "decay only"
    column = "remainder ratio" if p < 4 else "bound ratio"
    tail = rep.samples[-1]
    value = tail.value_2 if p < 4 else tail.bound
    print(f"p = {p:>4}: gamma = {rep.parameters['gamma']:.4f}, slope {rep.fitted_slope:+.4f} "
          f"(expected {expected}), {column} at n = 1e12: {value:.3e}, {rep.details['regime']}")

print("\nsingle moments int g h**s / ||h||_p")
for s, p in ((2, 1.0), (3, 2.0), (4, 2.0), (2, 2.0), (4, 4.0)):
    rep = frechet_probe(prob, F, vbar, p, s=s)
    print(f"  s = {s}, p = {p}: slope {rep.fitted_slope:+.4f}, expected {rep.expected_slope:+.4f}")
