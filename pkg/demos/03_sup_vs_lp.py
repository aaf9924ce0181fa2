"""Local maximum in the sup norm, no extremum in L2.

Random smooth perturbations inside the certified ball always lower K.
Tall thin spikes with vanishing L2 norm eventually raise it, while
shrinking smooth bumps with the same L2 decay lower it.
"""

from doublewell import build_potential, sine_example, stationary_point
from doublewell.probe import lp_nonextremum_probe, sup_norm_probe

prob = sine_example()
F = build_potential(prob, 2048)
vbar = stationary_point(prob, F)

sup = sup_norm_probe(prob, F, vbar, trials=1000, seed=42)
worst = max(s.value_2 for s in sup.samples)
print(f"sup-norm ball: {sup.details['negative']}/{sup.details['total']} trials lowered K; largest change {worst:.3e}")

lp = lp_nonextremum_probe(prob, F, vbar, 2.0, gamma=0.9)
print(f"\nspikes, p = 2, gamma = 0.9 (first n with K raised for good: {lp.details['n_star']:.0f})")
print(f"{'n':>9} {'||h||_2':>10} {'Delta K':>12} {'error bound':>12}")
for s in lp.series("lp_not_max"):
    print(f"{s.x_or_n:9.0f} {s.value_1:10.6f} {s.value_2:12.4e} {s.bound:12.2e}")
print("\nsmooth bumps")
for s in lp.series("lp_not_min"):
    print(f"  k = {s.index}: ||h||_2 = {s.value_1:.5f}, Delta K = {s.value_2:.5e}")
