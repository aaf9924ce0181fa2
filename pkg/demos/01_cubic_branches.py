"""Three real branches of z (z**2/2 - lam) = A and their dual partners.

Walks A across (-kappa**3, kappa**3), prints the branch triple, and shows
that the roots of the dual cubic 2 y**2 (lam + y/nu) = A**2 pair with the
z-branches through z * y = A, with the middle z-branch matched to the
smallest dual root.
"""

import numpy as np

from doublewell.cubic import correspondence_check, e_roots, g_roots, kappa

lam, nu = 3.0, 1.0
k3 = kappa(lam) ** 3
print(f"lam = {lam}, kappa = {kappa(lam):.6f}, kappa**3 = {k3:.6f}\n")

print(f"{'A':>8} {'z1':>10} {'z2':>10} {'z3':>10}")
for A in np.linspace(-0.95, 0.95, 9) * k3:
    z1, z2, z3 = g_roots(A, lam)
    print(f"{A:8.4f} {z1:10.6f} {z2:10.6f} {z3:10.6f}")

print("\nz1 and z3 sit in the wells near -+sqrt(2 lam); z2 stays in (-kappa, kappa).")
print(f"\n{'A':>8} {'E1':>10} {'E2':>10} {'E3':>10}  max|z_j y - A|")
for A in np.linspace(0.1, 0.95, 5) * k3:
    e1, e2, e3 = e_roots(A * A, lam, nu)
    print(f"{A:8.4f} {e1:10.6f} {e2:10.6f} {e3:10.6f}  {max(correspondence_check(A, lam, nu)):.1e}")
