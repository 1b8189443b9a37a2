"""Casimir potential, its corner-induced divergence, and the free-energy
constants of the corner and surfaces.

The potential decomposes into a strip part, a rho-independent
surface-corner part, and the strip residual.  The corners make the
potential diverge logarithmically at criticality with amplitude 1/8 and a
jump (3/4) log 2 between the phases, mirroring the corner free energy of
the infinite system; the ordered side carries the extra -log 2 of the
two degenerate states.
"""

import math

from casimir_rect import (
    Psi,
    corner_free_energy,
    surface_critical_value,
    surface_free_energy,
    theta_sc,
    theta_oo,
    theta_total,
)

LOG2 = math.log(2.0)

print("Potential decomposition at x = -2, rho = 2:")
x, rho = -2.0, 2.0
parts = (theta_oo(x), theta_sc(x) / rho, Psi(x, rho, 8))
print(f"  strip part        : {parts[0]:+.10f}")
print(f"  surface-corner/rho: {parts[1]:+.10f}")
print(f"  strip residual    : {parts[2]:+.10f}")
print(f"  total             : {theta_total(x, rho):+.10f}  (sum {sum(parts):+.10f})")

print()
print("Corner log law: theta_sc(x) + log|x|/8 + (3/4) log 2 sign(x) is bounded:")
for x in (0.1, 0.01, 0.001, -0.1, -0.01, -0.001):
    combo = theta_sc(x) + math.log(abs(x)) / 8.0 + 0.75 * LOG2 * math.copysign(1, x)
    print(f"  x = {x:+8.3f}: theta_sc = {theta_sc(x):+12.8f}   regular part = {combo:+.6f}")

print()
print("Ordered-phase limit (two degenerate states):")
print(f"  theta_sc(-15) = {theta_sc(-15.0):+.8f}   vs -log 2 = {-LOG2:+.8f}")
for rho in (1.0, 2.0):
    print(f"  theta(-15, {rho:g}) = {theta_total(-15.0, rho):+.8f}   vs "
          f"-log(2)/rho = {-LOG2 / rho:+.8f}")

print()
print("Corner free energy expansion near criticality:")
for tau in (1e-3, -1e-3):
    r = corner_free_energy(tau)
    labeled = ", ".join(f"{k} = {v:+.6f}" for k, v in r.terms.items())
    print(f"  tau = {tau:+.0e}: f_c = {r.value:+.6f}   ({labeled})")
print(f"  jump across tau = 0: {corner_free_energy(1e-9).value - corner_free_energy(-1e-9).value:+.9f}"
      f"  (= 1.5 log 2 = {1.5 * LOG2:+.9f})")

print()
print(f"Critical surface free energy f_s(0) = {surface_critical_value():.13f}")
r = surface_free_energy(1e-4)
print(f"  expansion at tau = 1e-4: {r.value:.13f} with terms {list(r.terms)}")
