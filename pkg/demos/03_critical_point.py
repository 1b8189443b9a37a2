"""Critical-point closed forms: q-series, modular functions, sign change.

At the critical point the residual partition function of the rectangle is
a pure q-series with rational coefficients, summable in closed form as the
inverse fourth root of the q-Pochhammer symbol.  The strip force becomes
the weight-two Eisenstein series, the finite part of the potential is a
quarter of log eta, and the total force changes sign at the aspect ratio
where E2 vanishes on the imaginary axis.
"""

import math
from fractions import Fraction

from casimir_rect import (
    casimir_amplitude,
    critical_series_coefficients,
    eisenstein_E2,
    find_rho0,
    log_dedekind_eta,
    log_q_pochhammer,
    sigma_series,
    vartheta_total,
)

print("Series coefficients of Sigma(0, rho) in q = exp(-2 pi rho):")
for n, c in enumerate(critical_series_coefficients(5), start=1):
    frac = Fraction(c).limit_denominator(10**6)
    print(f"  order {n}: {c:.15f} = {frac}")

print()
print("Sigma(0, rho) vs the q-Pochhammer closed form (q)_inf^(-1/4):")
for rho in (0.6, 1.0, 2.0):
    series = sigma_series(0.0, rho, 10).value
    closed = math.exp(-0.25 * log_q_pochhammer(rho))
    print(f"  rho = {rho}: series = {series:.15f}, closed = {closed:.15f}, "
          f"diff = {series - closed:.1e}")

print()
print("Casimir amplitude Delta(rho) = log(eta(i rho))/4:")
for rho in (1.0, 1.5, 2.0):
    print(f"  rho = {rho}: Delta = {casimir_amplitude(rho):.12f}  "
          f"(log eta = {log_dedekind_eta(rho):.12f})")

print()
print("Critical force vartheta(0, rho) = (pi/48) E2(i rho):")
for rho in (0.4, 0.5235, 0.7, 1.0, 2.0):
    force = vartheta_total(0.0, rho)
    print(f"  rho = {rho:6.4f}: vartheta = {force:+.10f}   "
          f"E2 = {eisenstein_E2(rho):+.10f}")

rho0 = find_rho0()
print()
print(f"Sign change at rho_0 = {rho0:.18f}")
print(f"  vartheta(0, rho_0) = {vartheta_total(0.0, rho0):+.2e}")
print(f"  vartheta(0, 1)     = {vartheta_total(0.0, 1.0):+.10f}  (= 1/16: "
      f"square-geometry corner repulsion)")
