"""Casimir force scaling function across temperature and aspect ratio.

For tall rectangles (rho >= 1) the force is the strip force minus the
strip potential; for wide ones the exchanged-direction expression is used,
built from the strip force function and the corner combination
x * theta_sc'(x), which stays finite (-1/8) at the critical point.  The
force is repulsive at criticality for nearly square systems, a corner
effect, and turns attractive below rho_0 ~ 0.5235.
"""

from casimir_rect import find_rho0, vartheta_total

RHOS = (0.25, 0.5, 1.0, 2.0)
XS = [-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0]

header = "x".rjust(6) + "".join(f"  rho={r:<10g}" for r in RHOS)
print("Force scaling function vartheta(x, rho):")
print(header)
for x in XS:
    row = f"{x:6.1f}"
    for rho in RHOS:
        row += f"  {vartheta_total(x, rho):+12.8f}"
    print(row)

print()
print("At criticality the sign follows the Eisenstein series:")
rho0 = find_rho0()
for rho in (0.25, 0.45, rho0, 0.6, 1.0):
    v = vartheta_total(0.0, rho)
    kind = "attractive" if v < 0 else ("zero" if abs(v) < 1e-12 else "repulsive")
    print(f"  rho = {rho:8.6f}: vartheta = {v:+.10f}   {kind}")

print()
print("Consistency of the two branches at the square point (x = -2):")
print(f"  rho -> 1-  : {vartheta_total(-2.0, 1.0 - 1e-9):+.12f}")
print(f"  rho  = 1   : {vartheta_total(-2.0, 1.0):+.12f}")
print(f"  rho -> 1+  : {vartheta_total(-2.0, 1.0 + 1e-9):+.12f}")
