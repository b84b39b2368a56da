"""
Charge quantization from the monopole bundle
=============================================

The line bundle labelled by an integer n glues two hemispheres with the
phase exp(i n phi).  Its Chern number is n, and a fractional label does not
glue at all.
"""

import numpy as np

from canonquant.monopole_bundle import chern_flux_integral, closure_defect, equator_winding
from canonquant.monopole_operators import gauge_consistency_defect

# the winding of the transition function around the equator and the flux of
# the curvature through the sphere are two independent routes to the same integer
for n in range(-3, 4):
    w = equator_winding(n, 100)
    flux = chern_flux_integral(n, 100, 200)
    print(f"n = {n:+d}   winding = {w.winding:+d}   flux / 2pi = {flux:+.10f}")

# exp(i nu phi) closes around the equator only for integer nu
for nu in (1, 2, 0.3, 0.5, 1.37):
    print(f"nu = {nu:<5}  closure defect = {closure_defect(nu):.4f}")

# the local generators on the two charts agree through the transition
# function only when the coupling is an integer
for nu in (1, 2, 0.5, 1.37):
    print(f"nu = {nu:<5}  gauge mismatch of J = {gauge_consistency_defect(nu):.2e}")

# the coupling eg = n/2 in these units
print("eg for n = 1..4:", np.arange(1, 5) / 2)
