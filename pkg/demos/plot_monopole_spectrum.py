"""
Angular momentum in a monopole field
====================================

Sections of the charge-n bundle carry total angular momentum j >= |n|/2.
The generators are built from ladder matrices on monopole harmonics and
checked against their local form J = L - (n/2) K on a grid.
"""

import numpy as np

from canonquant.monopole_operators import (
    Grid,
    commutator_defect,
    j2_spectrum,
    local_form_error,
    monopole_harmonic,
    omega_tilde,
)

# J^2 eigenvalues j(j+1) with multiplicities 2j+1, starting at j = n/2
for n in (0, 1, 2, 3):
    spec = j2_spectrum(n, 3)
    print(f"n = {n}:", ", ".join(f"{v:g} x{k}" for v, k in spec))

# su(2) relations hold to rounding in the spectral realization and to the
# finite-difference error on a 128 x 256 grid
print("spectral [J_i, J_j] defect:", commutator_defect(2, 6))
grid = Grid(128, 256)
print("grid [J_i, J_j] defect:    ", commutator_defect(2, 4, "grid", grid))
print("grid J vs spectral J:      ", local_form_error(2, 4, grid))

# the multiplier contributes a constant n/2 to J_z and -(n/2) y/(1 - z) to J_y
x = np.array([0.0, 1.0, 0.0])
print("omega_tilde_z at n = 2:", omega_tilde("z", x, 2))
print("omega_tilde_y at (0, 1, 0), n = 2:", omega_tilde("y", x, 2))

# |Y_{1,1}| for n = 2 is (1 - cos theta) / 2 up to normalization: zero only at the north pole
theta = np.linspace(0.1, np.pi - 0.1, 5)
print("|Y_{1,1}| along a meridian:", np.abs(monopole_harmonic(2, 1, 1, theta, 0.0)).round(4))
