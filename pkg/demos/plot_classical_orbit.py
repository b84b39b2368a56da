"""
A charge orbiting a monopole
============================

The Poincare vector J = m q x q' - mu q/|q| is conserved, and the particle
moves on a cone around it.
"""

import numpy as np

from canonquant.classical import (
    PhaseState,
    classical_bracket_check,
    conservation_report,
    convergence_order,
    integrate_motion,
    random_states,
)

s0 = PhaseState([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], m=1.0, mu=0.5)
tr = integrate_motion(s0, dt=1e-3, steps=100_000)
rep = conservation_report(tr)
print("J(0) =", tr.poincare()[0], " J(T) =", tr.poincare()[-1])
for key in ("J_drift", "speed_drift", "J_dot_rhat_defect", "cone_angle_drift"):
    print(f"{key:>18}: {rep[key]:.2e}")

# RK4 error falls as dt^4
slope, drifts = convergence_order(PhaseState([0.1, 0, 0], [0, 3, 0.5], 1.0, 0.3))
print("drifts", np.array(drifts), "slope", round(slope, 3))

# {J_i, J_j} = -eps_ijk J_k in canonical variables, in either gauge
samples = random_states(np.random.default_rng(0), 100, mu=0.5)
print("bracket defect, N gauge:", classical_bracket_check(samples, "N"))
print("bracket defect, S gauge:", classical_bracket_check(samples, "S"))
