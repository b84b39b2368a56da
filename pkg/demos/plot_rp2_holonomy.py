"""
The nonorientable line bundle over RP^2
=======================================

Odd functions on the sphere are sections of a line bundle over the
projective plane.  Transport around a loop that lifts to a path from x to -x
returns with a sign flip.
"""

import numpy as np

from canonquant.rp2 import great_circle_path, holonomy_transport, parity_generators, projector_p, small_circle_path

# angular momentum restricted to odd (or even) harmonics
for sector in ("odd", "even"):
    ev = np.linalg.eigvalsh(parity_generators(sector, 5).J2.entries)
    values, counts = np.unique(ev.round(8), return_counts=True)
    print(f"{sector:>4}:", dict(zip(values.tolist(), counts.tolist())))

# holonomy: small loops are trivial, the generator of pi_1(RP^2) gives -1
x0 = np.array([1.0, 0.0, 0.0])
print("contractible   ", holonomy_transport(small_circle_path(0.1, 1000)))
print("noncontractible", holonomy_transport(great_circle_path(x0, [0, 0, 1], np.pi, 10000)))
print("twice around   ", holonomy_transport(great_circle_path(x0, [0, 0, 1], 2 * np.pi, 20000)))

# the Serre-Swan projector is even, so it lives on RP^2
x = np.array([0.6, 0.0, 0.8])
print("p(x) == p(-x):", np.allclose(projector_p(x), projector_p(-x)))
