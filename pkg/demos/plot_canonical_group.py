"""
Central terms of canonical groups
=================================

The momentum map of R^3 x| SU(2) on T*R^3 is a Lie algebra homomorphism, while
the abelian group of translations and covector shifts picks up the constant
Heisenberg term a1.b2 - a2.b1.
"""

import numpy as np

from canonquant.canonical_group import AlgebraElementTilde, Shift, cocycle_defect, random_cotangent_points
from canonquant.su2 import Su2AlgebraElement

rng = np.random.default_rng(1)
pts = random_cotangent_points(rng, 100)

A1 = AlgebraElementTilde(rng.normal(size=3), Su2AlgebraElement(rng.normal(size=3)))
A2 = AlgebraElementTilde(rng.normal(size=3), Su2AlgebraElement(rng.normal(size=3)))
print("rotation family, max |z|:", cocycle_defect(A1, A2, pts).max_abs)

a1, b1, a2, b2 = rng.normal(size=(4, 3))
r = cocycle_defect(AlgebraElementTilde(a1, Shift(b1)), AlgebraElementTilde(a2, Shift(b2)), pts)
print("abelian family, z =", r.mean, " spread", r.spread, " a1.b2 - a2.b1 =", a1 @ b2 - a2 @ b1)
