"""Canonical quantization on nontrivial bundles: monopole and RP^2 examples."""

__version__ = "0.1.0"

from .errors import DomainError, ResolutionError
from .su2 import (
    Chart,
    SpherePoint,
    SU2Element,
    Su2AlgebraElement,
    hopf_projection,
    su2_exp,
    su2_multiply,
)
from .monopole_bundle import MonopoleBundle, chern_flux_integral, closure_defect, equator_winding
from .monopole_operators import commutator_defect, j2_spectrum, monopole_harmonic, omega_tilde
from .rp2 import holonomy_transport, parity_generators, projector_p
from .classical import PhaseState, classical_bracket_check, integrate_motion
from .canonical_group import cocycle_defect

__all__ = [
    "__version__",
    "DomainError",
    "ResolutionError",
    "Chart",
    "SpherePoint",
    "SU2Element",
    "Su2AlgebraElement",
    "hopf_projection",
    "su2_exp",
    "su2_multiply",
    "MonopoleBundle",
    "chern_flux_integral",
    "closure_defect",
    "equator_winding",
    "commutator_defect",
    "j2_spectrum",
    "monopole_harmonic",
    "omega_tilde",
    "holonomy_transport",
    "parity_generators",
    "projector_p",
    "PhaseState",
    "classical_bracket_check",
    "integrate_motion",
    "cocycle_defect",
]
