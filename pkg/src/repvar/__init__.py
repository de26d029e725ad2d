"""Numerics for representation varieties of surface groups and free groups.

Schottky representations, first cohomology via Fox calculus, the Fox pairing
on H^1 and the topological obstruction of flat PSL_n bundles.
"""

from .group_core import (Family, GroupDescriptor, GroupElement, LieVector, ad, bilinear_form,
                         center_component_count, hermitian_ip, random_unitary)
from .surface_group import (GroupRingElement, Word, evaluate_cocycle, evaluate_word, fox_alpha,
                            fox_beta, partial_relator, relator, sharp)
from .representation import (FreeRep, StabilizerReport, SurfaceRep, conjugate, is_good,
                             is_schottky, is_strict_schottky, random_good_schottky,
                             relator_residual, stabilizer_lie_dim)
from .cohomology import (Cocycle, DimsReport, Subspace, b1, dims_report, free_cohomology_dims,
                         h1, relator_differential, schottky_tangent, z1)
from .symplectic import (FormKind, PairingMatrix, fox_pairing, is_isotropic, pairing_matrix,
                         verify_lagrangian)
from .topology import (ObstructionClass, lift_independence_check, obstruction_class,
                       schottky_triviality_sweep)

__version__ = "0.1.0"

__all__ = [
    "Family", "GroupDescriptor", "GroupElement", "LieVector", "ad", "bilinear_form",
    "center_component_count", "hermitian_ip", "random_unitary",
    "GroupRingElement", "Word", "evaluate_cocycle", "evaluate_word", "fox_alpha", "fox_beta",
    "partial_relator", "relator", "sharp",
    "FreeRep", "StabilizerReport", "SurfaceRep", "conjugate", "is_good", "is_schottky",
    "is_strict_schottky", "random_good_schottky", "relator_residual", "stabilizer_lie_dim",
    "Cocycle", "DimsReport", "Subspace", "b1", "dims_report", "free_cohomology_dims", "h1",
    "relator_differential", "schottky_tangent", "z1",
    "FormKind", "PairingMatrix", "fox_pairing", "is_isotropic", "pairing_matrix",
    "verify_lagrangian",
    "ObstructionClass", "lift_independence_check", "obstruction_class",
    "schottky_triviality_sweep",
]
