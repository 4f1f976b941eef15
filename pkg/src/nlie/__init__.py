"""Exact computations with n-Lie (Filippov) algebras.

Structure constants, Nijenhuis operators and the deformations they generate,
Rota-Baxter and O-operators, and constructions of ternary brackets from
commutative associative algebras.  All arithmetic is exact over Q or Q(i).
"""

from .algebra import (
    NLieAlgebra,
    ad_action,
    bracket_eval,
    check_fi3,
    check_filippov,
    check_leibniz_fundamental,
    circle_product,
    derivation_space,
    is_derivation,
    is_homomorphism,
    wedge,
)
from .catalog import builtin, random_map
from .cohomology import (
    Cochain,
    Representation,
    adjoint_rep,
    check_d_squared,
    check_representation,
    representation_axioms,
    coboundary,
    nr_bracket,
    semidirect_product,
)
from .constructions import (
    CommAssocAlgebra,
    bracket_D1_D2,
    bracket_D1_D2_D3,
    bracket_f_D,
    check_comm_assoc,
    check_nijenhuis_persistence,
    check_nijenhuis_persistence_assoc,
    det3_expansion_check,
    extend_by_functional,
    is_nijenhuis_assoc,
)
from .deform import (
    DeformationFamily,
    check_deformation_conditions,
    check_trivial,
    deformed_bracket,
    evaluate_at,
    is_nijenhuis,
    is_nijenhuis_unshuffle,
    omega_family,
    polynomial_map,
    power_identity,
)
from .maps import LinearFunctional, LinearMap
from .operators import classify_map, is_o_operator, is_rota_baxter, lift_o_operator
from .report import VerificationReport
from .scalars import QQ, QQI, GaussianRational, field_arith, format_scalar, parse_scalar

__all__ = [name for name in dir() if not name.startswith("_")]
