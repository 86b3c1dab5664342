"""Exact generalized differential complexes on polynomial tensor fields.

The N=2 complex on R^3 is the linear elasticity complex: strain, the
Saint-Venant tensor, displacement recovery and stress potentials.
"""
from .complex import (
    ComplexPosition,
    MembershipError,
    check_nilpotency,
    de_rham_scale,
    dv_differential,
    exterior_derivative,
    is_member,
    iterate_differential,
    project,
)
from .elasticity import (
    column_curl,
    has_saint_venant_symmetries,
    inc_from_W,
    incompatibility,
    kulkarni_nomizu,
    reconstruct_W,
    row_curl,
    saint_venant,
    scal,
    scal_2d,
    spin,
    sym_gradient,
    trace12,
)
from .hodge import (
    NotDivergenceFree,
    airy_stress,
    beltrami_stress,
    codifferential,
    dual_hessian_integrator,
    dual_K1,
    dual_K2,
    hodge_star,
    hodge_star_inverse,
    is_dual_member,
    recover_potential,
    stress_divergence,
)
from .homotopy import (
    cesaro_volterra,
    cesaro_volterra_K1,
    hessian,
    hessian_integrator,
    homotopy_residual,
    obstruction_K2,
    poincare_integrator,
    rigid_displacement,
)
from .io import dumps_field, field_from_document, field_to_document, load_field, loads_field
from .polynomial import ParseError, Polynomial, PolynomialError, coordinates, format_polynomial, parse_polynomial
from .tensor import SymmetryError, TensorError, TensorField, divergence, gradient, levi_civita
from .young import (
    Permutation,
    YoungDiagram,
    YoungTableau,
    dv_tableau,
    hook_product,
    projector_rank,
    schur_dimension,
    young_project,
)

__version__ = "0.1.0"
