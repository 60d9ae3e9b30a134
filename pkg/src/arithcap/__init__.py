"""Arithmetic capacities over Q: adelic polydisks, Green's matrices, matrix games."""

from .adelic import INF, Place, RadiusAssignment, absolute_value, product_formula_check, radius_norm
from .capacity import (
    MorphismDescriptor,
    PullbackCandidate,
    adjusted_exponent,
    curve_pullback_identity_check,
    finite_morphism_capacity_lower_bound,
    polydisk_sectional_capacity,
    pullback_sectional_capacity,
    theorem_compare_check,
)
from .config import Tolerances
from .fekete import WitnessPoint, WitnessScaling, enumerate_witnesses, find_scaling, verify_point
from .game import GameMatrix, game_value, shifted_value
from .green import (
    GreensMatrix,
    Normalization,
    WeightVector,
    cantor_rumely_capacity,
    equilibrium_weights,
    is_negative_definite,
    s_plus_support,
    sectional_capacity_from_weights,
    validate,
)
from .skolem import ExponentSet, MultiplicationMatrix, cayley_hamilton_check, char_poly, leading_unit_check, monomial_exponents

__version__ = "0.1.0"
