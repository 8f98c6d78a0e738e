"""Exact arithmetic in truncated total Cohen groups.

The package computes with tuples of homotopy-group coordinates under the
circled-star multiplication (coordinatewise sum plus binomially weighted
Whitehead-product corrections), both over a free formal bracket algebra and
over concrete finitely generated abelian coordinate groups, and ships an
exponent calculator for spheres, space forms and projective spaces.
"""

from .abelian import INFINITE, FgAbGroup, GroupElement, GroupMismatchError
from .phi import binom_mod_p, phi, phi_delta, sum_binom2
from .whitehead import (
    BracketSymbol,
    FormalClass,
    Generator,
    ModelMismatchError,
    RelationProfile,
    TargetModel,
    swap_sign,
)
from .cohen import (
    CohenElement,
    closed_two_coordinate_power,
    element_order,
    group_p_exponent,
    identity,
    inverse,
    mul,
    odd_position_power_check,
    power,
    project,
    torsion_coordinates_check,
)
from .exponents import ExponentValue, SpaceDescriptor, cohen_exponent, ses_combine, sphere_exponent
from .targets import (
    HomotopyTable,
    bundled_table,
    concrete_h_space,
    even_sphere,
    hp_infty_model,
    load_model,
    load_table,
    odd_sphere,
)

__all__ = [
    "INFINITE",
    "FgAbGroup",
    "GroupElement",
    "GroupMismatchError",
    "phi",
    "phi_delta",
    "binom_mod_p",
    "sum_binom2",
    "RelationProfile",
    "Generator",
    "BracketSymbol",
    "FormalClass",
    "TargetModel",
    "ModelMismatchError",
    "swap_sign",
    "CohenElement",
    "identity",
    "mul",
    "inverse",
    "power",
    "closed_two_coordinate_power",
    "element_order",
    "project",
    "torsion_coordinates_check",
    "odd_position_power_check",
    "group_p_exponent",
    "ExponentValue",
    "SpaceDescriptor",
    "sphere_exponent",
    "cohen_exponent",
    "ses_combine",
    "HomotopyTable",
    "odd_sphere",
    "even_sphere",
    "hp_infty_model",
    "concrete_h_space",
    "load_model",
    "load_table",
    "bundled_table",
]
