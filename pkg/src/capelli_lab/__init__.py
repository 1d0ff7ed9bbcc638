"""Exact verification of Capelli elements over finite group algebras."""

__version__ = "0.1.0"

from .algebra import AlgebraElement, character_element, class_sum
from .catalog import catalog_group, catalog_irreps, catalog_names
from .cyclo import Cyclo, cyclotomic_polynomial
from .groups import (
    Group,
    build_group_from_permutations,
    build_group_from_table,
    conjugacy_classes,
    exponent,
)
from .irreps import Irrep, IrrepSet, E_matrix, validate, validate_complete
from .ncdet import ZPoly, coldet, doubledet, rowdet

__all__ = [
    "AlgebraElement",
    "Cyclo",
    "E_matrix",
    "Group",
    "Irrep",
    "IrrepSet",
    "ZPoly",
    "build_group_from_permutations",
    "build_group_from_table",
    "catalog_group",
    "catalog_irreps",
    "catalog_names",
    "character_element",
    "class_sum",
    "coldet",
    "conjugacy_classes",
    "cyclotomic_polynomial",
    "doubledet",
    "exponent",
    "rowdet",
    "validate",
    "validate_complete",
]
