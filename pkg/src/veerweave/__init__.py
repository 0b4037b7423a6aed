"""Combinatorial engine for veering triangulations and the surfaces
they carry: ladder decompositions, dual and flow graphs, dynamic
planes, shearing regions, edge sequences, and Birkhoff-section
certificates with explicit complexity bounds."""

from .errors import (
    BudgetError,
    ConstructionError,
    FormatError,
    InvalidIdError,
    ValidationError,
    VeerweaveError,
)
from .triangulation import VeeringTriangulation, parse_native, emit_native

__all__ = [
    "BudgetError",
    "ConstructionError",
    "FormatError",
    "InvalidIdError",
    "ValidationError",
    "VeerweaveError",
    "VeeringTriangulation",
    "parse_native",
    "emit_native",
]
