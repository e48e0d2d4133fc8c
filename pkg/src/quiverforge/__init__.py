"""Triangulation quivers, Brauer graph and triangulation algebras, and the
surfaces and modules around them, computed with exact arithmetic."""

from .errors import QuiverforgeError
from .field import GF, QQ, Field
from .ribbon import Permutation, Quiver, RibbonQuiver, are_isomorphic, build_ribbon
from .triquiver import (
    MultiplicityData, TriangulationQuiver, enumerate_triangulation_quivers, make_data,
    mutate, standard,
)

__all__ = [
    "QuiverforgeError", "GF", "QQ", "Field", "Permutation", "Quiver", "RibbonQuiver",
    "are_isomorphic", "build_ribbon", "MultiplicityData", "TriangulationQuiver",
    "enumerate_triangulation_quivers", "make_data", "mutate", "standard",
]
__version__ = "0.1.0"
