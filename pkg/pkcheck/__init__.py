"""Exact existence checks for polyhedral Kähler metrics on weighted arrangements."""

from .arrangement import Arrangement, Flat, Hyperplane
from .checker import CheckReport, check_theorem
from .lattice import IntersectionLattice, build_lattice
from .weights import WeightedArrangement

__all__ = [
    "Arrangement",
    "CheckReport",
    "Flat",
    "Hyperplane",
    "IntersectionLattice",
    "WeightedArrangement",
    "build_lattice",
    "check_theorem",
]
