"""Domain value objects for Cantor space."""

from .cone import EMPTY_ADDRESS, Cone, ConePartition, are_disjoint, covers, kraft_sum
from .rational_point import RationalPoint, point_in_cone, primitive_root, tail

__all__ = [
    "EMPTY_ADDRESS",
    "Cone",
    "ConePartition",
    "RationalPoint",
    "are_disjoint",
    "covers",
    "kraft_sum",
    "point_in_cone",
    "primitive_root",
    "tail",
]
