"""Exact invariants of toric Fano surfaces, 3-Sasakian quotients, and their
Sasakian-Einstein 5-manifolds."""

from .diamond import (
    DiamondReport,
    family_galicki_lawson,
    family_general,
    isotropy_to_polygon,
    normalized_einstein_constant,
    polygon_to_isotropy,
    sasakian_volume,
    weights_to_diamond,
)
from .lattice import ConvexLatticePolygon, UnimodularMap
from .reduction import IsotropyData, WeightMatrix
from .toric import AugmentedFan, fan_from_polygon

__all__ = [
    "AugmentedFan",
    "ConvexLatticePolygon",
    "DiamondReport",
    "IsotropyData",
    "UnimodularMap",
    "WeightMatrix",
    "family_galicki_lawson",
    "family_general",
    "fan_from_polygon",
    "isotropy_to_polygon",
    "normalized_einstein_constant",
    "polygon_to_isotropy",
    "sasakian_volume",
    "weights_to_diamond",
]

__version__ = "0.1.0"
