"""Metaplectic ice, the quantum Fock space and ribbon symmetric functions."""

from .coeff_ring import Ring, RingElem, SeriesCap, StructureError
from .fock import FockVector, J_apply, J_neg_apply, straighten
from .heisenberg import llt, metaplectic_sf, super_llt
from .lattice import DELTA, GAMMA, delta_row_element, gamma_row_element, multi_row_element
from .partitions import n_core, partitions_of, ribbon_tableaux

__version__ = "0.1.0"

__all__ = [
    "DELTA",
    "GAMMA",
    "FockVector",
    "J_apply",
    "J_neg_apply",
    "Ring",
    "RingElem",
    "SeriesCap",
    "StructureError",
    "delta_row_element",
    "gamma_row_element",
    "llt",
    "metaplectic_sf",
    "multi_row_element",
    "n_core",
    "partitions_of",
    "ribbon_tableaux",
    "straighten",
    "super_llt",
]
