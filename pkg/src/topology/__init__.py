"""The Zariski topology on Υ_M as a finite space, and its structural checks."""

from .order import SpecializationOrder, export_dot, render_dot, specialization_order
from .properties import (
    check_weakly_spectral,
    generic_points,
    irreducible_components,
    is_closed_point,
    is_connected,
    is_irreducible,
    is_quasi_compact,
    is_T0,
    is_T1,
)
from .space import FiniteTopologySpace, build_ring_zariski, build_zariski, closure, ring_spectrum, try_build_zariski
from .subsets import point_subsets

__all__ = [
    "FiniteTopologySpace",
    "SpecializationOrder",
    "build_ring_zariski",
    "build_zariski",
    "check_weakly_spectral",
    "closure",
    "export_dot",
    "generic_points",
    "irreducible_components",
    "is_T0",
    "is_T1",
    "is_closed_point",
    "is_connected",
    "is_irreducible",
    "is_quasi_compact",
    "point_subsets",
    "render_dot",
    "ring_spectrum",
    "specialization_order",
    "try_build_zariski",
]
