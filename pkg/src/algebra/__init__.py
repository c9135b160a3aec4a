"""Finite abelian groups and finite commutative rings."""

from .axioms import check_group_axioms, check_ring_axioms
from .groups import FiniteAbelianGroup, cyclic_group, direct_product, quotient_group
from .limits import DEFAULT_MAX_MODULE_SIZE, DEFAULT_MAX_RING_SIZE, SizeLimits
from .reports import AxiomCheck, AxiomReport, Verdict
from .rings import FiniteCommRing, product_ring, quotient_ring, ring_integers_mod

__all__ = [
    "AxiomCheck",
    "AxiomReport",
    "DEFAULT_MAX_MODULE_SIZE",
    "DEFAULT_MAX_RING_SIZE",
    "FiniteAbelianGroup",
    "FiniteCommRing",
    "SizeLimits",
    "Verdict",
    "check_group_axioms",
    "check_ring_axioms",
    "cyclic_group",
    "direct_product",
    "product_ring",
    "quotient_group",
    "quotient_ring",
    "ring_integers_mod",
]
