"""Graded rings, graded modules and their substructure lattices."""

from .axioms import check_grading_axioms, check_module_axioms
from .dump import dump_structure
from .quotients import quotient_graded_module, quotient_graded_ring
from .structures import (
    GradedModule,
    GradedRing,
    GradedStructure,
    HomogeneousElement,
    free_graded_module,
    group_ring,
    homogeneous_elements,
    module_self,
    trivial_grading,
)
from .submodules import (
    GradedIdeal,
    GradedSubmodule,
    as_ideal,
    as_submodule,
    brute_force_graded_submodules,
    enumerate_graded_ideals,
    enumerate_graded_submodules,
    ideal_generated,
    lattice_oracle_graded_submodules,
    submodule_generated,
)

__all__ = [
    "GradedIdeal",
    "GradedModule",
    "GradedRing",
    "GradedStructure",
    "GradedSubmodule",
    "HomogeneousElement",
    "as_ideal",
    "as_submodule",
    "brute_force_graded_submodules",
    "check_grading_axioms",
    "check_module_axioms",
    "dump_structure",
    "enumerate_graded_ideals",
    "enumerate_graded_submodules",
    "free_graded_module",
    "group_ring",
    "homogeneous_elements",
    "ideal_generated",
    "lattice_oracle_graded_submodules",
    "module_self",
    "quotient_graded_module",
    "quotient_graded_ring",
    "submodule_generated",
    "trivial_grading",
]
