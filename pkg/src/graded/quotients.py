"""Graded quotient rings and modules with their projections."""

from __future__ import annotations

import numpy as np

from src.algebra.groups import quotient_group
from src.algebra.rings import quotient_ring
from src.graded.structures import GradedModule, GradedRing
from src.graded.submodules import GradedIdeal, GradedSubmodule, is_submodule


def quotient_graded_ring(ring: GradedRing, ideal: GradedIdeal) -> GradedRing:
    """R / I with components (R_g + I) / I; ``projection`` keeps the quotient map."""
    if not is_submodule(ring.as_module, ideal.elements):
        raise ValueError(f"{sorted(ideal.elements)} is not an ideal of {ring.name}.")
    if not ring.is_graded_subset(ideal.elements):
        raise ValueError(f"Ideal {ideal.label()} of {ring.name} is not graded.")
    if not ideal.is_proper():
        raise ValueError(f"Cannot take the quotient of {ring.name} by the whole ring.")
    name = ring.name if ideal.is_zero() else f"{ring.name}/{ideal.label()}"
    quotient, projection = quotient_ring(ring.ring, ideal.elements, name=name)
    components = [frozenset(projection[code] for code in component) for component in ring.components]
    result = GradedRing(ring.grading_group, quotient, components, name=name)
    result.parent = ring
    result.projection = projection
    return result


def quotient_graded_module(module: GradedModule, submodule: GradedSubmodule) -> GradedModule:
    """M / P with components (M_g + P) / P and the induced action."""
    if not is_submodule(module, submodule.elements):
        raise ValueError(f"{sorted(submodule.elements)} is not a submodule of {module.name}.")
    if not module.is_graded_subset(submodule.elements):
        raise ValueError(f"Submodule {submodule.label()} of {module.name} is not graded.")
    carrier, projection = quotient_group(module.carrier, submodule.elements)
    lift = [0] * carrier.size
    for code in reversed(range(module.size)):
        lift[projection[code]] = code
    images = np.array(projection, dtype=np.int64)
    action = images[module.action[:, lift]]
    components = [frozenset(projection[code] for code in component) for component in module.components]
    name = module.name if submodule.is_zero() else f"{module.name}/{submodule.label()}"
    result = GradedModule(module.base, carrier, components, action, name=name)
    result.parent = module
    result.projection = projection
    return result
