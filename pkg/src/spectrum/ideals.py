"""Colon ideals, annihilators, graded radicals and (weakly) prime tests."""

from __future__ import annotations

import logging
from typing import FrozenSet, List, Optional

import numpy as np

from src.algebra.reports import Verdict
from src.graded.structures import GradedModule, GradedRing
from src.graded.submodules import (
    GradedIdeal,
    GradedSubmodule,
    enumerate_graded_ideals,
    ideal_product,
    is_submodule,
)

logger = logging.getLogger(__name__)


def _membership(size: int, elements: FrozenSet[int]) -> np.ndarray:
    mask = np.zeros(size, dtype=bool)
    mask[list(elements)] = True
    return mask


def colon_ideal(submodule: GradedSubmodule, module: Optional[GradedModule] = None) -> GradedIdeal:
    """(P :_R M) = {r in R : rM is inside P}."""
    module = module or submodule.owner
    if not is_submodule(module, submodule.elements):
        raise ValueError(f"{sorted(submodule.elements)} is not a submodule of {module.name}.")
    inside = _membership(module.size, submodule.elements)
    rows = np.flatnonzero(inside[module.action].all(axis=1))
    members = frozenset(int(code) for code in rows)
    ring = module.base
    if not (is_submodule(ring.as_module, members) and ring.is_graded_subset(members)):
        raise RuntimeError(f"Colon ideal of {submodule.label()} in {module.name} is not a graded ideal.")
    return GradedIdeal(ring.as_module, members)


def annihilator(module: GradedModule) -> GradedIdeal:
    """Ann_R(M) = (0 :_R M)."""
    return colon_ideal(GradedSubmodule(module, frozenset({module.zero})), module)


def graded_radical(ideal: GradedIdeal) -> GradedIdeal:
    """Grad(I): elements whose homogeneous components each have a power in I."""
    if not ideal.is_proper():
        raise ValueError("The graded radical is defined for proper ideals only.")
    ring = ideal.ring
    nilpotent_mod_ideal = set()
    for code in ring.homogeneous_codes:
        power = code
        # powers of a finite element cycle within |R| steps
        for _ in range(ring.size):
            if power in ideal.elements:
                nilpotent_mod_ideal.add(code)
                break
            power = ring.mul(power, code)
    members = frozenset(
        code for code in ring.carrier if all(part in nilpotent_mod_ideal for part in ring.homogeneous_parts(code))
    )
    if not (is_submodule(ring.as_module, members) and ring.is_graded_subset(members)):
        raise RuntimeError(f"Graded radical of {ideal.label()} is not a graded ideal.")
    return GradedIdeal(ideal.owner, members)


def _outside_homogeneous(structure_codes: tuple[int, ...], elements: FrozenSet[int]) -> np.ndarray:
    return np.array([code for code in structure_codes if code not in elements], dtype=np.int64)


def is_graded_weakly_prime_ideal(ideal: GradedIdeal) -> Verdict:
    """Proper, and 0 != ab in I with a, b homogeneous forces a in I or b in I."""
    if not ideal.is_proper():
        return Verdict(False, detail="ideal is not proper")
    ring = ideal.ring
    outside = _outside_homogeneous(ring.homogeneous_codes, ideal.elements)
    if outside.size == 0:
        return Verdict(True)
    products = ring.ring.table[np.ix_(outside, outside)]
    bad = (products != 0) & _membership(ring.size, ideal.elements)[products]
    hits = np.argwhere(bad)
    if hits.size:
        a, b = (int(outside[index]) for index in hits[0])
        return Verdict(False, witness=(a, b), detail=f"0 != {a}*{b} lies in the ideal, neither factor does")
    return Verdict(True)


def is_graded_prime_ideal(ideal: GradedIdeal) -> Verdict:
    """Proper, and ab in I with a, b homogeneous forces a in I or b in I."""
    if not ideal.is_proper():
        return Verdict(False, detail="ideal is not proper")
    ring = ideal.ring
    outside = _outside_homogeneous(ring.homogeneous_codes, ideal.elements)
    if outside.size == 0:
        return Verdict(True)
    products = ring.ring.table[np.ix_(outside, outside)]
    hits = np.argwhere(_membership(ring.size, ideal.elements)[products])
    if hits.size:
        a, b = (int(outside[index]) for index in hits[0])
        return Verdict(False, witness=(a, b), detail=f"{a}*{b} lies in the ideal, neither factor does")
    return Verdict(True)


def is_graded_weakly_prime_pairs(ideal: GradedIdeal, ideals: Optional[List[GradedIdeal]] = None) -> Verdict:
    """Ideal-pair form: {0} != I1 I2 inside P forces I1 or I2 inside P."""
    if not ideal.is_proper():
        return Verdict(False, detail="ideal is not proper")
    candidates = ideals if ideals is not None else enumerate_graded_ideals(ideal.ring)
    outside = [candidate for candidate in candidates if not candidate <= ideal]
    for index, left in enumerate(outside):
        for right in outside[index:]:
            product = ideal_product(left, right)
            if not product.is_zero() and product <= ideal:
                return Verdict(
                    False,
                    witness=(left, right),
                    detail=f"{left.label()} {right.label()} = {product.label()} lies in the ideal",
                )
    return Verdict(True)


def is_graded_weakly_prime_submodule(submodule: GradedSubmodule) -> Verdict:
    """Proper, and 0 != rm in P (r, m homogeneous) forces m in P or r in (P :_R M)."""
    if not submodule.is_proper():
        return Verdict(False, detail="submodule is not proper")
    module = submodule.owner
    colon = colon_ideal(submodule)
    rows = _outside_homogeneous(module.base.homogeneous_codes, colon.elements)
    columns = _outside_homogeneous(module.homogeneous_codes, submodule.elements)
    if rows.size == 0 or columns.size == 0:
        return Verdict(True)
    products = module.action[np.ix_(rows, columns)]
    hits = np.argwhere((products != 0) & _membership(module.size, submodule.elements)[products])
    if hits.size:
        r, m = int(rows[hits[0][0]]), int(columns[hits[0][1]])
        return Verdict(False, witness=(r, m), detail=f"0 != {r}*{m} lies in P with m outside P and r outside (P:M)")
    return Verdict(True)


def graded_weakly_prime_ideals(ring: GradedRing) -> List[GradedIdeal]:
    """GWSpec(R)."""
    return [ideal for ideal in enumerate_graded_ideals(ring) if is_graded_weakly_prime_ideal(ideal)]


def graded_prime_ideals(ring: GradedRing) -> List[GradedIdeal]:
    """GSpec(R)."""
    return [ideal for ideal in enumerate_graded_ideals(ring) if is_graded_prime_ideal(ideal)]


def graded_maximal_ideals(ring: GradedRing) -> List[GradedIdeal]:
    ideals = [ideal for ideal in enumerate_graded_ideals(ring) if ideal.is_proper()]
    return [ideal for ideal in ideals if not any(ideal < other for other in ideals)]


def is_quasi_local(ring: GradedRing) -> bool:
    """Exactly one graded maximal ideal."""
    return len(graded_maximal_ideals(ring)) == 1


def is_integral_domain(ring: GradedRing) -> Verdict:
    if ring.ring.is_zero_ring():
        return Verdict(False, detail="zero ring")
    pair = ring.ring.zero_divisor_pair()
    if pair is not None:
        return Verdict(False, witness=pair, detail=f"{pair[0]}*{pair[1]} = 0")
    return Verdict(True)
