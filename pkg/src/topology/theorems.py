"""Checks of the structural statements about the Zariski space ξ(M) on finite instances."""

from __future__ import annotations

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set

from src.algebra.reports import Verdict
from src.graded.submodules import GradedIdeal, GradedSubmodule, enumerate_graded_ideals, ideal_times_module, zero_submodule
from src.spectrum import ideals
from src.spectrum.classification import gmax_submodules, is_primeful, natural_map
from src.spectrum.spectrum import Spectrum, eta, gpw_rad, is_pseudo_weakly_prime, variety
from src.topology.properties import (
    check_weakly_spectral,
    generic_points,
    irreducible_closed_sets,
    irreducible_components,
    is_closed_point,
    is_connected,
    is_irreducible,
    is_T0,
    is_T1,
    minimal_points,
)
from src.topology.space import FiniteTopologySpace, PointIndices, build_ring_zariski

logger = logging.getLogger(__name__)


def _spectrum_of(space: FiniteTopologySpace) -> Spectrum:
    if space.spectrum is None:
        raise ValueError(f"{space.name} was not built from a spectrum.")
    return space.spectrum


def chi(spectrum: Spectrum, submodule: GradedSubmodule) -> PointIndices:
    """χ(P) as point indices."""
    return frozenset(spectrum.index(point) for point in variety(spectrum, submodule))


def _irreducible_or_empty(space: FiniteTopologySpace, subset: Iterable[int]) -> bool:
    points = frozenset(subset)
    return bool(points) and bool(is_irreducible(space, points))


def combine(verdicts: Dict[str, Verdict]) -> Verdict:
    """One verdict for a bundle: fails if any applicable item fails."""
    failed = [name for name, verdict in verdicts.items() if verdict.applicable and not verdict.holds]
    skipped = [name for name, verdict in verdicts.items() if not verdict.applicable]
    detail = "; ".join(f"{name}: {verdict.detail}" for name, verdict in verdicts.items() if verdict.detail)
    if failed:
        return Verdict(False, witness=failed, detail=detail)
    if verdicts and len(skipped) == len(verdicts):
        return Verdict.not_applicable(detail)
    return Verdict(True, witness=skipped or None, detail=detail)


def check_closure_formula(space: FiniteTopologySpace, subsets: Iterable[FrozenSet[int]]) -> Verdict:
    """Cl(W) = χ(η(W)), and Cl({J}) = χ(J) for every point."""
    spectrum = _spectrum_of(space)
    for point, submodule in enumerate(spectrum.points):
        if space.point_closure(point) != chi(spectrum, submodule):
            return Verdict(False, witness=frozenset({point}), detail=f"Cl({{{space.labels[point]}}}) differs from χ")
    checked = 1
    for subset in [frozenset()] + list(subsets):
        lattice_side = space.closure_of(subset)
        algebraic = chi(spectrum, eta(spectrum, (spectrum.points[index] for index in subset)))
        if lattice_side != algebraic:
            return Verdict(False, witness=subset, detail=f"Cl{space.describe_set(subset)} differs from χ(η(W))")
        checked += 1
    return Verdict(True, detail=f"{checked} subsets")


def check_density(space: FiniteTopologySpace, subsets: Iterable[FrozenSet[int]]) -> Verdict:
    """Subsets containing the zero submodule are dense."""
    spectrum = _spectrum_of(space)
    zero = zero_submodule(spectrum.module)
    if zero not in spectrum:
        return Verdict.not_applicable("{0} is not a point")
    index = spectrum.index(zero)
    for subset in subsets:
        if index in subset and space.closure_of(subset) != space.all_points:
            return Verdict(False, witness=subset, detail=f"{space.describe_set(subset)} is not dense")
    return Verdict(True)


def check_t0(space: FiniteTopologySpace) -> Verdict:
    return is_T0(space)


def _closed_point_conditions(spectrum: Spectrum, point: GradedSubmodule) -> bool:
    colon = spectrum.colon_of[point]
    maximal = not any(colon < other for other in spectrum.colon_ideals)
    fiber_size = sum(1 for other in spectrum.points if spectrum.colon_of[other] == colon)
    return maximal and fiber_size == 1


def check_theorem_closed_point(space: FiniteTopologySpace, point: int) -> Verdict:
    """{C} closed iff (C : M) is maximal in Ω and its fiber is {C}."""
    spectrum = _spectrum_of(space)
    closed = is_closed_point(space, point)
    conditions = _closed_point_conditions(spectrum, spectrum.points[point])
    if closed != conditions:
        return Verdict(
            False,
            witness=point,
            detail=f"{space.labels[point]}: closed={closed}, colon maximal with singleton fiber={conditions}",
        )
    return Verdict(True)


def check_closed_points(space: FiniteTopologySpace) -> Verdict:
    for point in range(space.size):
        verdict = check_theorem_closed_point(space, point)
        if not verdict:
            return verdict
    return Verdict(True, detail=f"{space.size} points")


def check_theorem_T1(space: FiniteTopologySpace) -> Verdict:
    spectrum = _spectrum_of(space)
    t1 = bool(is_T1(space))
    conditions = all(_closed_point_conditions(spectrum, point) for point in spectrum.points)
    if t1 != conditions:
        return Verdict(False, detail=f"T1={t1} but every colon maximal with singleton fiber={conditions}")
    return Verdict(True, detail="T1" if t1 else "not T1")


def check_theorem_irreducible_eta(space: FiniteTopologySpace, subsets: Iterable[FrozenSet[int]]) -> Verdict:
    """W irreducible iff η(W) is pseudo weakly prime."""
    spectrum = _spectrum_of(space)
    checked = 0
    for subset in subsets:
        irreducible = bool(is_irreducible(space, subset))
        meet = eta(spectrum, (spectrum.points[index] for index in subset))
        prime = bool(is_pseudo_weakly_prime(meet, spectrum.module))
        if irreducible != prime:
            return Verdict(
                False,
                witness=subset,
                detail=f"{space.describe_set(subset)}: irreducible={irreducible}, η pseudo weakly prime={prime}",
            )
        checked += 1
    return Verdict(True, detail=f"{checked} subsets")


def check_corollary_irreducibility_bundle(space: FiniteTopologySpace) -> Dict[str, Verdict]:
    spectrum = _spectrum_of(space)
    module = spectrum.module
    everything = space.all_points
    items: Dict[str, Verdict] = {}

    item = Verdict(True)
    for submodule in spectrum.lattice:
        irreducible = _irreducible_or_empty(space, chi(spectrum, submodule))
        prime = bool(is_pseudo_weakly_prime(gpw_rad(spectrum, submodule), module))
        if irreducible != prime:
            item = Verdict(False, witness=submodule, detail=f"χ({submodule.label()}) irreducible={irreducible}")
            break
    items["variety irreducible iff radical is a point"] = item

    whole = _irreducible_or_empty(space, everything)
    radical_zero = bool(is_pseudo_weakly_prime(gpw_rad(spectrum, zero_submodule(module)), module))
    items["space irreducible iff GPWrad(0) is a point"] = Verdict(
        whole == radical_zero, detail="" if whole == radical_zero else f"irreducible={whole}, GPWrad(0) point={radical_zero}"
    )

    item = Verdict(True)
    for colon in spectrum.colon_ideals:
        fiber = frozenset(index for index, point in enumerate(spectrum.points) if spectrum.colon_of[point] == colon)
        if not is_irreducible(space, fiber):
            item = Verdict(False, witness=colon, detail=f"fiber over {colon.label()} is reducible")
            break
    items["nonempty fibers irreducible"] = item

    key = "GMax irreducible over a quasi-local ring"
    maximal = gmax_submodules(module)
    if not ideals.is_quasi_local(module.base):
        items[key] = Verdict.not_applicable("ring is not quasi-local")
    elif not maximal or any(submodule not in spectrum for submodule in maximal):
        items[key] = Verdict.not_applicable("GMax(M) is not a nonempty set of points")
    else:
        items[key] = Verdict(bool(is_irreducible(space, frozenset(spectrum.index(submodule) for submodule in maximal))))

    if zero_submodule(module) in spectrum:
        items["zero point makes the space irreducible"] = Verdict(whole)
    else:
        items["zero point makes the space irreducible"] = Verdict.not_applicable("{0} is not a point")

    if ideals.is_integral_domain(module.base) and not module.is_zero():
        items["integral domain makes the space irreducible"] = Verdict(whole)
    else:
        items["integral domain makes the space irreducible"] = Verdict.not_applicable("ring is not a domain or M = 0")
    return items


def _minimal_points(spectrum: Spectrum) -> List[GradedSubmodule]:
    return [point for point in spectrum.points if not any(other < point for other in spectrum.points)]


def check_irreducible_closed_sets(space: FiniteTopologySpace) -> Verdict:
    """Irreducible closed sets are exactly the χ(I), I a point; each has a generic point."""
    spectrum = _spectrum_of(space)
    found = set(irreducible_closed_sets(space))
    expected = {chi(spectrum, point) for point in spectrum.points}
    if found != expected:
        return Verdict(False, witness=sorted(found ^ expected, key=sorted), detail="families differ")
    for closed in found:
        if len(generic_points(space, closed)) != 1:
            return Verdict(False, witness=closed, detail=f"{space.describe_set(closed)} lacks a unique generic point")
    return Verdict(True, detail=f"{len(found)} irreducible closed sets")


def check_components_bijection(space: FiniteTopologySpace) -> Verdict:
    """Components correspond to minimal points via χ(I) -> I."""
    spectrum = _spectrum_of(space)
    components = set(irreducible_components(space))
    minimal = _minimal_points(spectrum)
    by_closure = minimal_points(space, space.all_points)
    if sorted(spectrum.index(point) for point in minimal) != by_closure:
        return Verdict(False, witness=minimal, detail="minimal submodules differ from the points with maximal closure")
    images = [chi(spectrum, point) for point in minimal]
    if len(set(images)) != len(images):
        return Verdict(False, witness=minimal, detail="two minimal points share a variety")
    if set(images) != components:
        return Verdict(False, witness=sorted(components, key=sorted), detail="components are not the χ of minimal points")
    return Verdict(True, detail=f"{len(components)} components")


def check_components_primeful_form(space: FiniteTopologySpace) -> Verdict:
    """For primeful M the components are χ(LM), L minimal over Ann(M) in GWSpec(R)."""
    spectrum = _spectrum_of(space)
    module = spectrum.module
    if not is_primeful(spectrum):
        return Verdict.not_applicable("module is not primeful")
    annihilating = ideals.annihilator(module)
    over = [ideal for ideal in ideals.graded_weakly_prime_ideals(module.base) if annihilating <= ideal]
    minimal = [ideal for ideal in over if not any(other < ideal for other in over)]
    family = {chi(spectrum, ideal_times_module(ideal, module)) for ideal in minimal}
    components = set(irreducible_components(space))
    if family != components:
        return Verdict(
            False,
            witness=[ideal.label() for ideal in minimal],
            detail=f"{len(components)} components but the χ(LM) family has {len(family)} members",
        )
    return Verdict(True)


def _ideals_containing(base: GradedIdeal) -> List[GradedIdeal]:
    return [ideal for ideal in enumerate_graded_ideals(base.ring) if base <= ideal]


def check_theorem_connected_transfer(space: FiniteTopologySpace) -> Verdict:
    """φ⁻¹(χ(K*)) = χ(KM) for K over Ann(M); Υ_M connected makes GWSpec(R/Ann(M)) connected."""
    spectrum = _spectrum_of(space)
    module = spectrum.module
    if not spectrum.points:
        return Verdict.not_applicable("empty spectrum")
    if not is_primeful(spectrum):
        return Verdict.not_applicable("module is not primeful")
    mapping = natural_map(spectrum)
    for ideal in _ideals_containing(ideals.annihilator(module)):
        image = mapping.image_of_ideal(ideal)
        if mapping.quotient.pullback(image.elements) != ideal.elements:
            return Verdict(False, witness=ideal, detail=f"{ideal.label()} is not the preimage of its image")
        targets = frozenset(target for target in mapping.codomain if image <= target)
        preimage = frozenset(spectrum.index(point) for point in mapping.preimage(targets))
        if preimage != chi(spectrum, ideal_times_module(ideal, module)):
            return Verdict(False, witness=ideal, detail=f"preimage identity fails for K = {ideal.label()}")

    try:
        quotient_space = build_ring_zariski(mapping.quotient)
    except ValueError as exc:
        return Verdict(True, detail=f"preimage identity holds; connectedness not compared: {exc}")
    if is_connected(space) and not is_connected(quotient_space):
        return Verdict(False, detail=f"Υ_M connected but GWSpec({mapping.quotient.name}) is not")
    return Verdict(True)


def check_irreducible_equivalences(space: FiniteTopologySpace) -> Verdict:
    """For primeful M, five characterisations of irreducibility agree."""
    spectrum = _spectrum_of(space)
    module = spectrum.module
    if module.is_zero():
        return Verdict.not_applicable("zero module")
    if not is_primeful(spectrum):
        return Verdict.not_applicable("module is not primeful")
    ring = module.base
    mapping = natural_map(spectrum)
    try:
        quotient_space = build_ring_zariski(mapping.quotient)
        ring_space = build_ring_zariski(ring)
    except ValueError as exc:
        return Verdict.not_applicable(f"a ring-side space is not a topology: {exc}")

    annihilating = ideals.annihilator(module)
    ring_side = _spectrum_of(ring_space)
    over: Set[int] = {index for index, point in enumerate(ring_side.points) if annihilating.elements <= point.elements}
    over_ideals = [GradedIdeal(point.owner, point.elements) for point in ring_side.points if annihilating <= point]
    conditions = {
        "Υ_M irreducible": _irreducible_or_empty(space, space.all_points),
        "GWSpec(R/Ann(M)) irreducible": _irreducible_or_empty(quotient_space, quotient_space.all_points),
        "χ(Ann(M)) irreducible in GWSpec(R)": _irreducible_or_empty(ring_space, over),
        "Grad(Ann(M)) weakly prime": bool(ideals.is_graded_weakly_prime_ideal(ideals.graded_radical(annihilating))),
        "Υ_M = χ(PM) for some P over Ann(M)": any(
            chi(spectrum, ideal_times_module(ideal, module)) == space.all_points for ideal in over_ideals
        ),
    }
    values = set(conditions.values())
    detail = ", ".join(f"{name}={value}" for name, value in conditions.items())
    if len(values) != 1:
        return Verdict(False, witness=conditions, detail=detail)
    return Verdict(True, detail=detail)


def _variety_realised_by_ideal(spectrum: Spectrum, submodule: GradedSubmodule, candidates: List[GradedIdeal]) -> bool:
    target = chi(spectrum, submodule)
    return any(chi(spectrum, ideal_times_module(ideal, spectrum.module)) == target for ideal in candidates)


def check_theorem_noetherian_spectral(space: FiniteTopologySpace) -> Verdict:
    """If every χ(P) is some χ(IM), the space is weakly spectral."""
    spectrum = _spectrum_of(space)
    candidates = enumerate_graded_ideals(spectrum.module.base)
    missing: Optional[GradedSubmodule] = None
    for submodule in spectrum.lattice:
        if not _variety_realised_by_ideal(spectrum, submodule, candidates):
            missing = submodule
            break
    if missing is not None:
        return Verdict(True, detail=f"hypothesis fails at {missing.label()}: implication vacuous")
    report = check_weakly_spectral(space)
    if not report.holds:
        return Verdict(False, witness=report.conditions.failures, detail=report.conditions.summary())
    return Verdict(True, detail="hypothesis holds and the space is weakly spectral")


def check_spectral_conditions(space: FiniteTopologySpace) -> Verdict:
    report = check_weakly_spectral(space)
    criterion = "holds" if report.noetherian_criterion else "fails"
    if not report.holds:
        return Verdict(False, witness=report.conditions.failures, detail=report.conditions.summary())
    return Verdict(True, detail=f"four conditions hold; Noetherian criterion {criterion}")
