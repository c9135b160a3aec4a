"""Module classes read off the spectrum: multiplication, primeful, injective."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Union

from src.algebra.reports import Verdict
from src.graded.quotients import quotient_graded_ring
from src.graded.structures import GradedModule, GradedRing
from src.graded.submodules import (
    GradedIdeal,
    GradedSubmodule,
    as_ideal,
    enumerate_graded_ideals,
    enumerate_graded_submodules,
    ideal_times_module,
)
from src.spectrum.ideals import annihilator, colon_ideal, graded_radical, graded_weakly_prime_ideals
from src.spectrum.spectrum import Spectrum, pseudo_spectrum

logger = logging.getLogger(__name__)


def _spectrum(target: Union[GradedModule, Spectrum]) -> Spectrum:
    return target if isinstance(target, Spectrum) else pseudo_spectrum(target)


def is_multiplication_module(module: GradedModule) -> Verdict:
    """Every graded submodule is IM for some graded ideal I."""
    products: Dict[FrozenSet[int], GradedIdeal] = {}
    for ideal in enumerate_graded_ideals(module.base):
        products.setdefault(ideal_times_module(ideal, module).elements, ideal)
    for submodule in enumerate_graded_submodules(module):
        if submodule.elements not in products:
            return Verdict(False, witness=submodule, detail=f"{submodule.label()} is not IM for any graded ideal I")
    return Verdict(True)


def gmax_submodules(module: GradedModule) -> List[GradedSubmodule]:
    """Maximal proper graded submodules."""
    proper = [submodule for submodule in enumerate_graded_submodules(module) if submodule.is_proper()]
    return [submodule for submodule in proper if not any(submodule < other for other in proper)]


@dataclass
class NaturalMap:
    """φ(P) = (P :_R M) / Ann(M), from Υ_M into GWSpec(R / Ann(M))."""

    domain: Spectrum
    quotient: GradedRing
    codomain: List[GradedIdeal]
    assignment: Dict[GradedSubmodule, GradedIdeal]

    @property
    def surjective(self) -> bool:
        return set(self.codomain) <= set(self.assignment.values())

    @property
    def injective(self) -> bool:
        return len(set(self.assignment.values())) == len(self.assignment)

    def preimage(self, targets: FrozenSet[GradedIdeal]) -> FrozenSet[GradedSubmodule]:
        return frozenset(point for point, image in self.assignment.items() if image in targets)

    def image_of_ideal(self, ideal: GradedIdeal) -> GradedIdeal:
        """K* = K / Ann(M) for an ideal K containing Ann(M)."""
        assert self.quotient.projection is not None
        projection = self.quotient.projection
        return as_ideal(self.quotient, (projection[code] for code in ideal.elements))


def natural_map(target: Union[GradedModule, Spectrum]) -> NaturalMap:
    spectrum = _spectrum(target)
    if not spectrum.points:
        raise ValueError(f"The natural map needs a nonempty spectrum; {spectrum.module.name} has none.")
    ring = spectrum.module.base
    quotient = quotient_graded_ring(ring, annihilator(spectrum.module))
    assert quotient.projection is not None
    projection = quotient.projection
    assignment = {
        point: GradedIdeal(quotient.as_module, frozenset(projection[code] for code in spectrum.colon_of[point].elements))
        for point in spectrum.points
    }
    return NaturalMap(
        domain=spectrum,
        quotient=quotient,
        codomain=graded_weakly_prime_ideals(quotient),
        assignment=assignment,
    )


def is_primeful(target: Union[GradedModule, Spectrum]) -> bool:
    """φ surjective, or M = {0}."""
    spectrum = _spectrum(target)
    if spectrum.module.is_zero():
        return True
    if not spectrum.points:
        return False
    return natural_map(spectrum).surjective


def is_pseudo_weakly_injective(target: Union[GradedModule, Spectrum]) -> bool:
    spectrum = _spectrum(target)
    if not spectrum.points:
        return True
    return natural_map(spectrum).injective


def check_corollary_injective_implies_multiplication(target: Union[GradedModule, Spectrum]) -> Verdict:
    """Pseudo weakly injective implies multiplication."""
    spectrum = _spectrum(target)
    if not is_pseudo_weakly_injective(spectrum):
        return Verdict(True, detail="not pseudo weakly injective: implication vacuous")
    verdict = is_multiplication_module(spectrum.module)
    if verdict:
        return Verdict(True, detail="injective and multiplication")
    return Verdict(False, witness=verdict.witness, detail=f"injective but {verdict.detail}")


@dataclass
class RadicalColonCase:
    ideal: GradedIdeal
    colon_of_product: GradedIdeal
    contains_annihilator: bool

    @property
    def consistent(self) -> bool:
        return (self.colon_of_product == self.ideal) == self.contains_annihilator


def check_lemma_radical_colon(target: Union[GradedModule, Spectrum]) -> Verdict:
    """For primeful M and graded radical P: P = (PM : M) iff Ann(M) is inside P."""
    spectrum = _spectrum(target)
    module = spectrum.module
    if module.is_zero():
        return Verdict.not_applicable("zero module has no proper radical colon to test")
    if not is_primeful(spectrum):
        return Verdict.not_applicable("module is not primeful")
    annihilating = annihilator(module)
    cases = []
    for ideal in enumerate_graded_ideals(module.base):
        if not ideal.is_proper() or graded_radical(ideal) != ideal:
            continue
        cases.append(
            RadicalColonCase(
                ideal=ideal,
                colon_of_product=colon_ideal(ideal_times_module(ideal, module), module),
                contains_annihilator=annihilating <= ideal,
            )
        )
    failures = [case for case in cases if not case.consistent]
    if failures:
        labels = ", ".join(case.ideal.label() for case in failures)
        return Verdict(False, witness=failures, detail=f"biconditional fails for {labels}")
    return Verdict(True, detail=f"{len(cases)} graded radical ideals checked")


@dataclass
class ModuleFlags:
    multiplication: bool
    primeful: bool
    injective: bool

    @cached_property
    def summary(self) -> str:
        return ", ".join(f"{name}={'yes' if value else 'no'}" for name, value in vars(self).items() if name != "summary")


def classify(spectrum: Spectrum) -> ModuleFlags:
    return ModuleFlags(
        multiplication=bool(is_multiplication_module(spectrum.module)),
        primeful=is_primeful(spectrum),
        injective=is_pseudo_weakly_injective(spectrum),
    )
