"""The graded pseudo weakly prime spectrum and its combinatorics."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from src.algebra.limits import DEFAULT_MAX_MODULE_SIZE
from src.algebra.reports import Verdict
from src.graded.structures import GradedModule
from src.graded.submodules import GradedIdeal, GradedSubmodule, enumerate_graded_submodules, full_submodule
from src.spectrum import ideals

logger = logging.getLogger(__name__)

PointSet = FrozenSet[GradedSubmodule]


@dataclass
class Spectrum:
    """Υ_M: the graded submodules whose colon ideal is graded weakly prime."""

    module: GradedModule
    points: List[GradedSubmodule]
    colon_of: Dict[GradedSubmodule, GradedIdeal]
    lattice: List[GradedSubmodule]
    _semiprime: Optional[List[GradedSubmodule]] = field(default=None, init=False, repr=False)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[GradedSubmodule]:
        return iter(self.points)

    def __contains__(self, submodule: object) -> bool:
        return submodule in self.colon_of

    def index(self, point: GradedSubmodule) -> int:
        return self.points.index(point)

    @property
    def all_points(self) -> PointSet:
        return frozenset(self.points)

    @property
    def colon_ideals(self) -> List[GradedIdeal]:
        """Ω = {(P :_R M) : P in Υ_M}, without repeats."""
        seen: List[GradedIdeal] = []
        for point in self.points:
            if self.colon_of[point] not in seen:
                seen.append(self.colon_of[point])
        return seen


def is_pseudo_weakly_prime(submodule: GradedSubmodule, module: Optional[GradedModule] = None) -> Verdict:
    colon = ideals.colon_ideal(submodule, module)
    verdict = ideals.is_graded_weakly_prime_ideal(colon)
    if verdict:
        return Verdict(True)
    return Verdict(False, witness=verdict.witness, detail=f"(P:M) = {colon.label()}: {verdict.detail}")


def pseudo_spectrum(module: GradedModule, max_size: int = DEFAULT_MAX_MODULE_SIZE) -> Spectrum:
    lattice = enumerate_graded_submodules(module, max_size)
    points: List[GradedSubmodule] = []
    colon_of: Dict[GradedSubmodule, GradedIdeal] = {}
    for submodule in lattice:
        colon = ideals.colon_ideal(submodule, module)
        if ideals.is_graded_weakly_prime_ideal(colon):
            points.append(submodule)
            colon_of[submodule] = colon
    logger.info("Spectrum of %s: %s points among %s graded submodules", module.name, len(points), len(lattice))
    return Spectrum(module=module, points=points, colon_of=colon_of, lattice=lattice)


def fiber(spectrum: Spectrum, ideal: GradedIdeal) -> PointSet:
    """Υ_{M,I}: the points with colon ideal I."""
    if not ideals.is_graded_weakly_prime_ideal(ideal):
        raise ValueError(f"{ideal.label()} is not a graded weakly prime ideal.")
    return frozenset(point for point in spectrum.points if spectrum.colon_of[point] == ideal)


def variety(spectrum: Spectrum, submodule: GradedSubmodule) -> PointSet:
    """χ(P): the points containing P."""
    return frozenset(point for point in spectrum.points if submodule <= point)


def eta(spectrum: Spectrum, points: Iterable[GradedSubmodule]) -> GradedSubmodule:
    """Intersection of a family of points; the empty family gives M."""
    result = full_submodule(spectrum.module)
    for point in points:
        result = result.meet(point)
    return result


def gpw_rad(spectrum: Spectrum, submodule: GradedSubmodule) -> GradedSubmodule:
    """GPWrad(P) = η(χ(P)), which is M when χ(P) is empty."""
    return eta(spectrum, variety(spectrum, submodule))


def is_semiprime(spectrum: Spectrum, submodule: GradedSubmodule) -> bool:
    return gpw_rad(spectrum, submodule) == submodule


def semiprime_submodules(spectrum: Spectrum) -> List[GradedSubmodule]:
    if spectrum._semiprime is None:
        spectrum._semiprime = [submodule for submodule in spectrum.lattice if is_semiprime(spectrum, submodule)]
        logger.debug("%s semiprime submodules in %s", len(spectrum._semiprime), spectrum.module.name)
    return spectrum._semiprime


def _semiprime_pairs(spectrum: Spectrum) -> Iterator[Tuple[GradedSubmodule, GradedSubmodule]]:
    return itertools.combinations_with_replacement(semiprime_submodules(spectrum), 2)


def is_extraordinary(spectrum: Spectrum, point: GradedSubmodule, exempt_zero_meet: bool = True) -> Verdict:
    """For semiprime I, J with {0} != I ∩ J inside P: I inside P or J inside P."""
    if point not in spectrum:
        raise ValueError(f"{point.label()} is not a point of the spectrum.")
    for left, right in _semiprime_pairs(spectrum):
        meet = left.meet(right)
        if exempt_zero_meet and meet.is_zero():
            continue
        if meet <= point and not (left <= point or right <= point):
            return Verdict(False, witness=(left, right), detail=f"{left.label()} ∩ {right.label()} lies in {point.label()}")
    return Verdict(True)


@dataclass
class WeakTopologyReport:
    """Both readings of weak topology, plus whether the χ-family is a topology."""

    holds: bool
    union_identity_holds: bool
    union_closed: bool
    failing_point: Optional[GradedSubmodule] = None
    failing_pair: Optional[Tuple[GradedSubmodule, GradedSubmodule]] = None
    zero_meet_pair: Optional[Tuple[GradedSubmodule, GradedSubmodule]] = None

    def __bool__(self) -> bool:
        return self.holds

    def describe(self) -> str:
        if self.failing_point is not None and self.failing_pair is not None:
            left, right = self.failing_pair
            return f"{self.failing_point.label()} is not extraordinary: pair {left.label()}, {right.label()}"
        if self.zero_meet_pair is not None:
            left, right = self.zero_meet_pair
            return f"χ({left.label()}) ∪ χ({right.label()}) is not closed: the meet is zero"
        return "weakly topological"


def is_weakly_topological(target: Union[GradedModule, Spectrum]) -> WeakTopologyReport:
    """Every point extraordinary, cross-checked against the χ-union identity."""
    spectrum = target if isinstance(target, Spectrum) else pseudo_spectrum(target)
    if not spectrum.points:
        return WeakTopologyReport(holds=True, union_identity_holds=True, union_closed=True)

    failing_point = None
    failing_pair = None
    for point in spectrum.points:
        verdict = is_extraordinary(spectrum, point)
        if not verdict:
            failing_point, failing_pair = point, verdict.witness
            break

    identity_pair = None
    zero_meet_pair = None
    for left, right in _semiprime_pairs(spectrum):
        meet = left.meet(right)
        if variety(spectrum, meet) == variety(spectrum, left) | variety(spectrum, right):
            continue
        if meet.is_zero():
            zero_meet_pair = zero_meet_pair or (left, right)
        else:
            identity_pair = identity_pair or (left, right)

    holds = failing_point is None
    if holds != (identity_pair is None):
        raise RuntimeError(
            f"Extraordinary test and χ-union identity disagree on {spectrum.module.name}: "
            f"point {failing_point}, pair {identity_pair}"
        )
    return WeakTopologyReport(
        holds=holds,
        union_identity_holds=identity_pair is None,
        union_closed=identity_pair is None and zero_meet_pair is None,
        failing_point=failing_point,
        failing_pair=failing_pair,
        zero_meet_pair=zero_meet_pair,
    )
