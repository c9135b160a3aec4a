"""Finite topological spaces given by their closed sets, and the Zariski space on Υ_M."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from src.algebra.limits import DEFAULT_MAX_MODULE_SIZE
from src.algebra.reports import AxiomReport
from src.graded.structures import GradedModule, GradedRing, module_self
from src.spectrum.spectrum import Spectrum, eta, is_weakly_topological, pseudo_spectrum, variety

logger = logging.getLogger(__name__)

PointIndices = FrozenSet[int]


def _sorted_family(sets: Iterable[PointIndices]) -> List[PointIndices]:
    return sorted(set(sets), key=lambda subset: (len(subset), sorted(subset)))


@dataclass
class FiniteTopologySpace:
    """Points 0..n-1 with an explicit family of closed sets."""

    name: str
    labels: List[str]
    closed_sets: List[PointIndices]
    closed_set_labels: Dict[PointIndices, str] = field(default_factory=dict)
    spectrum: Optional[Spectrum] = None

    @classmethod
    def from_closed_sets(
        cls, labels: Sequence[str], closed_sets: Iterable[Iterable[int]], name: str = "space"
    ) -> "FiniteTopologySpace":
        """Hand-built space; the family must already satisfy the closed-set axioms."""
        family = _sorted_family(frozenset(subset) for subset in closed_sets)
        space = cls(name=name, labels=list(labels), closed_sets=family)
        for subset in family:
            if not subset <= space.all_points:
                raise ValueError(f"Closed set {sorted(subset)} names points outside 0..{space.size - 1}.")
        report = space.check_axioms()
        if not report.passed:
            raise ValueError(f"Not a topology: {report.summary()}")
        return space

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def all_points(self) -> PointIndices:
        return frozenset(range(self.size))

    @property
    def open_sets(self) -> List[PointIndices]:
        return _sorted_family(self.all_points - closed for closed in self.closed_sets)

    def is_closed(self, subset: Iterable[int]) -> bool:
        return frozenset(subset) in self._closed_lookup

    @cached_property
    def _closed_lookup(self) -> FrozenSet[PointIndices]:
        return frozenset(self.closed_sets)

    def closure_of(self, subset: Iterable[int]) -> PointIndices:
        """Smallest closed superset, taken from the closed-set family."""
        wanted = frozenset(subset)
        result = self.all_points
        for closed in self.closed_sets:
            if wanted <= closed:
                result = result & closed
        return result

    def point_closure(self, point: int) -> PointIndices:
        return self.closure_of({point})

    def describe_set(self, subset: Iterable[int]) -> str:
        return "{" + ", ".join(self.labels[index] for index in sorted(subset)) + "}"

    def check_axioms(self) -> AxiomReport:
        report = AxiomReport(subject=self.name)
        lookup = self._closed_lookup
        report.record("empty set closed", witness=None if frozenset() in lookup else ())
        report.record("whole space closed", witness=None if self.all_points in lookup else tuple(sorted(self.all_points)))
        # pairwise closure is enough for a finite family
        meet_witness = None
        join_witness = None
        for left, right in itertools.combinations(self.closed_sets, 2):
            if meet_witness is None and left & right not in lookup:
                meet_witness = tuple(sorted(left & right))
            if join_witness is None and left | right not in lookup:
                join_witness = tuple(sorted(left | right))
        report.record("closed under intersections", witness=meet_witness)
        report.record("closed under finite unions", witness=join_witness)
        return report


def _zariski_family(spectrum: Spectrum) -> Tuple[List[PointIndices], Dict[PointIndices, str]]:
    labels: Dict[PointIndices, str] = {}
    for submodule in spectrum.lattice:
        closed = frozenset(spectrum.index(point) for point in variety(spectrum, submodule))
        labels.setdefault(closed, submodule.label())
    return _sorted_family(labels), labels


def build_zariski(spectrum: Spectrum) -> FiniteTopologySpace:
    """ξ(M): closed sets χ(P) for every graded submodule P."""
    report = is_weakly_topological(spectrum)
    if not report.holds:
        raise ValueError(f"{spectrum.module.name} is not weakly topological: {report.describe()}.")
    if not report.union_closed:
        raise ValueError(f"The χ-family of {spectrum.module.name} is not a topology: {report.describe()}.")
    family, closed_labels = _zariski_family(spectrum)
    space = FiniteTopologySpace(
        name=f"Zariski space of {spectrum.module.name}",
        labels=[point.label() for point in spectrum.points],
        closed_sets=family,
        closed_set_labels=closed_labels,
        spectrum=spectrum,
    )
    axioms = space.check_axioms()
    if not axioms.passed:
        raise RuntimeError(f"Zariski family of {spectrum.module.name} fails the closed-set axioms: {axioms.summary()}")
    logger.debug("Zariski space of %s: %s points, %s closed sets", spectrum.module.name, space.size, len(family))
    return space


def ring_spectrum(ring: GradedRing, max_size: int = DEFAULT_MAX_MODULE_SIZE) -> Spectrum:
    """GWSpec(R) as the spectrum of R over itself, where (P :_R R) = P."""
    return pseudo_spectrum(module_self(ring), max_size)


def build_ring_zariski(ring: GradedRing, max_size: int = DEFAULT_MAX_MODULE_SIZE) -> FiniteTopologySpace:
    return build_zariski(ring_spectrum(ring, max_size))


def try_build_zariski(target: Union[GradedModule, Spectrum]) -> Tuple[Optional[FiniteTopologySpace], str]:
    """The space, or None with the reason it does not exist."""
    spectrum = target if isinstance(target, Spectrum) else pseudo_spectrum(target)
    try:
        return build_zariski(spectrum), ""
    except ValueError as exc:
        logger.debug("%s", exc)
        return None, str(exc)


def closure(space: FiniteTopologySpace, subset: Iterable[int]) -> PointIndices:
    """Cl(W), cross-checked against χ(η(W)) when the space comes from a spectrum."""
    wanted = frozenset(subset)
    result = space.closure_of(wanted)
    spectrum = space.spectrum
    if spectrum is not None:
        meet = eta(spectrum, (spectrum.points[index] for index in wanted))
        algebraic = frozenset(spectrum.index(point) for point in variety(spectrum, meet))
        if algebraic != result:
            raise RuntimeError(
                f"Closure of {space.describe_set(wanted)} is {space.describe_set(result)} "
                f"but χ(η(W)) is {space.describe_set(algebraic)}."
            )
    return result
