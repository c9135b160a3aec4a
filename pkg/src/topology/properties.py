"""Separation, irreducibility, connectedness and spectral-space conditions on finite spaces."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Set

import networkx as nx

from src.algebra.reports import AxiomReport, Verdict
from src.topology.space import FiniteTopologySpace, PointIndices

logger = logging.getLogger(__name__)


def is_T0(space: FiniteTopologySpace) -> Verdict:
    """Distinct points have distinct closures."""
    seen: Dict[PointIndices, int] = {}
    for point in range(space.size):
        closure = space.point_closure(point)
        if closure in seen:
            other = seen[closure]
            detail = f"{space.labels[other]} and {space.labels[point]} share a closure"
            return Verdict(False, witness=(other, point), detail=detail)
        seen[closure] = point
    return Verdict(True)


def is_closed_point(space: FiniteTopologySpace, point: int) -> bool:
    return space.is_closed({point})


def is_T1(space: FiniteTopologySpace) -> Verdict:
    for point in range(space.size):
        if not is_closed_point(space, point):
            return Verdict(False, witness=point, detail=f"{{{space.labels[point]}}} is not closed")
    return Verdict(True)


def relatively_closed(space: FiniteTopologySpace, subset: Iterable[int]) -> List[PointIndices]:
    """Closed sets of the subspace on ``subset``."""
    base = frozenset(subset)
    return sorted({closed & base for closed in space.closed_sets}, key=lambda part: (len(part), sorted(part)))


def is_irreducible(space: FiniteTopologySpace, subset: Iterable[int]) -> Verdict:
    """Not the union of two proper relatively closed subsets; empty sets are rejected."""
    base = frozenset(subset)
    if not base:
        raise ValueError("The empty set is not considered for irreducibility.")
    proper = [part for part in relatively_closed(space, base) if part != base]
    for left, right in itertools.combinations_with_replacement(proper, 2):
        if left | right == base:
            return Verdict(
                False,
                witness=(left, right),
                detail=f"{space.describe_set(base)} = {space.describe_set(left)} ∪ {space.describe_set(right)}",
            )
    return Verdict(True)


def irreducible_closed_sets(space: FiniteTopologySpace) -> List[PointIndices]:
    return [closed for closed in space.closed_sets if closed and is_irreducible(space, closed)]


def irreducible_components(space: FiniteTopologySpace) -> List[PointIndices]:
    """Maximal irreducible subsets; in a finite space these are closed."""
    candidates = irreducible_closed_sets(space)
    return [closed for closed in candidates if not any(closed < other for other in candidates)]


def generic_points(space: FiniteTopologySpace, closed: Iterable[int]) -> List[int]:
    target = frozenset(closed)
    if not space.is_closed(target) or not target or not is_irreducible(space, target):
        raise ValueError(f"{space.describe_set(target)} is not an irreducible closed set.")
    return [point for point in sorted(target) if space.point_closure(point) == target]


def specialization_graph(space: FiniteTopologySpace) -> nx.DiGraph:
    """Edge x -> y whenever y lies in Cl({x}), self loops included."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(space.size))
    for point in range(space.size):
        graph.add_edges_from((point, other) for other in space.point_closure(point))
    return graph


def _clopen_witness(space: FiniteTopologySpace) -> Optional[PointIndices]:
    lookup = set(space.closed_sets)
    for closed in space.closed_sets:
        if closed and closed != space.all_points and space.all_points - closed in lookup:
            return closed
    return None


def is_connected(space: FiniteTopologySpace) -> Verdict:
    """No nontrivial clopen set, cross-checked with weak connectivity of the specialization graph."""
    if space.size == 0:
        return Verdict(True, detail="empty space")
    clopen = _clopen_witness(space)
    graph_connected = nx.is_weakly_connected(specialization_graph(space))
    if (clopen is None) != graph_connected:
        raise RuntimeError(f"Clopen scan and specialization graph disagree on the connectedness of {space.name}.")
    if clopen is not None:
        return Verdict(False, witness=clopen, detail=f"{space.describe_set(clopen)} is clopen")
    return Verdict(True)


def _covers(target: PointIndices, family: Iterable[PointIndices]) -> bool:
    covered: Set[int] = set()
    for member in family:
        covered |= member
    return target <= covered


def is_quasi_compact(space: FiniteTopologySpace, subset: Iterable[int]) -> Verdict:
    """Reduce the cover by every open set meeting ``subset`` to an irredundant finite subcover."""
    target = frozenset(subset)
    cover = [opened for opened in space.open_sets if opened & target]
    if not _covers(target, cover):
        raise RuntimeError(f"The open sets of {space.name} do not cover {space.describe_set(target)}.")
    reduced = list(cover)
    for opened in cover:
        trial = [member for member in reduced if member != opened]
        if _covers(target, trial):
            reduced = trial
    if not _covers(target, reduced):
        return Verdict(False, witness=target, detail="no finite subcover found")
    return Verdict(True, witness=reduced)


def quasi_compact_opens(space: FiniteTopologySpace) -> List[PointIndices]:
    return [opened for opened in space.open_sets if is_quasi_compact(space, opened)]


@dataclass
class WeaklySpectralReport:
    conditions: AxiomReport
    noetherian_criterion: bool

    @property
    def holds(self) -> bool:
        return self.conditions.passed

    def __bool__(self) -> bool:
        return self.holds


def check_weakly_spectral(space: FiniteTopologySpace) -> WeaklySpectralReport:
    """T0, quasi-compact, quasi-compact opens stable under finite meets, generic points.

    Also evaluates the criterion for Noetherian spaces (T0 with generic points in
    nonempty irreducible closed sets); a finite space is Noetherian, so both must agree.
    """
    report = AxiomReport(subject=f"{space.name} weakly spectral")
    separation = is_T0(space)
    report.record("T0", witness=None if separation else separation.witness)

    compact = is_quasi_compact(space, space.all_points)
    report.record("quasi-compact", witness=None if compact else (0,))

    opens = set(quasi_compact_opens(space))
    meet_witness = None
    for left, right in itertools.combinations(sorted(opens, key=sorted), 2):
        if left & right not in opens:
            meet_witness = tuple(sorted(left & right))
            break
    report.record("quasi-compact opens closed under finite intersection", witness=meet_witness)

    missing = None
    for closed in irreducible_closed_sets(space):
        if not generic_points(space, closed):
            missing = tuple(sorted(closed))
            break
    report.record("generic point in every irreducible closed set", witness=missing)

    descending = _descending_chains_stabilise(space)
    criterion = bool(separation) and missing is None and descending
    result = WeaklySpectralReport(conditions=report, noetherian_criterion=criterion)
    if result.holds != criterion:
        raise RuntimeError(f"Spectral conditions and the Noetherian criterion disagree on {space.name}.")
    return result


def _descending_chains_stabilise(space: FiniteTopologySpace) -> bool:
    """Every strictly descending chain of closed sets is no longer than the point count plus one."""
    longest = {closed: 1 for closed in space.closed_sets}
    for closed in sorted(space.closed_sets, key=len):
        for smaller in space.closed_sets:
            if smaller < closed:
                longest[closed] = max(longest[closed], longest[smaller] + 1)
    return max(longest.values(), default=0) <= space.size + 1


def minimal_points(space: FiniteTopologySpace, points: Iterable[int]) -> List[int]:
    """Points whose closure is maximal among the given ones."""
    chosen = sorted(points)
    closures = {point: space.point_closure(point) for point in chosen}
    return [point for point in chosen if not any(closures[point] < closures[other] for other in chosen)]
