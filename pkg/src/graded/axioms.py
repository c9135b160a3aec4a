"""Grading and module axiom checks with witnesses."""

from __future__ import annotations

import math
from typing import Optional, Tuple

import numpy as np

from src.algebra.axioms import check_group_axioms, check_ring_axioms
from src.algebra.limits import DEFAULT_AXIOM_SCAN_SIZE, ensure_within
from src.algebra.reports import AxiomReport
from src.graded.structures import GradedModule, GradedRing, GradedStructure


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(value) for value in hits[0])


def _component_subgroups(structure: GradedStructure, report: AxiomReport) -> None:
    witness = None
    for degree, component in enumerate(structure.components):
        if structure.zero not in component:
            witness = (degree, structure.zero, structure.zero)
            break
        bad = next(
            ((a, b) for a in sorted(component) for b in sorted(component) if structure.carrier.add(a, b) not in component),
            None,
        )
        if bad is not None:
            witness = (degree,) + bad
            break
    report.record("component subgroups", witness)


def _direct_sum(structure: GradedStructure, report: AxiomReport) -> None:
    scan = structure._scan
    report.record("direct sum existence", (scan.missing[0],) if scan.missing else None)
    if scan.collision is None:
        report.record("direct sum uniqueness")
    else:
        element, first, second = scan.collision
        report.record(
            "direct sum uniqueness",
            (element,) + first + second,
            detail=f"{element} decomposes as {list(first)} and {list(second)}",
        )
    count = math.prod(len(component) for component in structure.components)
    report.record("component count", None if count == structure.size else (count, structure.size))


def _closure(structure: GradedStructure, table: np.ndarray, report: AxiomReport, name: str) -> None:
    """Products of degree g and h elements land in degree g + h."""
    grading = structure.grading_group
    left_components = structure.base.components if isinstance(structure, GradedModule) else structure.components
    witness = None
    for g in grading:
        for h in grading:
            target = structure.component(grading.add(g, h))
            for r in sorted(left_components[g]):
                for m in sorted(structure.component(h)):
                    if int(table[r, m]) not in target:
                        witness = (g, h, r, m)
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            break
    report.record(name, witness)


def check_module_axioms(module: GradedModule, max_size: int = DEFAULT_AXIOM_SCAN_SIZE) -> AxiomReport:
    """Additivity in both slots, associativity with ring products, unity acts trivially."""
    ensure_within(module.size, max_size, "Module axiom scan")
    ensure_within(module.base.size, max_size, "Module axiom scan")
    report = AxiomReport(subject=f"module {module.name}")
    action = module.action
    ring_add = module.base.carrier.addition_table
    ring_mul = module.base.ring.table
    module_add = module.carrier.addition_table

    report.record("action closure", _first((action < 0) | (action >= module.size)))
    if not report.get("action closure").passed:
        return report
    witness = None
    for r in range(module.base.size):
        # r(m + n) = rm + rn
        found = _first(action[r][module_add] != module_add[action[r][:, None], action[r][None, :]])
        if found is not None:
            witness = (r,) + found
            break
    report.record("additive in module", witness)
    witness = None
    for r in range(module.base.size):
        # (r + s)m = rm + sm
        found = _first(action[ring_add[r]] != module_add[action[r][None, :], action])
        if found is not None:
            witness = (r,) + found
            break
    report.record("additive in ring", witness)
    witness = None
    for r in range(module.base.size):
        # (rs)m = r(sm)
        found = _first(action[ring_mul[r]] != action[r][action])
        if found is not None:
            witness = (r,) + found
            break
    report.record("associative action", witness)
    unity = _first(action[module.base.one] != np.arange(module.size))
    report.record("unity acts as identity", None if unity is None else (module.base.one,) + unity)
    return report


def check_grading_axioms(structure: GradedStructure, max_size: int = DEFAULT_AXIOM_SCAN_SIZE) -> AxiomReport:
    """Grading group scan, direct sum, component closure, unity degree (rings), action compatibility (modules)."""
    report = AxiomReport(subject=f"{structure.kind} {structure.name}")
    group = structure.grading_group
    if group.size <= max_size:
        report.merge(check_group_axioms(group, max_size), prefix="grading group: ")
    else:
        report.skip("grading group axioms", f"not scanned: |G| = {group.size} is above the axiom scan size {max_size}")
    _component_subgroups(structure, report)
    _direct_sum(structure, report)
    if isinstance(structure, GradedRing):
        _closure(structure, structure.ring.table, report, "component closure")
        unity = structure.one in structure.component(structure.grading_group.zero)
        report.record("unity in degree e", None if unity else (structure.one,))
        if structure.size <= max_size:
            report.merge(check_ring_axioms(structure.ring, max_size), prefix="ring: ")
        else:
            report.skip("ring axioms", f"not scanned: |R| = {structure.size} is above the axiom scan size {max_size}")
    elif isinstance(structure, GradedModule):
        _closure(structure, structure.action, report, "action compatibility")
        if structure.size <= max_size and structure.base.size <= max_size:
            report.merge(check_module_axioms(structure, max_size), prefix="module: ")
        else:
            largest = max(structure.size, structure.base.size)
            report.skip("module axioms", f"not scanned: a carrier of size {largest} is above the axiom scan size {max_size}")
    return report
