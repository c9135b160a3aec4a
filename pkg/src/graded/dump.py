"""Canonical text dump of graded structures."""

from __future__ import annotations

from typing import Dict, List

import numpy as np

from src.graded.structures import GradedModule, GradedRing, GradedStructure, homogeneous_elements


def _row(values: np.ndarray) -> str:
    return " ".join(str(int(value)) for value in values)


def dump_structure(structure: GradedStructure) -> str:
    """Deterministic listing of orders, components and tables, by element code."""
    lines: List[str] = [
        f"{structure.kind}: {structure.name}",
        f"grading_group: {list(structure.grading_group.cyclic_orders)}",
        f"carrier: {list(structure.carrier.cyclic_orders)}",
    ]
    if isinstance(structure, GradedRing):
        lines.append(f"one: {structure.one}")
    if isinstance(structure, GradedModule):
        lines.append(f"base: {structure.base.name} {list(structure.base.carrier.cyclic_orders)}")
    by_degree: Dict[int, List[int]] = {degree: [] for degree in range(len(structure.components))}
    for entry in homogeneous_elements(structure):
        by_degree[entry.degree].append(entry.element)
    for degree, codes in by_degree.items():
        lines.append(f"component {degree}: {' '.join(str(code) for code in codes)}")
    if isinstance(structure, GradedRing):
        lines.append("multiplication:")
        lines.extend(f"  {_row(row)}" for row in structure.ring.table)
    elif isinstance(structure, GradedModule):
        lines.append("action:")
        lines.extend(f"  {_row(row)}" for row in structure.action)
    return "\n".join(lines) + "\n"
