"""The specialization order of a finite space and its DOT export."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple

import networkx as nx

from src.topology.properties import specialization_graph
from src.topology.space import FiniteTopologySpace

logger = logging.getLogger(__name__)


@dataclass
class SpecializationOrder:
    """P -> Q whenever Q lies in Cl({P})."""

    space: FiniteTopologySpace
    graph: nx.DiGraph

    @property
    def edges(self) -> List[Tuple[int, int]]:
        return sorted(self.graph.edges())

    @property
    def strict_edges(self) -> List[Tuple[int, int]]:
        return [(source, target) for source, target in self.edges if source != target]

    def out_degree(self, point: int) -> int:
        return int(self.graph.out_degree(point))

    def is_antisymmetric(self) -> bool:
        return all(len(component) == 1 for component in nx.strongly_connected_components(self.graph))


def specialization_order(space: FiniteTopologySpace) -> SpecializationOrder:
    graph = specialization_graph(space)
    closed = nx.transitive_closure(graph, reflexive=True)
    if set(closed.edges()) != set(graph.edges()):
        raise RuntimeError(f"Specialization relation of {space.name} is not transitive.")
    order = SpecializationOrder(space=space, graph=graph)
    if not order.is_antisymmetric():
        raise ValueError(f"{space.name} is not T0; its specialization preorder is not a partial order.")
    return order


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _node_order(space: FiniteTopologySpace) -> List[int]:
    if space.spectrum is None:
        return list(range(space.size))
    points = space.spectrum.points
    return sorted(range(space.size), key=lambda index: points[index].key)


def render_dot(order: SpecializationOrder) -> str:
    """Graphviz text, nodes by canonical submodule code and strict edges sorted; reflexive edges are implicit."""
    space = order.space
    lines = [f"digraph {_quote(space.name)} {{", "\trankdir = BT;", "\tnode [shape = box];"]
    for point in _node_order(space):
        lines.append(f"\t{_quote(f'p{point}')} [label={_quote(space.labels[point])}];")
    for source, target in order.strict_edges:
        lines.append(f"\t{_quote(f'p{source}')} -> {_quote(f'p{target}')};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(order: SpecializationOrder, path: Path) -> Path:
    if order.space.size == 0:
        raise ValueError(f"{order.space.name} has no points to export.")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_dot(order), encoding="utf-8")
    logger.info("Wrote specialization order of %s to %s", order.space.name, path)
    return path
