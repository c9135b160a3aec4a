"""G-graded rings and modules over finite carriers."""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.algebra.groups import FiniteAbelianGroup, direct_product
from src.algebra.limits import DEFAULT_MAX_MODULE_SIZE, DEFAULT_MAX_RING_SIZE, ensure_within
from src.algebra.rings import FiniteCommRing

logger = logging.getLogger(__name__)

Components = Tuple[FrozenSet[int], ...]


@dataclass(frozen=True)
class HomogeneousElement:
    element: int
    degree: int


@dataclass
class _DecompositionScan:
    parts: Dict[int, Tuple[int, ...]]
    collision: Optional[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]
    missing: List[int]


class GradedStructure:
    """A finite carrier with one component per element of the grading group.

    Components are indexed by the element code of the grading group; the group
    is written additively, so the degree written gh elsewhere is ``add(g, h)``.
    """

    kind = "structure"

    def __init__(
        self,
        grading_group: FiniteAbelianGroup,
        carrier: FiniteAbelianGroup,
        components: Sequence[Iterable[int]],
        name: str,
    ) -> None:
        if len(components) != grading_group.size:
            raise ValueError(f"Expected {grading_group.size} components, got {len(components)}.")
        self.grading_group = grading_group
        self.carrier = carrier
        self.components: Components = tuple(frozenset(component) for component in components)
        self.name = name
        self.parent: Optional[GradedStructure] = None
        self.projection: Optional[Tuple[int, ...]] = None
        for component in self.components:
            for code in component:
                if not 0 <= code < carrier.size:
                    raise ValueError(f"Component element {code} is outside the carrier.")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def zero(self) -> int:
        return self.carrier.zero

    def component(self, degree: int) -> FrozenSet[int]:
        return self.components[degree]

    @cached_property
    def _scan(self) -> _DecompositionScan:
        parts: Dict[int, Tuple[int, ...]] = {}
        collision = None
        for combo in itertools.product(*(sorted(component) for component in self.components)):
            total = functools.reduce(self.carrier.add, combo, self.zero)
            if total not in parts:
                parts[total] = combo
            elif collision is None:
                collision = (total, parts[total], combo)
        missing = [code for code in self.carrier if code not in parts]
        return _DecompositionScan(parts=parts, collision=collision, missing=missing)

    def homogeneous_parts(self, code: int) -> Tuple[int, ...]:
        """The component of ``code`` in every degree (the x_g of x)."""
        try:
            return self._scan.parts[code]
        except KeyError:
            raise ValueError(f"Element {code} has no decomposition into components.") from None

    def is_homogeneous(self, code: int) -> bool:
        return any(code in component for component in self.components)

    @cached_property
    def homogeneous_codes(self) -> Tuple[int, ...]:
        """h(X) as distinct element codes."""
        return tuple(sorted(frozenset().union(*self.components)))

    def is_graded_subset(self, subset: FrozenSet[int]) -> bool:
        """Component-splitting test: every homogeneous part of every member is a member."""
        return all(part in subset for code in subset for part in self.homogeneous_parts(code))

    def format_element(self, code: int) -> str:
        return self.carrier.format_element(code)

    def format_degree(self, degree: int) -> str:
        return self.grading_group.format_element(degree)

    def pullback(self, subset: Iterable[int]) -> FrozenSet[int]:
        """Preimage of ``subset`` under the quotient map this structure came from."""
        if self.projection is None:
            raise ValueError(f"{self.name} is not a quotient.")
        targets = frozenset(subset)
        return frozenset(code for code, image in enumerate(self.projection) if image in targets)


class GradedRing(GradedStructure):
    kind = "ring"

    def __init__(
        self,
        grading_group: FiniteAbelianGroup,
        ring: FiniteCommRing,
        components: Sequence[Iterable[int]],
        name: Optional[str] = None,
    ) -> None:
        super().__init__(grading_group, ring.additive_group, components, name or ring.name)
        self.ring = ring

    @property
    def one(self) -> int:
        return self.ring.one

    def add(self, a: int, b: int) -> int:
        return self.ring.add(a, b)

    def mul(self, a: int, b: int) -> int:
        return self.ring.mul(a, b)

    @cached_property
    def as_module(self) -> "GradedModule":
        return GradedModule(
            base=self,
            carrier=self.carrier,
            components=self.components,
            action=self.ring.table,
            name=self.name,
        )


class GradedModule(GradedStructure):
    kind = "module"

    def __init__(
        self,
        base: GradedRing,
        carrier: FiniteAbelianGroup,
        components: Sequence[Iterable[int]],
        action: np.ndarray,
        name: str,
    ) -> None:
        super().__init__(base.grading_group, carrier, components, name)
        action = np.array(action, dtype=np.int64)
        if action.shape != (base.size, carrier.size):
            raise ValueError(f"Action table must be {base.size}x{carrier.size}, got {action.shape}.")
        action.setflags(write=False)
        self.base = base
        self.action = action
        self._cyclic: Dict[int, FrozenSet[int]] = {}

    def add(self, a: int, b: int) -> int:
        return self.carrier.add(a, b)

    def act(self, r: int, m: int) -> int:
        return int(self.action[r, m])

    def cyclic_span(self, m: int) -> FrozenSet[int]:
        """Rm, the submodule generated by one element."""
        span = self._cyclic.get(m)
        if span is None:
            span = frozenset(int(code) for code in np.unique(self.action[:, m]))
            self._cyclic[m] = span
        return span

    def is_zero(self) -> bool:
        return self.size == 1


def _require_nonzero(ring: FiniteCommRing) -> None:
    if ring.is_zero_ring():
        raise ValueError("The zero ring cannot be the base of a graded structure.")


def trivial_grading(ring: FiniteCommRing, grading_group: FiniteAbelianGroup) -> GradedRing:
    """R_e = R and R_g = {0} otherwise."""
    _require_nonzero(ring)
    everything = frozenset(ring)
    components = [everything if degree == grading_group.zero else frozenset({ring.zero}) for degree in grading_group]
    return GradedRing(grading_group, ring, components, name=ring.name)


def group_ring(n: int, grading_group: FiniteAbelianGroup, max_size: int = DEFAULT_MAX_RING_SIZE) -> GradedRing:
    """Z_n[G] with convolution product, graded by G."""
    if n < 2:
        raise ValueError(f"Group ring coefficients need n >= 2, got {n}.")
    degrees = grading_group.size
    ensure_within(n**degrees, max_size, f"Group ring Z_{n}[{list(grading_group.cyclic_orders)}]")
    carrier = FiniteAbelianGroup((n,) * degrees)
    coefficients = carrier.residue_matrix
    product = np.zeros((carrier.size, carrier.size, degrees), dtype=np.int64)
    for g in grading_group:
        for h in grading_group:
            product[:, :, grading_group.add(g, h)] += coefficients[:, None, g] * coefficients[None, :, h]
    table = carrier.encode_rows(product % n)
    one = carrier.encode(tuple(1 if degree == grading_group.zero else 0 for degree in grading_group))
    name = f"Z_{n}[{_group_label(grading_group)}]"
    ring = FiniteCommRing(carrier, table, one=one, name=name)
    components = []
    for degree in grading_group:
        # c times the basis element for degree: every other coefficient vanishes
        others = np.delete(coefficients, degree, axis=1)
        components.append(frozenset(int(code) for code in np.flatnonzero(~others.any(axis=1))))
    return GradedRing(grading_group, ring, components, name=name)


def module_self(ring: GradedRing) -> GradedModule:
    """R as a module over itself, M_g = R_g."""
    return ring.as_module


def free_graded_module(
    ring: GradedRing,
    shifts: Sequence[int],
    max_size: int = DEFAULT_MAX_MODULE_SIZE,
) -> GradedModule:
    """R^rank; slot i of a degree-g tuple is homogeneous of degree g - shifts[i]."""
    if not shifts:
        raise ValueError("A free module needs rank >= 1.")
    grading_group = ring.grading_group
    for shift in shifts:
        if not 0 <= shift < grading_group.size:
            raise ValueError(f"Shift {shift} is not an element of the grading group.")
    rank = len(shifts)
    ensure_within(ring.size**rank, max_size, f"Free module of rank {rank} over {ring.name}")
    carrier = direct_product([ring.carrier] * rank)
    weights = np.array([ring.size ** (rank - 1 - slot) for slot in range(rank)], dtype=np.int64)
    slot_width = len(ring.carrier.cyclic_orders)
    blocks = carrier.residue_matrix.reshape(carrier.size, rank, slot_width)
    slots = ring.carrier.encode_rows(blocks)
    action = ring.ring.table[:, slots] @ weights

    components = []
    for degree in grading_group:
        parts = [sorted(ring.component(grading_group.sub(degree, shift))) for shift in shifts]
        components.append(frozenset(int(np.dot(combo, weights)) for combo in itertools.product(*parts)))
    label = ",".join(grading_group.format_element(shift) for shift in shifts)
    return GradedModule(ring, carrier, components, action, name=f"{ring.name}^{rank}({label})")


def homogeneous_elements(structure: GradedStructure) -> List[HomogeneousElement]:
    """h(X) as (element, degree) entries; zero appears once per degree."""
    return [
        HomogeneousElement(element=code, degree=degree)
        for degree, component in enumerate(structure.components)
        for code in sorted(component)
    ]


def _group_label(group: FiniteAbelianGroup) -> str:
    return " x ".join(f"Z_{order}" for order in group.cyclic_orders)
