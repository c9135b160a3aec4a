"""Finite abelian groups presented as direct products of cyclic groups."""

from __future__ import annotations

import itertools
import math
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

Residues = Tuple[int, ...]


class FiniteAbelianGroup:
    """Z_{n1} x ... x Z_{nk}, written additively.

    Elements are integer codes in ``[0, size)``: the mixed-radix encoding of the
    residue tuple with the last residue varying fastest. Code 0 is the identity.
    """

    def __init__(self, cyclic_orders: Sequence[int]) -> None:
        orders = tuple(int(order) for order in cyclic_orders)
        if not orders:
            raise ValueError("A group needs at least one cyclic factor.")
        for order in orders:
            if order < 1:
                raise ValueError(f"Cyclic orders must be >= 1, got {order}.")
        self.cyclic_orders: Tuple[int, ...] = orders
        self.size = math.prod(orders)
        weights: List[int] = []
        weight = 1
        for order in reversed(orders):
            weights.append(weight)
            weight *= order
        self._weights: Tuple[int, ...] = tuple(reversed(weights))

    def __repr__(self) -> str:
        return f"FiniteAbelianGroup({list(self.cyclic_orders)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteAbelianGroup) and other.cyclic_orders == self.cyclic_orders

    def __hash__(self) -> int:
        return hash(self.cyclic_orders)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))

    @property
    def zero(self) -> int:
        return 0

    @property
    def identity(self) -> Residues:
        return tuple(0 for _ in self.cyclic_orders)

    @cached_property
    def _residues(self) -> List[Residues]:
        return list(itertools.product(*(range(order) for order in self.cyclic_orders)))

    @cached_property
    def residue_matrix(self) -> np.ndarray:
        """Residue tuples of every element as a (size, rank) array."""
        return np.array(self._residues, dtype=np.int64).reshape(self.size, len(self.cyclic_orders))

    def encode(self, residues: Sequence[int]) -> int:
        if len(residues) != len(self.cyclic_orders):
            raise ValueError(f"Expected {len(self.cyclic_orders)} residues, got {len(residues)}.")
        code = 0
        for value, order, weight in zip(residues, self.cyclic_orders, self._weights):
            if not 0 <= value < order:
                raise ValueError(f"Residue {value} out of range for Z_{order}.")
            code += value * weight
        return code

    def encode_rows(self, rows: np.ndarray) -> np.ndarray:
        """Vectorised encode of residue rows already reduced modulo the orders."""
        return rows @ np.array(self._weights, dtype=np.int64)

    def decode(self, code: int) -> Residues:
        self._check(code)
        return self._residues[code]

    def _check(self, code: int) -> None:
        if not 0 <= code < self.size:
            raise ValueError(f"Element code {code} out of range for a group of order {self.size}.")

    def add(self, a: int, b: int) -> int:
        left, right = self._residues[a], self._residues[b]
        return sum(
            ((x + y) % order) * weight for x, y, order, weight in zip(left, right, self.cyclic_orders, self._weights)
        )

    def neg(self, a: int) -> int:
        return sum(((-x) % order) * weight for x, order, weight in zip(self._residues[a], self.cyclic_orders, self._weights))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    @cached_property
    def addition_table(self) -> np.ndarray:
        """Full Cayley table; meant for small carriers (axiom scans, ring tables)."""
        residues = self.residue_matrix
        sums = (residues[:, None, :] + residues[None, :, :]) % np.array(self.cyclic_orders, dtype=np.int64)
        return self.encode_rows(sums)

    def subgroup_generated(self, generators: Iterable[int]) -> FrozenSet[int]:
        span = {self.zero}
        for generator in generators:
            span = _sumset(self.add, span, self.cyclic_subgroup(generator))
        return frozenset(span)

    def cyclic_subgroup(self, a: int) -> List[int]:
        return _cyclic_span(self.add, self.zero, a)

    def format_element(self, code: int) -> str:
        residues = self.decode(code)
        if len(residues) == 1:
            return str(residues[0])
        return "(" + ",".join(str(value) for value in residues) + ")"


def cyclic_group(n: int) -> FiniteAbelianGroup:
    """Z_n with identity 0."""
    if n < 1:
        raise ValueError(f"Cyclic group order must be >= 1, got {n}.")
    return FiniteAbelianGroup((n,))


def direct_product(factors: Sequence[FiniteAbelianGroup]) -> FiniteAbelianGroup:
    """Componentwise product; nested products flatten to one tuple of orders."""
    if not factors:
        raise ValueError("direct_product needs at least one factor.")
    return FiniteAbelianGroup(tuple(order for factor in factors for order in factor.cyclic_orders))


def quotient_group(group: FiniteAbelianGroup, subgroup: FrozenSet[int]) -> Tuple[FiniteAbelianGroup, Tuple[int, ...]]:
    """Present ``group / subgroup`` as a product of cyclic groups.

    Returns the quotient and the projection, indexed by element code of ``group``.
    """
    if group.zero not in subgroup or any(group.add(a, b) not in subgroup for a in subgroup for b in subgroup):
        raise ValueError("quotient_group needs a subgroup.")
    members = sorted(subgroup)
    representative = [min(group.add(a, h) for h in members) for a in group]
    cosets = sorted(set(representative))

    def add(a: int, b: int) -> int:
        return representative[group.add(a, b)]

    basis = _cyclic_basis(cosets, add, group.zero)
    if basis is None:
        raise RuntimeError(f"No cyclic decomposition found for a quotient of {group}.")
    if not basis:
        return FiniteAbelianGroup((1,)), tuple(0 for _ in group)

    quotient = FiniteAbelianGroup(tuple(order for _, order in basis))
    code_of: Dict[int, int] = {}
    for code in quotient:
        element = group.zero
        for coefficient, (generator, _) in zip(quotient.decode(code), basis):
            for _ in range(coefficient):
                element = add(element, generator)
        code_of[element] = code
    if len(code_of) != quotient.size:
        raise RuntimeError("Cyclic decomposition of a quotient is not a bijection.")
    return quotient, tuple(code_of[representative[a]] for a in group)


def _cyclic_span(add: Callable[[int, int], int], zero: int, element: int) -> List[int]:
    span = [zero]
    current = element
    while current != zero:
        span.append(current)
        current = add(current, element)
    return span


def _sumset(add: Callable[[int, int], int], left: Iterable[int], right: Iterable[int]) -> set[int]:
    right_items = list(right)
    return {add(a, b) for a in left for b in right_items}


def _cyclic_basis(
    elements: Sequence[int], add: Callable[[int, int], int], zero: int
) -> Optional[List[Tuple[int, int]]]:
    """Generators g_1..g_k whose cyclic subgroups sum directly to the whole group."""
    target = len(elements)
    spans = {element: _cyclic_span(add, zero, element) for element in elements}
    candidates = sorted((element for element in elements if element != zero), key=lambda e: (-len(spans[e]), e))

    def extend(span: FrozenSet[int], basis: List[Tuple[int, int]]) -> Optional[List[Tuple[int, int]]]:
        if len(span) == target:
            return basis
        for candidate in candidates:
            cyclic = spans[candidate]
            if target % (len(span) * len(cyclic)) != 0:
                continue
            if any(value in span for value in cyclic[1:]):
                continue
            found = extend(frozenset(_sumset(add, span, cyclic)), basis + [(candidate, len(cyclic))])
            if found is not None:
                return found
        return None

    return extend(frozenset({zero}), [])
