"""Finite commutative unital rings with table multiplication."""

from __future__ import annotations

from typing import FrozenSet, Iterator, Optional, Sequence, Tuple

import numpy as np

from src.algebra.groups import FiniteAbelianGroup, cyclic_group, direct_product, quotient_group
from src.algebra.limits import DEFAULT_MAX_RING_SIZE, ensure_within


class FiniteCommRing:
    """Additive group plus a multiplication table indexed by element code."""

    def __init__(
        self,
        additive_group: FiniteAbelianGroup,
        table: np.ndarray,
        one: int,
        name: Optional[str] = None,
    ) -> None:
        table = np.array(table, dtype=np.int64)
        size = additive_group.size
        if table.shape != (size, size):
            raise ValueError(f"Multiplication table must be {size}x{size}, got {table.shape}.")
        if not 0 <= one < size:
            raise ValueError(f"Unity code {one} out of range.")
        table.setflags(write=False)
        self.additive_group = additive_group
        self.table = table
        self.one = one
        self.name = name or f"ring{list(additive_group.cyclic_orders)}"

    def __repr__(self) -> str:
        return f"FiniteCommRing({self.name})"

    @property
    def size(self) -> int:
        return self.additive_group.size

    @property
    def zero(self) -> int:
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.additive_group)

    def is_zero_ring(self) -> bool:
        return self.size == 1

    def add(self, a: int, b: int) -> int:
        return self.additive_group.add(a, b)

    def neg(self, a: int) -> int:
        return self.additive_group.neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.additive_group.sub(a, b)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, a: int, exponent: int) -> int:
        result = self.one
        for _ in range(exponent):
            result = self.mul(result, a)
        return result

    def zero_divisor_pair(self) -> Optional[Tuple[int, int]]:
        """A pair of nonzero elements with zero product, if any."""
        hits = np.argwhere(self.table[1:, 1:] == 0)
        if hits.size == 0:
            return None
        a, b = hits[0]
        return int(a) + 1, int(b) + 1

    def format_element(self, code: int) -> str:
        return self.additive_group.format_element(code)


def ring_integers_mod(n: int) -> FiniteCommRing:
    """Z_n with its usual multiplication."""
    if n < 1:
        raise ValueError(f"Ring order must be >= 1, got {n}.")
    values = np.arange(n, dtype=np.int64)
    return FiniteCommRing(cyclic_group(n), np.outer(values, values) % n, one=1 % n, name=f"Z_{n}")


def product_ring(moduli: Sequence[int], max_size: int = DEFAULT_MAX_RING_SIZE) -> FiniteCommRing:
    """Z_{n1} x ... x Z_{nk} with componentwise multiplication."""
    if not moduli:
        raise ValueError("product_ring needs at least one factor.")
    group = direct_product([cyclic_group(n) for n in moduli])
    ensure_within(group.size, max_size, "Product ring")
    residues = group.residue_matrix
    products = (residues[:, None, :] * residues[None, :, :]) % np.array(group.cyclic_orders, dtype=np.int64)
    one = group.encode(tuple(1 % n for n in moduli))
    return FiniteCommRing(group, group.encode_rows(products), one=one, name=" x ".join(f"Z_{n}" for n in moduli))


def quotient_ring(
    ring: FiniteCommRing, ideal: FrozenSet[int], name: Optional[str] = None
) -> Tuple[FiniteCommRing, Tuple[int, ...]]:
    """R / I and the projection R -> R / I, indexed by element code of R."""
    group, projection = quotient_group(ring.additive_group, ideal)
    lift = [0] * group.size
    for code in reversed(range(ring.size)):
        lift[projection[code]] = code
    table = np.array(
        [[projection[ring.mul(lift[a], lift[b])] for b in range(group.size)] for a in range(group.size)],
        dtype=np.int64,
    )
    return FiniteCommRing(group, table, one=projection[ring.one], name=name or f"{ring.name}/I"), projection
