"""Graded submodules and ideals, generation, and lattice enumeration."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Set, Union

from src.algebra.limits import DEFAULT_MAX_MODULE_SIZE, ensure_within
from src.graded.structures import GradedModule, GradedRing, HomogeneousElement

logger = logging.getLogger(__name__)

DEFAULT_SUBSET_ORACLE_SIZE = 16

Generator = Union[int, HomogeneousElement]


@dataclass(frozen=True, eq=False)
class GradedSubmodule:
    """Equality and hashing use ``elements`` only, so an ideal equals the same submodule of R."""

    owner: GradedModule = field(repr=False)
    elements: FrozenSet[int]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSubmodule):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self.elements), self.key

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, code: object) -> bool:
        return code in self.elements

    def __le__(self, other: "GradedSubmodule") -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: "GradedSubmodule") -> bool:
        return self.elements < other.elements

    def is_zero(self) -> bool:
        return self.elements == frozenset({self.owner.zero})

    def is_proper(self) -> bool:
        return len(self.elements) < self.owner.size

    def meet(self, other: "GradedSubmodule") -> "GradedSubmodule":
        return type(self)(self.owner, self.elements & other.elements)

    def join(self, other: "GradedSubmodule") -> "GradedSubmodule":
        return type(self)(self.owner, _sumset(self.owner, self.elements, other.elements))

    def component(self, degree: int) -> FrozenSet[int]:
        return self.elements & self.owner.component(degree)

    def generators(self) -> List[int]:
        """A short homogeneous generating set, picked greedily in code order."""
        chosen: List[int] = []
        span: FrozenSet[int] = frozenset({self.owner.zero})
        for code in self.owner.homogeneous_codes:
            if code in self.elements and code not in span:
                chosen.append(code)
                span = _sumset(self.owner, span, self.owner.cyclic_span(code))
                if span == self.elements:
                    break
        return chosen

    def label(self) -> str:
        gens = self.generators() or [self.owner.zero]
        return "<" + ", ".join(self.owner.format_element(code) for code in gens) + ">"


class GradedIdeal(GradedSubmodule):
    """A graded submodule of R viewed as a module over itself."""

    @property
    def ring(self) -> GradedRing:
        return self.owner.base


def _sumset(module: GradedModule, left: Iterable[int], right: Iterable[int]) -> FrozenSet[int]:
    right_items = list(right)
    return frozenset(module.add(a, b) for a in left for b in right_items)


def is_submodule(module: GradedModule, subset: FrozenSet[int]) -> bool:
    if module.zero not in subset:
        return False
    if any(module.add(a, b) not in subset for a in subset for b in subset):
        return False
    return all(module.act(r, m) in subset for r in range(module.base.size) for m in subset)


def as_submodule(module: GradedModule, elements: Iterable[int]) -> GradedSubmodule:
    """Wrap an explicit element set, checking it is a graded submodule."""
    subset = frozenset(elements)
    if not is_submodule(module, subset):
        raise ValueError(f"{sorted(subset)} is not a submodule of {module.name}.")
    if not module.is_graded_subset(subset):
        raise ValueError(f"{sorted(subset)} is not graded in {module.name}.")
    return GradedSubmodule(module, subset)


def as_ideal(ring: GradedRing, elements: Iterable[int]) -> GradedIdeal:
    submodule = as_submodule(ring.as_module, elements)
    return GradedIdeal(ring.as_module, submodule.elements)


def zero_submodule(module: GradedModule) -> GradedSubmodule:
    return GradedSubmodule(module, frozenset({module.zero}))


def full_submodule(module: GradedModule) -> GradedSubmodule:
    return GradedSubmodule(module, frozenset(module.carrier))


def _generator_code(module: GradedModule, generator: Generator) -> int:
    if isinstance(generator, HomogeneousElement):
        if generator.element not in module.component(generator.degree):
            raise ValueError(
                f"Generator {generator.element} is not homogeneous of degree {module.format_degree(generator.degree)}."
            )
        return generator.element
    if not 0 <= generator < module.size or not module.is_homogeneous(generator):
        raise ValueError(f"Generator {generator} is not a homogeneous element of {module.name}.")
    return generator


def submodule_generated(module: GradedModule, generators: Iterable[Generator]) -> GradedSubmodule:
    """Smallest submodule containing homogeneous ``generators``: the sum of the Rm."""
    span: FrozenSet[int] = frozenset({module.zero})
    for generator in generators:
        code = _generator_code(module, generator)
        if code not in span:
            span = _sumset(module, span, module.cyclic_span(code))
    if not module.is_graded_subset(span):
        raise RuntimeError(f"Homogeneous generators produced an ungraded submodule of {module.name}.")
    return GradedSubmodule(module, span)


def ideal_generated(ring: GradedRing, generators: Iterable[Generator]) -> GradedIdeal:
    return GradedIdeal(ring.as_module, submodule_generated(ring.as_module, generators).elements)


def _additive_closure(module: GradedModule, elements: Iterable[int]) -> FrozenSet[int]:
    return module.carrier.subgroup_generated(sorted(set(elements)))


def ideal_product(left: GradedIdeal, right: GradedIdeal) -> GradedIdeal:
    """I1 I2: additive closure of pairwise products."""
    ring = left.ring
    products = {ring.mul(a, b) for a in left.elements for b in right.elements}
    return GradedIdeal(left.owner, _additive_closure(left.owner, products))


def ideal_times_module(ideal: GradedIdeal, module: GradedModule) -> GradedSubmodule:
    """IM: additive closure of the products r m."""
    products = {module.act(r, m) for r in ideal.elements for m in module.carrier}
    return GradedSubmodule(module, _additive_closure(module, products))


def _join_closure(module: GradedModule, seeds: Set[FrozenSet[int]]) -> Set[FrozenSet[int]]:
    """All finite sums of the seed submodules, zero included."""
    lattice: Set[FrozenSet[int]] = {frozenset({module.zero})} | seeds
    frontier = list(lattice)
    while frontier:
        discovered = []
        for current in frontier:
            for seed in seeds:
                if seed <= current:
                    continue
                total = _sumset(module, current, seed)
                if total not in lattice:
                    lattice.add(total)
                    discovered.append(total)
        frontier = discovered
    return lattice


def _ordered(module: GradedModule, sets: Iterable[FrozenSet[int]]) -> List[GradedSubmodule]:
    return sorted((GradedSubmodule(module, elements) for elements in sets), key=lambda sub: sub.sort_key)


def enumerate_graded_submodules(module: GradedModule, max_size: int = DEFAULT_MAX_MODULE_SIZE) -> List[GradedSubmodule]:
    """Every graded submodule, as sums of the cyclic submodules of homogeneous elements."""
    ensure_within(module.size, max_size, f"Module {module.name}")
    seeds = {module.cyclic_span(code) for code in module.homogeneous_codes}
    lattice = _join_closure(module, seeds)
    logger.debug("Graded lattice of %s: %s submodules from %s cyclic seeds", module.name, len(lattice), len(seeds))
    return _ordered(module, lattice)


def enumerate_graded_ideals(ring: GradedRing, max_size: int = DEFAULT_MAX_MODULE_SIZE) -> List[GradedIdeal]:
    return [GradedIdeal(sub.owner, sub.elements) for sub in enumerate_graded_submodules(ring.as_module, max_size)]


def lattice_oracle_graded_submodules(module: GradedModule, max_size: int = DEFAULT_MAX_MODULE_SIZE) -> List[GradedSubmodule]:
    """Every additive subgroup of the carrier, kept when it is R-stable and splits into components."""
    ensure_within(module.size, max_size, f"Module {module.name}")
    carrier = module.carrier
    generated: Dict[FrozenSet[int], tuple[int, ...]] = {frozenset({carrier.zero}): ()}
    frontier = list(generated.items())
    while frontier:
        discovered = []
        for subgroup, gens in frontier:
            tried = set(subgroup)
            for code in carrier:
                if code in tried:
                    continue
                # one extension per coset code + H
                tried.update(carrier.add(code, member) for member in subgroup)
                larger = carrier.subgroup_generated(gens + (code,))
                if larger not in generated:
                    generated[larger] = gens + (code,)
                    discovered.append((larger, generated[larger]))
        frontier = discovered
    logger.debug("Subgroup oracle for %s: %s additive subgroups", module.name, len(generated))
    kept = (subgroup for subgroup in generated if is_submodule(module, subgroup) and module.is_graded_subset(subgroup))
    return _ordered(module, kept)


def brute_force_graded_submodules(
    module: GradedModule, max_size: int = DEFAULT_SUBSET_ORACLE_SIZE
) -> List[GradedSubmodule]:
    """Literal scan over every subset of the carrier that contains zero."""
    ensure_within(module.size, max_size, f"Subset oracle for {module.name}")
    others = [code for code in module.carrier if code != module.zero]
    found = []
    for mask in range(1 << len(others)):
        subset = frozenset([module.zero] + [code for bit, code in enumerate(others) if mask >> bit & 1])
        if is_submodule(module, subset) and module.is_graded_subset(subset):
            found.append(subset)
    return _ordered(module, found)
