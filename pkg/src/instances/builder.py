"""Build graded structures from instance descriptors."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from src.algebra.groups import FiniteAbelianGroup
from src.algebra.limits import DEFAULT_AXIOM_SCAN_SIZE, SizeLimits, ensure_within
from src.algebra.reports import AxiomReport
from src.algebra.rings import product_ring, ring_integers_mod
from src.graded.axioms import check_grading_axioms
from src.graded.quotients import quotient_graded_module, quotient_graded_ring
from src.graded.structures import GradedModule, GradedRing, free_graded_module, group_ring, module_self, trivial_grading
from src.graded.submodules import ideal_generated, submodule_generated
from src.instances.models import (
    FreeModuleSpec,
    GroupRingSpec,
    InstanceSpec,
    IntegersModSpec,
    ModuleQuotientSpec,
    ModuleSpec,
    ProductRingSpec,
    RingQuotientSpec,
    RingSpec,
    SelfModuleSpec,
)

logger = logging.getLogger(__name__)

Resolver = Callable[[str], InstanceSpec]


@dataclass
class Instance:
    spec: InstanceSpec
    ring: GradedRing
    module: GradedModule
    axioms: AxiomReport

    @property
    def name(self) -> str:
        return self.spec.name


def _catalog_resolver(name: str) -> InstanceSpec:
    from src.instances.catalog import get_spec

    return get_spec(name)


class InstanceBuilder:
    """Turns an ``InstanceSpec`` into checked structures within the size limits."""

    def __init__(
        self,
        limits: Optional[SizeLimits] = None,
        axiom_scan_size: int = DEFAULT_AXIOM_SCAN_SIZE,
        resolver: Optional[Resolver] = None,
    ) -> None:
        self.limits = limits or SizeLimits()
        self.axiom_scan_size = axiom_scan_size
        self.resolver = resolver or _catalog_resolver

    def build(self, spec: InstanceSpec) -> Instance:
        group = FiniteAbelianGroup(spec.grading_group)
        ring = self._ring(spec.ring, group, (spec.name,))
        module = self._module(spec.module, spec.ring, ring, (spec.name,))
        ensure_within(module.size, self.limits.max_module_size, f"Module of {spec.name}")

        report = AxiomReport(subject=spec.name)
        report.merge(check_grading_axioms(ring, self.axiom_scan_size), prefix="ring ")
        report.merge(check_grading_axioms(module, self.axiom_scan_size), prefix="module ")
        if not report.passed:
            raise ValueError(f"Instance {spec.name} fails its axioms: {report.summary()}")
        for check in report.skipped:
            logger.warning("%s: %s %s", spec.name, check.name, check.detail)
        logger.info("Built instance %s: |R| = %s, |M| = %s", spec.name, ring.size, module.size)
        return Instance(spec=spec, ring=ring, module=module, axioms=report)

    def _resolve(self, name: str, trail: Tuple[str, ...]) -> InstanceSpec:
        if name in trail:
            raise ValueError(f"Circular instance reference: {' -> '.join(trail + (name,))}.")
        try:
            return self.resolver(name)
        except KeyError:
            raise ValueError(f"Unknown instance name '{name}'.") from None

    def _ring(self, descriptor: RingSpec, group: FiniteAbelianGroup, trail: Tuple[str, ...]) -> GradedRing:
        bound = self.limits.max_ring_size
        if isinstance(descriptor, IntegersModSpec):
            ensure_within(descriptor.n, bound, f"Ring Z_{descriptor.n}")
            return trivial_grading(ring_integers_mod(descriptor.n), group)
        if isinstance(descriptor, ProductRingSpec):
            return trivial_grading(product_ring(descriptor.moduli, bound), group)
        if isinstance(descriptor, GroupRingSpec):
            return group_ring(descriptor.n, group, bound)
        if isinstance(descriptor, RingQuotientSpec):
            if isinstance(descriptor.base, str):
                referenced = self._resolve(descriptor.base, trail)
                if referenced.grading_group != list(group.cyclic_orders):
                    raise ValueError(f"Instance '{descriptor.base}' is graded by a different group.")
                base = self._ring(referenced.ring, group, trail + (descriptor.base,))
            else:
                base = self._ring(descriptor.base, group, trail)
            ideal = ideal_generated(base, descriptor.generators)
            return quotient_graded_ring(base, ideal)
        raise ValueError(f"Unsupported ring descriptor {descriptor!r}.")

    def _module(
        self, descriptor: ModuleSpec, ring_descriptor: RingSpec, ring: GradedRing, trail: Tuple[str, ...]
    ) -> GradedModule:
        if isinstance(descriptor, SelfModuleSpec):
            return module_self(ring)
        if isinstance(descriptor, FreeModuleSpec):
            return free_graded_module(ring, descriptor.shifts, self.limits.max_module_size)
        if isinstance(descriptor, ModuleQuotientSpec):
            if isinstance(descriptor.base, str):
                referenced = self._resolve(descriptor.base, trail)
                if referenced.ring != ring_descriptor:
                    raise ValueError(f"Instance '{descriptor.base}' is a module over a different ring.")
                base = self._module(referenced.module, ring_descriptor, ring, trail + (descriptor.base,))
            else:
                base = self._module(descriptor.base, ring_descriptor, ring, trail)
            submodule = submodule_generated(base, descriptor.generators)
            return quotient_graded_module(base, submodule)
        raise ValueError(f"Unsupported module descriptor {descriptor!r}.")
