"""Built-in instances and extra instance directories."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional

from src.instances.models import (
    FreeModuleSpec,
    GroupRingSpec,
    InstanceSpec,
    IntegersModSpec,
    ModuleQuotientSpec,
    ProductRingSpec,
    RingQuotientSpec,
    SelfModuleSpec,
)

logger = logging.getLogger(__name__)

_Z2 = [2]

BUILTIN: List[InstanceSpec] = [
    InstanceSpec(
        name="z4-trivial",
        description="Z_4 over itself, trivially graded by Z_2",
        grading_group=_Z2,
        ring=IntegersModSpec(n=4),
    ),
    InstanceSpec(
        name="z5-trivial",
        description="The field Z_5 over itself, trivially graded by Z_2",
        grading_group=_Z2,
        ring=IntegersModSpec(n=5),
    ),
    InstanceSpec(
        name="z6-trivial",
        description="Z_6 over itself, trivially graded by Z_2",
        grading_group=_Z2,
        ring=IntegersModSpec(n=6),
    ),
    InstanceSpec(
        name="group-ring-2-z2",
        description="Z_2[Z_2] over itself with its group grading",
        grading_group=_Z2,
        ring=GroupRingSpec(n=2),
    ),
    InstanceSpec(
        name="group-ring-4-z2",
        description="Z_4[Z_2] over itself with its group grading",
        grading_group=_Z2,
        ring=GroupRingSpec(n=4),
    ),
    InstanceSpec(
        name="group-ring-4-z2-mod-2",
        description="Z_4[Z_2] modulo the graded ideal (2), over itself",
        grading_group=_Z2,
        ring=RingQuotientSpec(base="group-ring-4-z2", generators=[8]),
    ),
    InstanceSpec(
        name="free-rank2-z2",
        description="Z_2 + Z_2 over Z_2, both slots in degree e; not a multiplication module",
        grading_group=_Z2,
        ring=IntegersModSpec(n=2),
        module=FreeModuleSpec(shifts=[0, 0]),
    ),
    InstanceSpec(
        name="free-rank2-z2-mod-a",
        description="(Z_2 + Z_2) / <(1,0)> over Z_2",
        grading_group=_Z2,
        ring=IntegersModSpec(n=2),
        module=ModuleQuotientSpec(base="free-rank2-z2", generators=[2]),
    ),
    InstanceSpec(
        name="z4-mod-2",
        description="Z_4 / (2) as a Z_4-module",
        grading_group=_Z2,
        ring=IntegersModSpec(n=4),
        module=ModuleQuotientSpec(base=SelfModuleSpec(), generators=[2]),
    ),
    InstanceSpec(
        name="z6-mod-2",
        description="Z_6 / (2) as a Z_6-module",
        grading_group=_Z2,
        ring=IntegersModSpec(n=6),
        module=ModuleQuotientSpec(base=SelfModuleSpec(), generators=[2]),
    ),
    InstanceSpec(
        name="z4-zero-module",
        description="The zero module Z_4 / Z_4 over Z_4",
        grading_group=_Z2,
        ring=IntegersModSpec(n=4),
        module=ModuleQuotientSpec(base=SelfModuleSpec(), generators=[1]),
    ),
    InstanceSpec(
        name="group-ring-2-z2-shifted",
        description="Z_2[Z_2] over itself with the grading shifted by the generator of Z_2",
        grading_group=_Z2,
        ring=GroupRingSpec(n=2),
        module=FreeModuleSpec(shifts=[1]),
    ),
    InstanceSpec(
        name="z4xz2-split",
        description="(Z_4 x Z_2) / ((2,0)) over Z_4 x Z_2: two closed points, a disconnected spectrum",
        grading_group=_Z2,
        ring=ProductRingSpec(moduli=[4, 2]),
        module=ModuleQuotientSpec(base=SelfModuleSpec(), generators=[4]),
        known_failures=["weakly-prime-submodules"],
    ),
    InstanceSpec(
        name="z12-trivial",
        description="Z_12 over itself: the spectrum is irreducible although Grad(0) = (6) is not weakly prime",
        grading_group=_Z2,
        ring=IntegersModSpec(n=12),
        known_failures=["irreducible-equivalences"],
    ),
    InstanceSpec(
        name="z8-mod-4",
        description="Z_8 / (4) as a Z_8-module: {0} is weakly prime but its colon (4) is not",
        grading_group=_Z2,
        ring=IntegersModSpec(n=8),
        module=ModuleQuotientSpec(base=SelfModuleSpec(), generators=[4]),
        known_failures=["weakly-prime-submodules"],
    ),
]

_BY_NAME: Dict[str, InstanceSpec] = {spec.name: spec for spec in BUILTIN}


def builtin_names() -> List[str]:
    return sorted(_BY_NAME)


def get_spec(name: str) -> InstanceSpec:
    """Catalog entry by name; raises KeyError when unknown."""
    return _BY_NAME[name]


def extra_specs(directory: Optional[Path]) -> List[InstanceSpec]:
    """Instance files (*.yaml, *.yml, *.json) found directly in ``directory``."""
    if directory is None:
        return []
    if not directory.is_dir():
        raise ValueError(f"Catalog directory not found: {directory}")
    from src.instances.loader import load_instance_spec

    specs = []
    for path in sorted(directory.iterdir()):
        if path.suffix.lower() in {".yaml", ".yml", ".json"}:
            specs.append(load_instance_spec(path))
    logger.debug("Loaded %s extra instance files from %s", len(specs), directory)
    return specs


def all_specs(directory: Optional[Path] = None) -> List[InstanceSpec]:
    """Built-in and extra instances sorted by name; duplicate names are rejected."""
    specs = [get_spec(name) for name in builtin_names()]
    seen = set(_BY_NAME)
    for spec in extra_specs(directory):
        if spec.name in seen:
            raise ValueError(f"Duplicate instance name '{spec.name}' in {directory}.")
        seen.add(spec.name)
        specs.append(spec)
    return sorted(specs, key=lambda spec: spec.name)
