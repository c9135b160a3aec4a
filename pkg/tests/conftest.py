"""Pytest configuration and shared fixtures."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

import pytest

from src.algebra.groups import cyclic_group
from src.algebra.rings import ring_integers_mod
from src.graded.structures import GradedModule, GradedRing, group_ring, module_self, trivial_grading
from src.instances.builder import Instance, InstanceBuilder
from src.instances.catalog import get_spec
from src.spectrum.spectrum import Spectrum, pseudo_spectrum


@lru_cache(maxsize=None)
def catalog_instance(name: str) -> Instance:
    """Built catalog entry, shared across tests."""
    return InstanceBuilder().build(get_spec(name))


def trivially_graded(n: int) -> GradedRing:
    """Z_n graded by Z_2 with everything in degree e."""
    return trivial_grading(ring_integers_mod(n), cyclic_group(2))


def self_module(n: int) -> GradedModule:
    return module_self(trivially_graded(n))


@pytest.fixture
def z4() -> GradedRing:
    return trivially_graded(4)


@pytest.fixture
def z4_spectrum() -> Spectrum:
    return pseudo_spectrum(self_module(4))


@pytest.fixture
def group_ring_z2() -> GradedRing:
    """Z_2[Z_2]: codes 0 = 0, 1 = x, 2 = 1, 3 = 1 + x."""
    return group_ring(2, cyclic_group(2))


@pytest.fixture
def instance() -> Callable[[str], Instance]:
    return catalog_instance
