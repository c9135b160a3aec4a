"""Tests for colon ideals, radicals and the (weakly) prime predicates."""

from __future__ import annotations

from typing import FrozenSet, List

import pytest

from src.graded.structures import GradedRing, module_self
from src.graded.submodules import (
    GradedIdeal,
    GradedSubmodule,
    as_ideal,
    as_submodule,
    enumerate_graded_ideals,
    ideal_generated,
    zero_submodule,
)
from src.spectrum.ideals import (
    annihilator,
    colon_ideal,
    graded_maximal_ideals,
    graded_prime_ideals,
    graded_radical,
    graded_weakly_prime_ideals,
    is_graded_prime_ideal,
    is_graded_weakly_prime_ideal,
    is_graded_weakly_prime_pairs,
    is_graded_weakly_prime_submodule,
    is_integral_domain,
    is_quasi_local,
)
from tests.conftest import catalog_instance, trivially_graded


def _element_sets(ideals: List[GradedIdeal]) -> List[FrozenSet[int]]:
    return [ideal.elements for ideal in ideals]


def test_colon_ideal_in_z4(z4: GradedRing) -> None:
    module = module_self(z4)

    assert colon_ideal(as_submodule(module, [0, 2])).elements == frozenset({0, 2})
    assert annihilator(module).is_zero()


def test_colon_ideal_of_free_module_points_is_zero() -> None:
    module = catalog_instance("free-rank2-z2").module

    for code in (1, 2, 3):
        assert colon_ideal(as_submodule(module, [0, code])).is_zero()


def test_annihilator_of_quotient_module() -> None:
    assert annihilator(catalog_instance("z6-mod-2").module).elements == frozenset({0, 2, 4})
    assert annihilator(catalog_instance("z4-zero-module").module).elements == frozenset({0, 1, 2, 3})


def test_colon_rejects_non_submodules(z4: GradedRing) -> None:
    with pytest.raises(ValueError, match="is not a submodule"):
        colon_ideal(GradedSubmodule(module_self(z4), frozenset({0, 1})))


def test_graded_radical() -> None:
    z8 = trivially_graded(8)

    assert graded_radical(as_ideal(z8, [0])).elements == frozenset({0, 2, 4, 6})
    assert graded_radical(as_ideal(z8, [0, 2, 4, 6])).elements == frozenset({0, 2, 4, 6})
    with pytest.raises(ValueError, match="proper ideals only"):
        graded_radical(ideal_generated(z8, [1]))


def test_graded_radical_of_zero_in_group_ring() -> None:
    ring = catalog_instance("group-ring-4-z2").ring

    assert graded_radical(as_ideal(ring, [0])).elements == frozenset({0, 2, 8, 10})


def test_zero_ideal_is_always_weakly_prime() -> None:
    for n in (4, 6, 8):
        assert is_graded_weakly_prime_ideal(as_ideal(trivially_graded(n), [0]))


def test_weakly_prime_but_not_prime(z4: GradedRing) -> None:
    zero = as_ideal(z4, [0])

    assert is_graded_weakly_prime_ideal(zero)
    verdict = is_graded_prime_ideal(zero)
    assert not verdict
    assert verdict.witness == (2, 2)


def test_not_weakly_prime_with_witness() -> None:
    z8 = trivially_graded(8)

    verdict = is_graded_weakly_prime_ideal(as_ideal(z8, [0, 4]))

    assert not verdict
    assert verdict.witness == (2, 2)


def test_whole_ring_is_never_weakly_prime(z4: GradedRing) -> None:
    verdict = is_graded_weakly_prime_ideal(ideal_generated(z4, [1]))

    assert not verdict
    assert verdict.detail == "ideal is not proper"


def test_gwspec_and_gspec_of_z6() -> None:
    z6 = trivially_graded(6)

    assert _element_sets(graded_weakly_prime_ideals(z6)) == [
        frozenset({0}),
        frozenset({0, 3}),
        frozenset({0, 2, 4}),
    ]
    assert _element_sets(graded_prime_ideals(z6)) == [frozenset({0, 3}), frozenset({0, 2, 4})]


@pytest.mark.parametrize("name", ["z4-trivial", "z6-trivial", "group-ring-2-z2", "group-ring-4-z2", "z5-trivial"])
def test_pair_form_agrees_with_elementwise_test(name: str) -> None:
    ring = catalog_instance(name).ring
    graded = enumerate_graded_ideals(ring)

    for ideal in graded:
        assert bool(is_graded_weakly_prime_ideal(ideal)) == bool(is_graded_weakly_prime_pairs(ideal, graded))


def test_pair_form_witness_in_z8() -> None:
    z8 = trivially_graded(8)

    verdict = is_graded_weakly_prime_pairs(as_ideal(z8, [0, 4]))

    assert not verdict
    left, right = verdict.witness
    assert left.elements == right.elements == frozenset({0, 2, 4, 6})


def test_group_ring_gwspec() -> None:
    ring = catalog_instance("group-ring-4-z2").ring

    assert _element_sets(graded_weakly_prime_ideals(ring)) == [frozenset({0}), frozenset({0, 2, 8, 10})]


def test_weakly_prime_submodules(z4: GradedRing) -> None:
    module = module_self(z4)

    assert is_graded_weakly_prime_submodule(zero_submodule(module))
    assert is_graded_weakly_prime_submodule(as_submodule(module, [0, 2]))
    assert not is_graded_weakly_prime_submodule(as_submodule(module, [0, 1, 2, 3]))


def test_maximal_ideals_and_locality() -> None:
    z6 = trivially_graded(6)

    assert _element_sets(graded_maximal_ideals(z6)) == [frozenset({0, 3}), frozenset({0, 2, 4})]
    assert not is_quasi_local(z6)
    assert is_quasi_local(trivially_graded(4))
    assert is_quasi_local(catalog_instance("group-ring-4-z2").ring)


def test_integral_domain() -> None:
    assert is_integral_domain(trivially_graded(5))
    verdict = is_integral_domain(trivially_graded(4))
    assert not verdict
    assert verdict.witness == (2, 2)
