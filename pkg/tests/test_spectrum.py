"""Tests for the pseudo weakly prime spectrum and the module classes read off it."""

from __future__ import annotations

from typing import List

import pytest

from src.graded.submodules import GradedSubmodule, as_ideal, as_submodule, full_submodule, zero_submodule
from src.spectrum.classification import (
    check_corollary_injective_implies_multiplication,
    check_lemma_radical_colon,
    classify,
    gmax_submodules,
    is_multiplication_module,
    is_primeful,
    is_pseudo_weakly_injective,
    natural_map,
)
from src.spectrum.spectrum import (
    Spectrum,
    eta,
    fiber,
    gpw_rad,
    is_extraordinary,
    is_pseudo_weakly_prime,
    is_weakly_topological,
    pseudo_spectrum,
    semiprime_submodules,
    variety,
)
from tests.conftest import catalog_instance, self_module


def _labels(points: List[GradedSubmodule]) -> List[str]:
    return [point.label() for point in points]


def _spectrum(name: str) -> Spectrum:
    return pseudo_spectrum(catalog_instance(name).module)


def test_z4_spectrum_points_and_colons(z4_spectrum: Spectrum) -> None:
    assert _labels(z4_spectrum.points) == ["<0>", "<2>"]
    assert [z4_spectrum.colon_of[point].elements for point in z4_spectrum] == [frozenset({0}), frozenset({0, 2})]
    assert len(z4_spectrum.lattice) == 3
    assert full_submodule(z4_spectrum.module) not in z4_spectrum


def test_field_spectrum_is_the_zero_submodule() -> None:
    spectrum = _spectrum("z5-trivial")

    assert len(spectrum) == 1
    assert spectrum.points[0].is_zero()


def test_z6_spectrum_has_three_points() -> None:
    assert _labels(_spectrum("z6-trivial").points) == ["<0>", "<3>", "<2>"]


def test_free_module_spectrum_has_one_fiber() -> None:
    spectrum = _spectrum("free-rank2-z2")

    assert len(spectrum) == 4
    assert all(colon.is_zero() for colon in spectrum.colon_of.values())
    assert len(spectrum.colon_ideals) == 1


def test_zero_module_has_empty_spectrum() -> None:
    spectrum = _spectrum("z4-zero-module")

    assert len(spectrum) == 0
    assert is_weakly_topological(spectrum).holds


@pytest.mark.parametrize(
    ("name", "size"),
    [("group-ring-2-z2", 1), ("group-ring-4-z2", 2), ("z4-mod-2", 1), ("z6-mod-2", 1), ("group-ring-2-z2-shifted", 1)],
)
def test_catalog_spectrum_sizes(name: str, size: int) -> None:
    assert len(_spectrum(name)) == size


def test_is_pseudo_weakly_prime_reports_the_colon(z4_spectrum: Spectrum) -> None:
    module = z4_spectrum.module

    assert is_pseudo_weakly_prime(as_submodule(module, [0, 2]))
    verdict = is_pseudo_weakly_prime(full_submodule(module))
    assert not verdict
    assert verdict.detail.startswith("(P:M) = <1>")


def test_fiber_variety_eta_and_radical(z4_spectrum: Spectrum) -> None:
    module = z4_spectrum.module
    zero, two = z4_spectrum.points
    ring = module.base

    assert fiber(z4_spectrum, as_ideal(ring, [0])) == frozenset({zero})
    assert variety(z4_spectrum, zero_submodule(module)) == frozenset({zero, two})
    assert variety(z4_spectrum, two) == frozenset({two})
    assert variety(z4_spectrum, full_submodule(module)) == frozenset()
    assert eta(z4_spectrum, []) == full_submodule(module)
    assert eta(z4_spectrum, [zero, two]) == zero
    assert gpw_rad(z4_spectrum, full_submodule(module)) == full_submodule(module)
    assert gpw_rad(z4_spectrum, zero) == zero
    assert len(semiprime_submodules(z4_spectrum)) == 3


def test_fiber_rejects_ideals_outside_gwspec(z4_spectrum: Spectrum) -> None:
    ring = z4_spectrum.module.base

    with pytest.raises(ValueError, match="not a graded weakly prime ideal"):
        fiber(z4_spectrum, as_ideal(ring, [0, 1, 2, 3]))


def test_zero_meet_exemption_in_z6() -> None:
    spectrum = _spectrum("z6-trivial")
    zero = spectrum.points[0]

    assert is_extraordinary(spectrum, zero)
    strict = is_extraordinary(spectrum, zero, exempt_zero_meet=False)
    assert not strict
    assert sorted(_labels(list(strict.witness))) == ["<2>", "<3>"]


def test_extraordinary_needs_a_point(z4_spectrum: Spectrum) -> None:
    with pytest.raises(ValueError, match="not a point"):
        is_extraordinary(z4_spectrum, full_submodule(z4_spectrum.module))


def test_weak_topology_report_of_z4(z4_spectrum: Spectrum) -> None:
    report = is_weakly_topological(z4_spectrum)

    assert report.holds
    assert report.union_identity_holds
    assert report.union_closed
    assert report.describe() == "weakly topological"


@pytest.mark.parametrize("name", ["z6-trivial", "free-rank2-z2"])
def test_weakly_topological_but_not_union_closed(name: str) -> None:
    report = is_weakly_topological(_spectrum(name))

    assert report.holds
    assert not report.union_closed
    assert report.zero_meet_pair is not None
    assert "the meet is zero" in report.describe()


def test_multiplication_modules() -> None:
    assert is_multiplication_module(self_module(4))
    verdict = is_multiplication_module(catalog_instance("free-rank2-z2").module)
    assert not verdict
    assert verdict.witness.elements == frozenset({0, 1})


def test_gmax_submodules() -> None:
    assert _labels(gmax_submodules(self_module(4))) == ["<2>"]
    assert len(gmax_submodules(catalog_instance("free-rank2-z2").module)) == 3


def test_natural_map_of_z4(z4_spectrum: Spectrum) -> None:
    mapping = natural_map(z4_spectrum)

    assert mapping.quotient.size == 4
    assert mapping.surjective
    assert mapping.injective
    assert len(mapping.codomain) == 2


def test_natural_map_of_free_module_is_not_injective() -> None:
    spectrum = _spectrum("free-rank2-z2")
    mapping = natural_map(spectrum)

    assert mapping.quotient.size == 2
    assert mapping.surjective
    assert not mapping.injective
    assert mapping.preimage(frozenset(mapping.codomain)) == spectrum.all_points


def test_natural_map_images_of_ideals_over_the_annihilator() -> None:
    spectrum = _spectrum("z4-mod-2")
    mapping = natural_map(spectrum)
    ring = spectrum.module.base

    assert mapping.image_of_ideal(as_ideal(ring, [0, 2])).is_zero()
    assert mapping.image_of_ideal(as_ideal(ring, [0, 1, 2, 3])).elements == frozenset(range(mapping.quotient.size))


def test_natural_map_needs_points() -> None:
    with pytest.raises(ValueError, match="nonempty spectrum"):
        natural_map(_spectrum("z4-zero-module"))


def test_primeful_and_injective_flags() -> None:
    assert is_primeful(self_module(4))
    assert is_primeful(_spectrum("z4-zero-module"))
    assert is_pseudo_weakly_injective(_spectrum("z4-zero-module"))
    assert is_primeful(_spectrum("free-rank2-z2"))
    assert not is_pseudo_weakly_injective(_spectrum("free-rank2-z2"))
    assert is_primeful(_spectrum("z4-mod-2"))


def test_classify(z4_spectrum: Spectrum) -> None:
    flags = classify(z4_spectrum)

    assert flags.multiplication and flags.primeful and flags.injective
    assert flags.summary == "multiplication=yes, primeful=yes, injective=yes"


def test_injective_implies_multiplication() -> None:
    assert check_corollary_injective_implies_multiplication(self_module(4)).holds
    vacuous = check_corollary_injective_implies_multiplication(_spectrum("free-rank2-z2"))
    assert vacuous.holds
    assert "vacuous" in vacuous.detail


def test_radical_colon_lemma() -> None:
    verdict = check_lemma_radical_colon(self_module(4))

    assert verdict.holds
    assert verdict.detail == "1 graded radical ideals checked"
    assert not check_lemma_radical_colon(_spectrum("z4-zero-module")).applicable
