"""Tests for the theorem checks on Zariski spaces."""

from __future__ import annotations

import pytest
from pytest_mock import MockerFixture

from src.algebra.reports import Verdict
from src.graded.submodules import zero_submodule
from src.instances.catalog import builtin_names
from src.spectrum.classification import is_primeful
from src.spectrum.spectrum import Spectrum, pseudo_spectrum
from src.topology import theorems
from src.topology.properties import generic_points, irreducible_components, is_connected, is_irreducible
from src.topology.space import FiniteTopologySpace, build_zariski, try_build_zariski
from src.topology.subsets import point_subsets
from tests.conftest import catalog_instance

BUNDLE_KEYS = [
    "variety irreducible iff radical is a point",
    "space irreducible iff GPWrad(0) is a point",
    "nonempty fibers irreducible",
    "GMax irreducible over a quasi-local ring",
    "zero point makes the space irreducible",
    "integral domain makes the space irreducible",
]


def _space(name: str) -> FiniteTopologySpace:
    return build_zariski(pseudo_spectrum(catalog_instance(name).module))


@pytest.fixture
def z4_space(z4_spectrum: Spectrum) -> FiniteTopologySpace:
    return build_zariski(z4_spectrum)


def test_chi_of_z4_points(z4_spectrum: Spectrum) -> None:
    zero, two = z4_spectrum.points

    assert theorems.chi(z4_spectrum, zero) == frozenset({0, 1})
    assert theorems.chi(z4_spectrum, two) == frozenset({1})


def test_closure_and_density_hold_on_z4(z4_space: FiniteTopologySpace) -> None:
    subsets = point_subsets(z4_space.size)

    assert theorems.check_closure_formula(z4_space, subsets)
    assert theorems.check_density(z4_space, subsets)
    assert theorems.check_t0(z4_space)


def test_t1_criterion_details(z4_space: FiniteTopologySpace) -> None:
    z4 = theorems.check_theorem_T1(z4_space)
    z5 = theorems.check_theorem_T1(_space("z5-trivial"))

    assert z4.holds and z4.detail == "not T1"
    assert z5.holds and z5.detail == "T1"


def test_closed_point_criterion_per_point(z4_space: FiniteTopologySpace) -> None:
    assert theorems.check_theorem_closed_point(z4_space, 0)
    assert theorems.check_theorem_closed_point(z4_space, 1)
    assert theorems.check_closed_points(z4_space).detail == "2 points"


def test_irreducible_eta_on_z4(z4_space: FiniteTopologySpace) -> None:
    verdict = theorems.check_theorem_irreducible_eta(z4_space, point_subsets(2))

    assert verdict.holds
    assert verdict.detail == "3 subsets"


def test_irreducibility_bundle_of_z4(z4_space: FiniteTopologySpace) -> None:
    items = theorems.check_corollary_irreducibility_bundle(z4_space)

    assert list(items) == BUNDLE_KEYS
    assert items["GMax irreducible over a quasi-local ring"].holds
    assert items["zero point makes the space irreducible"].applicable
    assert not items["integral domain makes the space irreducible"].applicable
    combined = theorems.combine(items)
    assert combined.holds and combined.applicable
    assert combined.witness == ["integral domain makes the space irreducible"]


def test_irreducibility_bundle_of_a_field() -> None:
    items = theorems.check_corollary_irreducibility_bundle(_space("z5-trivial"))

    assert items["integral domain makes the space irreducible"].applicable
    assert theorems.combine(items)


def test_combine_semantics() -> None:
    passing = {"a": Verdict(True), "b": Verdict.not_applicable("skipped")}
    failing = {"a": Verdict(False, detail="bad"), "b": Verdict(True)}
    skipped = {"a": Verdict.not_applicable("x"), "b": Verdict.not_applicable("y")}

    combined = theorems.combine(passing)
    assert combined.holds and combined.witness == ["b"] and combined.detail == "b: skipped"
    assert theorems.combine(failing).witness == ["a"]
    assert not theorems.combine(failing)
    assert not theorems.combine(skipped).applicable
    assert theorems.combine({}).holds


def test_irreducible_closed_sets_and_components(z4_space: FiniteTopologySpace) -> None:
    assert theorems.check_irreducible_closed_sets(z4_space).detail == "2 irreducible closed sets"
    assert theorems.check_components_bijection(z4_space).detail == "1 components"
    assert theorems.check_components_primeful_form(z4_space)


def test_connected_transfer_and_equivalences_on_z4(z4_space: FiniteTopologySpace) -> None:
    equivalences = theorems.check_irreducible_equivalences(z4_space)

    assert theorems.check_theorem_connected_transfer(z4_space)
    assert equivalences.holds and equivalences.applicable
    assert "Υ_M irreducible=True" in equivalences.detail


def test_spectral_checks_on_z4(z4_space: FiniteTopologySpace) -> None:
    assert theorems.check_spectral_conditions(z4_space).detail == "four conditions hold; Noetherian criterion holds"
    noetherian = theorems.check_theorem_noetherian_spectral(z4_space)
    assert noetherian.detail == "hypothesis holds and the space is weakly spectral"


def test_zero_module_checks_are_not_applicable() -> None:
    space = _space("z4-zero-module")

    transfer = theorems.check_theorem_connected_transfer(space)
    equivalences = theorems.check_irreducible_equivalences(space)
    density = theorems.check_density(space, [])
    assert not transfer.applicable and transfer.detail == "empty spectrum"
    assert not equivalences.applicable and equivalences.detail == "zero module"
    assert not density.applicable and density.detail == "{0} is not a point"


def test_checks_need_a_spectrum_backed_space() -> None:
    space = FiniteTopologySpace.from_closed_sets(["a", "b"], [[], [1], [0, 1]], name="sierpinski")

    with pytest.raises(ValueError, match="was not built from a spectrum"):
        theorems.check_theorem_T1(space)


@pytest.mark.parametrize("name", builtin_names())
def test_catalog_spaces_satisfy_every_check(name: str) -> None:
    space, reason = try_build_zariski(catalog_instance(name).module)
    if space is None:
        pytest.skip(reason)
    subsets = point_subsets(space.size)

    assert theorems.check_closure_formula(space, subsets)
    assert theorems.check_theorem_irreducible_eta(space, subsets)
    assert theorems.check_irreducible_closed_sets(space)
    assert theorems.check_components_bijection(space)
    assert theorems.check_spectral_conditions(space)


@pytest.fixture
def split_space() -> FiniteTopologySpace:
    return _space("z4xz2-split")


def test_split_quotient_is_a_disconnected_space(split_space: FiniteTopologySpace) -> None:
    assert split_space.size == 2
    assert not is_connected(split_space)
    assert set(irreducible_components(split_space)) == {frozenset({0}), frozenset({1})}
    assert generic_points(split_space, [0]) == [0]
    assert generic_points(split_space, [1]) == [1]


def test_components_checks_on_a_disconnected_space(split_space: FiniteTopologySpace) -> None:
    assert theorems.check_components_bijection(split_space).detail == "2 components"
    assert theorems.check_irreducible_closed_sets(split_space).detail == "2 irreducible closed sets"


def test_irreducibility_bundle_on_a_disconnected_space(split_space: FiniteTopologySpace) -> None:
    items = theorems.check_corollary_irreducibility_bundle(split_space)

    assert items["space irreducible iff GPWrad(0) is a point"]
    assert not items["zero point makes the space irreducible"].applicable


def test_connected_transfer_skips_a_disconnected_space(split_space: FiniteTopologySpace) -> None:
    transfer = theorems.check_theorem_connected_transfer(split_space)

    assert not transfer.applicable
    assert transfer.detail == "module is not primeful"


@pytest.mark.parametrize("name", builtin_names())
def test_primeful_modules_have_the_zero_point(name: str) -> None:
    module = catalog_instance(name).module
    if module.is_zero() or not is_primeful(module):
        pytest.skip("zero or not primeful")
    spectrum = pseudo_spectrum(module)

    assert zero_submodule(module) in spectrum
    space, reason = try_build_zariski(spectrum)
    if space is None:
        pytest.skip(reason)
    assert is_irreducible(space, space.all_points)
    assert is_connected(space)


def test_connected_transfer_reports_a_disconnected_quotient(z4_space: FiniteTopologySpace, mocker: MockerFixture) -> None:
    mocker.patch.object(theorems, "is_connected", side_effect=lambda space: Verdict(space is z4_space))

    transfer = theorems.check_theorem_connected_transfer(z4_space)

    assert not transfer
    assert transfer.detail.startswith("Υ_M connected but GWSpec(")
