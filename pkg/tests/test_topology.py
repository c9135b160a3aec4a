"""Tests for finite spaces, the Zariski space on the spectrum and the specialization order."""

from __future__ import annotations

from pathlib import Path

import pytest

from src.spectrum.spectrum import Spectrum, pseudo_spectrum
from src.topology.order import export_dot, render_dot, specialization_order
from src.topology.properties import (
    check_weakly_spectral,
    generic_points,
    irreducible_closed_sets,
    irreducible_components,
    is_connected,
    is_irreducible,
    is_quasi_compact,
    is_T0,
    is_T1,
    minimal_points,
    quasi_compact_opens,
    relatively_closed,
)
from src.topology.space import (
    FiniteTopologySpace,
    build_ring_zariski,
    build_zariski,
    closure,
    ring_spectrum,
    try_build_zariski,
)
from src.topology.subsets import point_subsets
from tests.conftest import catalog_instance, trivially_graded

Z4_DOT = (
    'digraph "Zariski space of Z_4" {\n'
    "\trankdir = BT;\n"
    "\tnode [shape = box];\n"
    '\t"p0" [label="<0>"];\n'
    '\t"p1" [label="<2>"];\n'
    '\t"p0" -> "p1";\n'
    "}\n"
)


def _space(name: str) -> FiniteTopologySpace:
    return build_zariski(pseudo_spectrum(catalog_instance(name).module))


def _sierpinski() -> FiniteTopologySpace:
    return FiniteTopologySpace.from_closed_sets(["a", "b"], [[], [1], [0, 1]], name="sierpinski")


def _indiscrete() -> FiniteTopologySpace:
    return FiniteTopologySpace.from_closed_sets(["a", "b"], [[], [0, 1]], name="indiscrete")


def _discrete() -> FiniteTopologySpace:
    return FiniteTopologySpace.from_closed_sets(["a", "b"], [[], [0], [1], [0, 1]], name="discrete")


def test_zariski_space_of_z4(z4_spectrum: Spectrum) -> None:
    space = build_zariski(z4_spectrum)

    assert space.labels == ["<0>", "<2>"]
    assert space.closed_sets == [frozenset(), frozenset({1}), frozenset({0, 1})]
    assert space.open_sets == [frozenset(), frozenset({0}), frozenset({0, 1})]
    assert space.closed_set_labels[frozenset({1})] == "<2>"
    assert space.check_axioms().passed
    assert space.describe_set({0, 1}) == "{<0>, <2>}"


def test_closure_agrees_with_the_algebraic_formula(z4_spectrum: Spectrum) -> None:
    space = build_zariski(z4_spectrum)

    assert closure(space, {0}) == frozenset({0, 1})
    assert closure(space, {1}) == frozenset({1})
    assert closure(space, set()) == frozenset()


def test_z4_separation_and_irreducibility(z4_spectrum: Spectrum) -> None:
    space = build_zariski(z4_spectrum)

    assert is_T0(space)
    t1 = is_T1(space)
    assert not t1
    assert t1.witness == 0
    assert is_connected(space)
    assert is_irreducible(space, {0, 1})
    assert irreducible_closed_sets(space) == [frozenset({1}), frozenset({0, 1})]
    assert irreducible_components(space) == [frozenset({0, 1})]
    assert generic_points(space, {0, 1}) == [0]
    assert minimal_points(space, [0, 1]) == [0]


def test_field_space_is_t1() -> None:
    space = _space("z5-trivial")

    assert space.size == 1
    assert is_T1(space)


@pytest.mark.parametrize("name", ["z6-trivial", "free-rank2-z2"])
def test_zariski_refuses_families_that_are_not_topologies(name: str) -> None:
    spectrum = pseudo_spectrum(catalog_instance(name).module)

    with pytest.raises(ValueError, match="is not a topology"):
        build_zariski(spectrum)
    space, reason = try_build_zariski(spectrum)
    assert space is None
    assert "the meet is zero" in reason


def test_ring_side_spaces() -> None:
    assert len(ring_spectrum(trivially_graded(6))) == 3
    assert build_ring_zariski(trivially_graded(4)).size == 2
    with pytest.raises(ValueError, match="is not a topology"):
        build_ring_zariski(trivially_graded(6))


def test_zero_module_space_is_empty() -> None:
    space = _space("z4-zero-module")

    assert space.size == 0
    assert space.closed_sets == [frozenset()]
    assert is_connected(space)


def test_from_closed_sets_validates_the_family() -> None:
    with pytest.raises(ValueError, match="Not a topology"):
        FiniteTopologySpace.from_closed_sets(["a", "b"], [[], [0], [1]])
    with pytest.raises(ValueError, match="names points outside"):
        FiniteTopologySpace.from_closed_sets(["a"], [[], [0], [0, 3]])


def test_sierpinski_space() -> None:
    space = _sierpinski()

    assert is_T0(space)
    assert not is_T1(space)
    assert is_connected(space)
    assert generic_points(space, {0, 1}) == [0]
    assert check_weakly_spectral(space).holds


def test_indiscrete_space_is_not_t0() -> None:
    space = _indiscrete()

    separation = is_T0(space)
    assert not separation
    assert separation.witness == (0, 1)
    assert generic_points(space, {0, 1}) == [0, 1]
    report = check_weakly_spectral(space)
    assert not report.holds
    assert not report.noetherian_criterion
    with pytest.raises(ValueError, match="not T0"):
        specialization_order(space)


def test_discrete_space() -> None:
    space = _discrete()

    assert is_T1(space)
    connected = is_connected(space)
    assert not connected
    assert connected.witness == frozenset({0})
    assert not is_irreducible(space, {0, 1})
    assert irreducible_components(space) == [frozenset({0}), frozenset({1})]
    assert relatively_closed(space, {0}) == [frozenset(), frozenset({0})]


def test_irreducible_rejects_empty_set() -> None:
    with pytest.raises(ValueError, match="empty set"):
        is_irreducible(_sierpinski(), set())


def test_generic_points_need_an_irreducible_closed_set() -> None:
    with pytest.raises(ValueError, match="not an irreducible closed set"):
        generic_points(_discrete(), {0, 1})


def test_quasi_compactness() -> None:
    space = _discrete()

    assert is_quasi_compact(space, space.all_points)
    assert quasi_compact_opens(space) == space.open_sets


def test_specialization_order_of_z4(z4_spectrum: Spectrum) -> None:
    order = specialization_order(build_zariski(z4_spectrum))

    assert order.strict_edges == [(0, 1)]
    assert order.out_degree(0) == 2
    assert order.is_antisymmetric()


def test_render_dot_of_z4(z4_spectrum: Spectrum) -> None:
    order = specialization_order(build_zariski(z4_spectrum))

    assert render_dot(order) == Z4_DOT


def test_render_dot_lists_nodes_by_submodule_code() -> None:
    space = _space("z12-trivial")

    node_lines = [line for line in render_dot(specialization_order(space)).splitlines() if "[label=" in line]

    assert space.labels == ["<0>", "<3>", "<2>"]
    assert node_lines == [
        '\t"p0" [label="<0>"];',
        '\t"p2" [label="<2>"];',
        '\t"p1" [label="<3>"];',
    ]


def test_export_dot_is_byte_identical_across_runs(tmp_path: Path) -> None:
    first = export_dot(specialization_order(_space("z4-trivial")), tmp_path / "first.dot")
    second = export_dot(specialization_order(_space("z4-trivial")), tmp_path / "nested" / "second.dot")

    assert first.read_bytes() == second.read_bytes() == Z4_DOT.encode("utf-8")


def test_export_dot_of_one_point_space(tmp_path: Path) -> None:
    path = export_dot(specialization_order(_space("z5-trivial")), tmp_path / "z5.dot")

    text = path.read_text(encoding="utf-8")
    assert text.count("[label=") == 1
    assert "->" not in text


def test_export_dot_refuses_empty_spectrum(tmp_path: Path) -> None:
    with pytest.raises(ValueError, match="no points"):
        export_dot(specialization_order(_space("z4-zero-module")), tmp_path / "empty.dot")


def test_point_subsets_exhaustive_when_small() -> None:
    subsets = point_subsets(3)

    assert len(subsets) == 7
    assert subsets[0] == frozenset({0})
    assert subsets[-1] == frozenset({0, 1, 2})


def test_point_subsets_sampled_deterministically() -> None:
    first = point_subsets(14, seed=1, exhaustive_limit=12, sample_count=50)
    second = point_subsets(14, seed=1, exhaustive_limit=12, sample_count=50)

    assert first == second
    assert 469 < len(first) <= 469 + 50
    assert frozenset() not in first
    assert len(set(first)) == len(first)
