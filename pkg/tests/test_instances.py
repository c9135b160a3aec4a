"""Tests for instance files, the builder and the catalog."""

from __future__ import annotations

from pathlib import Path
from typing import Callable, Dict

import pytest

from src.algebra.limits import SizeLimits
from src.instances.builder import InstanceBuilder
from src.instances.catalog import BUILTIN, all_specs, builtin_names, extra_specs, get_spec
from src.instances.loader import (
    emit_instance,
    load_instance,
    load_instance_spec,
    parse_instance_text,
    write_instance,
)
from src.instances.models import GroupRingSpec, InstanceSpec, IntegersModSpec, RingQuotientSpec

Z3_YAML = """\
name: my-z3
description: Z_3 over itself
grading_group: [2]
ring:
  kind: integers_mod
  n: 3
"""


def _resolver(specs: Dict[str, InstanceSpec]) -> Callable[[str], InstanceSpec]:
    return specs.__getitem__


def test_catalog_names_are_sorted_and_unique() -> None:
    names = builtin_names()

    assert names == sorted(names)
    assert len(names) == len(BUILTIN)
    assert "z4-trivial" in names


def test_get_spec_unknown_name() -> None:
    with pytest.raises(KeyError):
        get_spec("no-such-instance")


def test_module_defaults_to_the_ring_itself() -> None:
    spec = parse_instance_text(Z3_YAML)

    assert spec.module.kind == "self"
    assert spec.ring == IntegersModSpec(n=3)


def test_emitted_catalog_entries_parse_back() -> None:
    for spec in BUILTIN:
        assert parse_instance_text(emit_instance(spec, "yaml")) == spec
        assert parse_instance_text(emit_instance(spec, "json"), fmt="json") == spec


def test_emit_lists_known_failures_only_when_present() -> None:
    assert "known_failures" not in emit_instance(get_spec("z4-trivial"), "yaml")
    assert "weakly-prime-submodules" in emit_instance(get_spec("z8-mod-4"), "yaml")
    assert get_spec("z8-mod-4").known_failures == ["weakly-prime-submodules"]


def test_emit_rejects_unknown_format() -> None:
    with pytest.raises(ValueError, match="Unknown instance format 'toml'"):
        emit_instance(get_spec("z4-trivial"), "toml")


def test_write_and_load_json_file(tmp_path: Path) -> None:
    spec = get_spec("group-ring-4-z2-mod-2")

    path = write_instance(spec, tmp_path / "nested" / "instance.json")

    assert path.read_text(encoding="utf-8").startswith("{")
    assert load_instance_spec(path) == spec


def test_json_errors_carry_a_position() -> None:
    with pytest.raises(ValueError, match=r"^inst\.json:1:\d+: Expecting value"):
        parse_instance_text('{"name": ', source="inst.json", fmt="json")


def test_yaml_errors_carry_a_position() -> None:
    with pytest.raises(ValueError, match=r"^inst\.yaml:2:1: "):
        parse_instance_text("name: x\n- item\n", source="inst.yaml")


def test_top_level_must_be_a_mapping() -> None:
    with pytest.raises(ValueError, match="mapping at the top level"):
        parse_instance_text("- 1\n- 2\n")


def test_schema_errors_name_the_field_path() -> None:
    text = "name: bad\ngrading_group: [2]\nring:\n  kind: integers_mod\n  n: 1\n"

    with pytest.raises(ValueError, match="invalid instance") as excinfo:
        parse_instance_text(text, source="bad.yaml")
    assert "ring.integers_mod.n" in str(excinfo.value)


def test_schema_rejects_unknown_fields_and_bad_orders() -> None:
    with pytest.raises(ValueError, match="colour: Extra inputs are not permitted"):
        parse_instance_text(Z3_YAML + "colour: blue\n")
    with pytest.raises(ValueError, match="cyclic orders must be >= 1"):
        parse_instance_text(Z3_YAML.replace("[2]", "[0]"))


def test_missing_instance_file(tmp_path: Path) -> None:
    with pytest.raises(ValueError, match="Instance file not found"):
        load_instance(tmp_path / "absent.yaml")


def test_load_instance_builds_structures(tmp_path: Path) -> None:
    path = tmp_path / "z3.yaml"
    path.write_text(Z3_YAML, encoding="utf-8")

    instance = load_instance(path)

    assert instance.name == "my-z3"
    assert instance.ring.size == 3
    assert instance.module.size == 3
    assert instance.axioms.passed


@pytest.mark.parametrize(
    ("name", "ring_size", "module_size"),
    [
        ("z4-trivial", 4, 4),
        ("group-ring-4-z2", 16, 16),
        ("group-ring-4-z2-mod-2", 4, 4),
        ("free-rank2-z2", 2, 4),
        ("free-rank2-z2-mod-a", 2, 2),
        ("z4-zero-module", 4, 1),
        ("z4xz2-split", 8, 4),
        ("z8-mod-4", 8, 4),
    ],
)
def test_catalog_sizes(name: str, ring_size: int, module_size: int) -> None:
    instance = InstanceBuilder().build(get_spec(name))

    assert instance.ring.size == ring_size
    assert instance.module.size == module_size


def test_non_homogeneous_generator_is_rejected() -> None:
    spec = InstanceSpec(
        name="bad-quotient",
        grading_group=[2],
        ring=RingQuotientSpec(base=GroupRingSpec(n=2), generators=[3]),
    )

    with pytest.raises(ValueError, match="Generator 3 is not a homogeneous element"):
        InstanceBuilder().build(spec)


def test_ring_size_bound() -> None:
    spec = InstanceSpec(name="huge", grading_group=[2], ring=IntegersModSpec(n=5000))

    with pytest.raises(ValueError) as excinfo:
        InstanceBuilder().build(spec)
    assert str(excinfo.value) == "Ring Z_5000 has 5000 elements, above the size bound 4096."


def test_module_size_bound() -> None:
    builder = InstanceBuilder(limits=SizeLimits(max_ring_size=4096, max_module_size=2))

    with pytest.raises(ValueError, match="Module of z4-trivial has 4 elements, above the size bound 2"):
        builder.build(get_spec("z4-trivial"))


def test_circular_references_are_rejected() -> None:
    first = InstanceSpec(name="a", grading_group=[2], ring=RingQuotientSpec(base="b", generators=[0]))
    second = InstanceSpec(name="b", grading_group=[2], ring=RingQuotientSpec(base="a", generators=[0]))
    builder = InstanceBuilder(resolver=_resolver({"a": first, "b": second}))

    with pytest.raises(ValueError, match="Circular instance reference: a -> b -> a"):
        builder.build(first)


def test_unknown_references_are_rejected() -> None:
    spec = InstanceSpec(name="dangling", grading_group=[2], ring=RingQuotientSpec(base="missing", generators=[0]))

    with pytest.raises(ValueError, match="Unknown instance name 'missing'"):
        InstanceBuilder().build(spec)


def test_references_must_share_the_grading_group() -> None:
    spec = InstanceSpec(name="mixed", grading_group=[3], ring=RingQuotientSpec(base="z4-trivial", generators=[2]))

    with pytest.raises(ValueError, match="graded by a different group"):
        InstanceBuilder().build(spec)


def test_extra_directory_adds_instances(tmp_path: Path) -> None:
    (tmp_path / "z3.yaml").write_text(Z3_YAML, encoding="utf-8")
    (tmp_path / "notes.txt").write_text("ignored", encoding="utf-8")

    names = [spec.name for spec in all_specs(tmp_path)]

    assert "my-z3" in names
    assert names == sorted(names)
    assert len(extra_specs(tmp_path)) == 1


def test_extra_directory_rejects_duplicate_names(tmp_path: Path) -> None:
    write_instance(get_spec("z4-trivial"), tmp_path / "copy.yaml")

    with pytest.raises(ValueError, match="Duplicate instance name 'z4-trivial'"):
        all_specs(tmp_path)


def test_extra_directory_must_exist(tmp_path: Path) -> None:
    with pytest.raises(ValueError, match="Catalog directory not found"):
        all_specs(tmp_path / "absent")
