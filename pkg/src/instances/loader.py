"""Read and write instance files (YAML, or JSON by extension)."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import ValidationError

from src.instances.builder import Instance, InstanceBuilder
from src.instances.models import InstanceSpec

logger = logging.getLogger(__name__)

FORMATS = ("yaml", "json")


def _format_for(path: Path) -> str:
    return "json" if path.suffix.lower() == ".json" else "yaml"


def _parse_document(text: str, source: str, fmt: str) -> Any:
    if fmt == "json":
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        problem = getattr(exc, "problem", None) or str(exc)
        if mark is not None:
            raise ValueError(f"{source}:{mark.line + 1}:{mark.column + 1}: {problem}") from exc
        raise ValueError(f"{source}: {problem}") from exc


def _validation_message(source: str, exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        location = ".".join(str(item) for item in error["loc"]) or "<root>"
        parts.append(f"{location}: {error['msg']}")
    return f"{source}: invalid instance: " + "; ".join(parts)


def parse_instance_text(text: str, source: str = "<string>", fmt: str = "yaml") -> InstanceSpec:
    if fmt not in FORMATS:
        raise ValueError(f"Unknown instance format '{fmt}'; expected one of {', '.join(FORMATS)}.")
    document = _parse_document(text, source, fmt)
    if not isinstance(document, dict):
        raise ValueError(f"{source}: an instance file must contain a mapping at the top level.")
    try:
        return InstanceSpec.model_validate(document)
    except ValidationError as exc:
        raise ValueError(_validation_message(source, exc)) from exc


def load_instance_spec(path: Path) -> InstanceSpec:
    if not path.is_file():
        raise ValueError(f"Instance file not found: {path}")
    return parse_instance_text(path.read_text(encoding="utf-8"), source=str(path), fmt=_format_for(path))


def load_instance(path: Path, builder: Optional[InstanceBuilder] = None) -> Instance:
    """Parse, validate and build one instance file; every failure surfaces as ValueError."""
    spec = load_instance_spec(path)
    instance = (builder or InstanceBuilder()).build(spec)
    logger.info("Loaded instance %s from %s", instance.name, path)
    return instance


def emit_instance(spec: InstanceSpec, fmt: str = "yaml") -> str:
    """Canonical text of an instance; reading it back gives an equal spec."""
    data = spec.model_dump(mode="json")
    if not data["known_failures"]:
        del data["known_failures"]
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt == "yaml":
        return yaml.safe_dump(data, sort_keys=False, default_flow_style=None)
    raise ValueError(f"Unknown instance format '{fmt}'; expected one of {', '.join(FORMATS)}.")


def write_instance(spec: InstanceSpec, path: Path, fmt: Optional[str] = None) -> Path:
    """Write ``spec`` in ``fmt``, or in the format its suffix names."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_instance(spec, fmt or _format_for(path)), encoding="utf-8")
    return path
