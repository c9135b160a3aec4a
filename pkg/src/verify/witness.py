"""Readable text for counterexample witnesses."""

from __future__ import annotations

from typing import Any

from src.graded.submodules import GradedSubmodule


def describe_witness(witness: Any) -> str:
    if isinstance(witness, GradedSubmodule):
        return witness.label()
    if isinstance(witness, (frozenset, set)):
        return "{" + ", ".join(describe_witness(item) for item in sorted(witness, key=repr)) + "}"
    if isinstance(witness, dict):
        return ", ".join(f"{key}={describe_witness(value)}" for key, value in witness.items())
    if isinstance(witness, (tuple, list)):
        return "(" + ", ".join(describe_witness(item) for item in witness) + ")"
    return str(witness)
