"""Carrier size bounds for the exhaustive algorithms."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_RING_SIZE = 4096
DEFAULT_MAX_MODULE_SIZE = 65536
DEFAULT_AXIOM_SCAN_SIZE = 256


@dataclass(frozen=True)
class SizeLimits:
    max_ring_size: int = DEFAULT_MAX_RING_SIZE
    max_module_size: int = DEFAULT_MAX_MODULE_SIZE

    @classmethod
    def uniform(cls, max_size: int) -> "SizeLimits":
        """Apply one bound to rings and modules alike (the `--max-size` flag)."""
        return cls(max_ring_size=max_size, max_module_size=max_size)


def ensure_within(size: int, bound: int, what: str) -> None:
    """Reject a carrier that exceeds its size bound."""
    if size > bound:
        raise ValueError(f"{what} has {size} elements, above the size bound {bound}.")
