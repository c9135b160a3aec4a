"""Exhaustive axiom scans for finite groups and rings."""

from __future__ import annotations

import logging
from typing import Optional, Tuple

import numpy as np

from src.algebra.groups import FiniteAbelianGroup
from src.algebra.limits import DEFAULT_AXIOM_SCAN_SIZE, ensure_within
from src.algebra.reports import AxiomReport
from src.algebra.rings import FiniteCommRing

logger = logging.getLogger(__name__)


def _first(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(value) for value in hits[0])


def _prefixed(prefix: int, witness: Optional[Tuple[int, ...]]) -> Optional[Tuple[int, ...]]:
    if witness is None:
        return None
    return (prefix,) + witness


def _scan_table(report: AxiomReport, label: str, table: np.ndarray, size: int) -> None:
    """Closure, commutativity and associativity of a binary table."""
    report.record(f"{label} closure", _first((table < 0) | (table >= size)))
    if not report.get(f"{label} closure").passed:
        report.record(f"{label} commutativity", None, detail="skipped: table not closed")
        report.record(f"{label} associativity", None, detail="skipped: table not closed")
        return
    report.record(f"{label} commutativity", _first(table != table.T))
    witness = None
    for a in range(size):
        # (a*b)*c against a*(b*c) over all b, c
        witness = _prefixed(a, _first(table[table[a]] != table[a][table]))
        if witness is not None:
            break
    report.record(f"{label} associativity", witness)


def check_group_axioms(group: FiniteAbelianGroup, max_size: int = DEFAULT_AXIOM_SCAN_SIZE) -> AxiomReport:
    """Scan the Cayley table of ``group``; failures carry witness tuples."""
    ensure_within(group.size, max_size, "Group axiom scan")
    table = group.addition_table
    return _check_additive_table(f"group {list(group.cyclic_orders)}", table, group.size)


def _check_additive_table(subject: str, table: np.ndarray, size: int) -> AxiomReport:
    report = AxiomReport(subject=subject)
    _scan_table(report, "addition", table, size)
    report.record("additive identity", _first(table[0] != np.arange(size)))
    missing = np.flatnonzero(~(table == 0).any(axis=1))
    report.record("additive inverses", (int(missing[0]),) if missing.size else None)
    return report


def check_ring_axioms(ring: FiniteCommRing, max_size: int = DEFAULT_AXIOM_SCAN_SIZE) -> AxiomReport:
    """Commutative unital ring axioms by exhaustive triple scan."""
    ensure_within(ring.size, max_size, "Ring axiom scan")
    size = ring.size
    addition = ring.additive_group.addition_table
    table = ring.table
    report = _check_additive_table(f"ring {ring.name}", addition, size)
    _scan_table(report, "multiplication", table, size)

    witness = None
    if report.get("multiplication closure").passed:
        for a in range(size):
            left = table[a][addition]
            right = addition[table[a][:, None], table[a][None, :]]
            witness = _prefixed(a, _first(left != right))
            if witness is not None:
                break
    report.record("distributivity", witness)

    unity = _first(table[ring.one] != np.arange(size))
    report.record("unity", None if unity is None else (ring.one,) + unity)
    degenerate = ring.one == ring.zero and size > 1
    report.record("unity differs from zero", (ring.one,) if degenerate else None)
    logger.debug(report.summary())
    return report
