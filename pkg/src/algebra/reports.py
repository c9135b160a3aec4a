"""Result types shared by axiom scans, predicates and theorem checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    witness: Optional[Tuple[int, ...]] = None
    detail: str = ""
    skipped: bool = False


@dataclass
class AxiomReport:
    subject: str
    checks: List[AxiomCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[AxiomCheck]:
        return [check for check in self.checks if not check.passed]

    def record(self, name: str, witness: Optional[Tuple[int, ...]] = None, detail: str = "") -> None:
        """Append a check; a witness marks it as failed."""
        self.checks.append(AxiomCheck(name=name, passed=witness is None, witness=witness, detail=detail))

    @property
    def skipped(self) -> List[AxiomCheck]:
        return [check for check in self.checks if check.skipped]

    def skip(self, name: str, reason: str) -> None:
        """Record a scan that was not run; it does not count as a failure."""
        self.checks.append(AxiomCheck(name=name, passed=True, detail=reason, skipped=True))

    def get(self, name: str) -> AxiomCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def merge(self, other: "AxiomReport", prefix: str = "") -> None:
        for check in other.checks:
            self.checks.append(
                AxiomCheck(
                    name=f"{prefix}{check.name}",
                    passed=check.passed,
                    witness=check.witness,
                    detail=check.detail,
                    skipped=check.skipped,
                )
            )

    def summary(self) -> str:
        if self.passed:
            scanned = len(self.checks) - len(self.skipped)
            suffix = f", {len(self.skipped)} not scanned" if self.skipped else ""
            return f"{self.subject}: {scanned} axioms pass{suffix}"
        names = ", ".join(f"{check.name} {check.witness}" for check in self.failures)
        return f"{self.subject}: failed {names}"


@dataclass
class Verdict:
    """Boolean answer with the counterexample that decided it."""

    holds: bool
    witness: Any = None
    detail: str = ""
    applicable: bool = True

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def not_applicable(cls, reason: str) -> "Verdict":
        return cls(holds=True, detail=reason, applicable=False)
