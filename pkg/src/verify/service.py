"""Theorem-suite orchestration and per-instance analysis."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from src.algebra.limits import DEFAULT_MAX_MODULE_SIZE
from src.algebra.reports import Verdict
from src.graded.submodules import enumerate_graded_ideals
from src.instances.builder import Instance
from src.spectrum import ideals
from src.spectrum.classification import classify, gmax_submodules
from src.spectrum.spectrum import Spectrum, is_weakly_topological, pseudo_spectrum
from src.topology.space import FiniteTopologySpace, try_build_zariski
from src.topology.subsets import DEFAULT_EXHAUSTIVE_LIMIT, DEFAULT_SAMPLE_COUNT, point_subsets
from src.verify.registry import REGISTRY, CheckContext, TheoremEntry, theorem_ids
from src.verify.witness import describe_witness

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"
KNOWN_FAILURE = "known_failure"


@dataclass
class VerifyOptions:
    seed: int = 0
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT
    sample_count: int = DEFAULT_SAMPLE_COUNT
    max_module_size: int = DEFAULT_MAX_MODULE_SIZE
    oracle_max_size: int = 64
    subset_oracle_max_size: int = 16


@dataclass
class TheoremResult:
    theorem_id: str
    title: str
    status: str
    detail: str
    witness: Optional[str]
    seconds: float = 0.0


@dataclass
class VerificationReport:
    instance: str
    results: List[TheoremResult]

    @property
    def counts(self) -> Dict[str, int]:
        counts = {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0, KNOWN_FAILURE: 0}
        for result in self.results:
            counts[result.status] += 1
        return counts

    @property
    def passed(self) -> bool:
        return self.counts[FAIL] == 0

    @property
    def failures(self) -> List[TheoremResult]:
        return [result for result in self.results if result.status == FAIL]


@dataclass
class SuiteReport:
    reports: List[VerificationReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def counts(self) -> Dict[str, int]:
        totals = {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0, KNOWN_FAILURE: 0}
        for report in self.reports:
            for status, count in report.counts.items():
                totals[status] += count
        return totals


def _status(verdict: Verdict) -> str:
    if not verdict.applicable:
        return NOT_APPLICABLE
    return PASS if verdict.holds else FAIL


class VerificationService:
    """Runs every registered check on an instance, in registry order."""

    def __init__(self, options: Optional[VerifyOptions] = None, registry: Optional[List[TheoremEntry]] = None) -> None:
        self._options = options or VerifyOptions()
        self._registry = registry if registry is not None else REGISTRY

    def verify_all(self, instances: List[Instance]) -> SuiteReport:
        ordered = sorted(instances, key=lambda instance: instance.name)
        suite = SuiteReport()
        for index, instance in enumerate(ordered, start=1):
            logger.info("Verifying instance %s/%s: %s", index, len(ordered), instance.name)
            suite.reports.append(self.verify_instance(instance))
        return suite

    def verify_instance(self, instance: Instance) -> VerificationReport:
        try:
            context = self._context(instance)
        except Exception as exc:
            logger.error("Could not build the spectrum of %s: %s", instance.name, exc)
            results = [
                TheoremResult(entry.theorem_id, entry.title, FAIL, f"error: {exc}", None) for entry in self._registry
            ]
            return VerificationReport(instance=instance.name, results=results)

        unknown = sorted(set(instance.spec.known_failures) - set(theorem_ids(self._registry)))
        if unknown:
            logger.warning("%s lists unknown checks as known failures: %s", instance.name, ", ".join(unknown))
        if context.space is None:
            logger.warning("Topology checks skipped for %s: %s", instance.name, context.topology_reason)
        results = [self._run(entry, context) for entry in self._registry]
        report = VerificationReport(instance=instance.name, results=results)
        counts = report.counts
        logger.info(
            "Finished %s: %s passed, %s failed, %s not applicable, %s known counterexamples",
            instance.name,
            counts[PASS],
            counts[FAIL],
            counts[NOT_APPLICABLE],
            counts[KNOWN_FAILURE],
        )
        return report

    def _context(self, instance: Instance) -> CheckContext:
        options = self._options
        spectrum = pseudo_spectrum(instance.module, options.max_module_size)
        space, reason = try_build_zariski(spectrum)
        subsets = point_subsets(len(spectrum), options.seed, options.exhaustive_limit, options.sample_count)
        logger.debug("%s: %s point subsets for quantified checks", instance.name, len(subsets))
        return CheckContext(
            instance=instance,
            spectrum=spectrum,
            space=space,
            topology_reason=reason,
            subsets=subsets,
            oracle_max_size=options.oracle_max_size,
            subset_oracle_max_size=options.subset_oracle_max_size,
        )

    def _run(self, entry: TheoremEntry, context: CheckContext) -> TheoremResult:
        if entry.needs_topology and context.space is None:
            detail = f"no topology: {context.topology_reason}"
            return TheoremResult(entry.theorem_id, entry.title, NOT_APPLICABLE, detail, None)
        started = time.perf_counter()
        errored = False
        try:
            verdict = entry.run(context)
        except Exception as exc:
            errored = True
            verdict = Verdict(False, detail=f"error: {exc}")
        elapsed = time.perf_counter() - started
        status = _status(verdict)
        detail = verdict.detail
        if entry.theorem_id in context.instance.spec.known_failures and not errored:
            if status == FAIL:
                status = KNOWN_FAILURE
                detail = f"known counterexample: {detail}".rstrip()
            elif status == PASS:
                status = FAIL
                detail = "listed as a known counterexample, but the check passed"
        witness = None
        if status in (FAIL, KNOWN_FAILURE) and verdict.witness is not None:
            witness = describe_witness(verdict.witness)
        if status == FAIL:
            logger.error("%s failed on %s: %s %s", entry.theorem_id, context.instance.name, detail, witness or "")
        elif status == KNOWN_FAILURE:
            logger.info("%s: known counterexample on %s", entry.theorem_id, context.instance.name)
        return TheoremResult(entry.theorem_id, entry.title, status, detail, witness, elapsed)


@dataclass
class IdealRow:
    ideal: str
    graded_prime: bool
    graded_weakly_prime: bool
    colon_of_point: bool


@dataclass
class AnalysisReport:
    instance: str
    ring: str
    module: str
    ring_size: int
    module_size: int
    lattice_size: int
    annihilator: str
    points: Dict[str, str]
    fibers: Dict[str, List[str]]
    gspec: List[str]
    gwspec: List[str]
    ideal_table: List[IdealRow]
    gmax: List[str]
    flags: Dict[str, bool]
    closed_sets: List[List[str]]
    topology_note: str
    spectrum: Optional[Spectrum] = field(default=None, repr=False)
    space: Optional[FiniteTopologySpace] = field(default=None, repr=False)


def analyze_instance(instance: Instance, max_module_size: int = DEFAULT_MAX_MODULE_SIZE) -> AnalysisReport:
    """Υ_M with colons and fibers, GSpec vs GWSpec vs Ω, and the module's flags."""
    module = instance.module
    ring = module.base
    spectrum = pseudo_spectrum(module, max_module_size)
    space, reason = try_build_zariski(spectrum)
    graded = enumerate_graded_ideals(ring)
    colons = spectrum.colon_ideals

    rows = [
        IdealRow(
            ideal=ideal.label(),
            graded_prime=bool(ideals.is_graded_prime_ideal(ideal)),
            graded_weakly_prime=bool(ideals.is_graded_weakly_prime_ideal(ideal)),
            colon_of_point=ideal in colons,
        )
        for ideal in graded
    ]
    fibers: Dict[str, List[str]] = {}
    for point in spectrum.points:
        fibers.setdefault(spectrum.colon_of[point].label(), []).append(point.label())

    weak = is_weakly_topological(spectrum)
    kinds = classify(spectrum)
    logger.debug("%s: %s", instance.name, kinds.summary)
    flags = {
        "multiplication": kinds.multiplication,
        "primeful": kinds.primeful,
        "pseudo_weakly_injective": kinds.injective,
        "weakly_topological": weak.holds,
        "topology": space is not None,
    }
    closed_sets = []
    if space is not None:
        closed_sets = [[space.labels[index] for index in sorted(closed)] for closed in space.closed_sets]
    return AnalysisReport(
        instance=instance.name,
        ring=ring.name,
        module=module.name,
        ring_size=ring.size,
        module_size=module.size,
        lattice_size=len(spectrum.lattice),
        annihilator=ideals.annihilator(module).label(),
        points={point.label(): spectrum.colon_of[point].label() for point in spectrum.points},
        fibers=fibers,
        gspec=[ideal.label() for ideal in ideals.graded_prime_ideals(ring)],
        gwspec=[ideal.label() for ideal in graded if ideals.is_graded_weakly_prime_ideal(ideal)],
        ideal_table=rows,
        gmax=[submodule.label() for submodule in gmax_submodules(module)],
        flags=flags,
        closed_sets=closed_sets,
        topology_note=reason,
        spectrum=spectrum,
        space=space,
    )
