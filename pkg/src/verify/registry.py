"""The theorem suite: one registered check per structural statement."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, FrozenSet, List, Optional

from src.algebra.reports import Verdict
from src.graded.quotients import quotient_graded_module
from src.graded.submodules import (
    brute_force_graded_submodules,
    enumerate_graded_ideals,
    lattice_oracle_graded_submodules,
)
from src.instances.builder import Instance
from src.spectrum import ideals
from src.spectrum.classification import (
    check_corollary_injective_implies_multiplication,
    check_lemma_radical_colon,
    is_multiplication_module,
)
from src.spectrum.spectrum import Spectrum, gpw_rad, is_pseudo_weakly_prime, is_weakly_topological, pseudo_spectrum, variety
from src.topology import theorems
from src.topology.space import FiniteTopologySpace

logger = logging.getLogger(__name__)


@dataclass
class CheckContext:
    instance: Instance
    spectrum: Spectrum
    space: Optional[FiniteTopologySpace]
    topology_reason: str = ""
    subsets: List[FrozenSet[int]] = field(default_factory=list)
    oracle_max_size: int = 64
    subset_oracle_max_size: int = 16

    @property
    def topology(self) -> FiniteTopologySpace:
        if self.space is None:
            raise ValueError(self.topology_reason or "no topology")
        return self.space


@dataclass(frozen=True)
class TheoremEntry:
    theorem_id: str
    title: str
    run: Callable[[CheckContext], Verdict]
    needs_topology: bool = False


def _oracle(context: CheckContext) -> Verdict:
    module = context.instance.module
    if module.size > context.oracle_max_size:
        return Verdict.not_applicable(f"|M| = {module.size} exceeds the oracle bound {context.oracle_max_size}")
    enumerated = {submodule.elements for submodule in context.spectrum.lattice}
    lattice_side = {submodule.elements for submodule in lattice_oracle_graded_submodules(module, context.oracle_max_size)}
    if enumerated != lattice_side:
        return Verdict(False, witness=sorted(enumerated ^ lattice_side, key=sorted), detail="lattice oracle disagrees")
    if module.size > context.subset_oracle_max_size:
        return Verdict(True, detail=f"{len(enumerated)} submodules, lattice oracle")
    literal = {submodule.elements for submodule in brute_force_graded_submodules(module, context.subset_oracle_max_size)}
    if enumerated != literal:
        return Verdict(False, witness=sorted(enumerated ^ literal, key=sorted), detail="subset oracle disagrees")
    return Verdict(True, detail=f"{len(enumerated)} submodules, both oracles")


def _pair_form(context: CheckContext) -> Verdict:
    ring = context.instance.module.base
    graded = enumerate_graded_ideals(ring)
    for ideal in graded:
        elementwise = bool(ideals.is_graded_weakly_prime_ideal(ideal))
        pairwise = bool(ideals.is_graded_weakly_prime_pairs(ideal, graded))
        if elementwise != pairwise:
            return Verdict(
                False,
                witness=ideal,
                detail=f"{ideal.label()}: elementwise={elementwise}, ideal pairs={pairwise}",
            )
    return Verdict(True, detail=f"{len(graded)} graded ideals of {ring.name}")


def _weakly_prime_submodules(context: CheckContext) -> Verdict:
    spectrum = context.spectrum
    for submodule in spectrum.lattice:
        if submodule.is_proper() and ideals.is_graded_weakly_prime_submodule(submodule):
            if submodule not in spectrum:
                return Verdict(False, witness=submodule, detail=f"{submodule.label()} is weakly prime but not a point")
    return Verdict(True)


def _colon_ideals_graded(context: CheckContext) -> Verdict:
    # colon_ideal raises when its result is not a graded ideal
    for submodule in context.spectrum.lattice:
        ideals.colon_ideal(submodule, context.instance.module)
    return Verdict(True, detail=f"{len(context.spectrum.lattice)} colon ideals")


def _gpw_rad_closure(context: CheckContext) -> Verdict:
    spectrum = context.spectrum
    covered = [submodule for submodule in spectrum.lattice if variety(spectrum, submodule)]
    for submodule in covered:
        radical = gpw_rad(spectrum, submodule)
        if not submodule <= radical:
            return Verdict(False, witness=submodule, detail="not extensive")
        if gpw_rad(spectrum, radical) != radical:
            return Verdict(False, witness=submodule, detail="not idempotent")
        for larger in covered:
            if submodule <= larger and not radical <= gpw_rad(spectrum, larger):
                return Verdict(False, witness=(submodule, larger), detail="not monotone")
    return Verdict(True, detail=f"{len(covered)} submodules with nonempty variety")


def _union_identity(context: CheckContext) -> Verdict:
    report = is_weakly_topological(context.spectrum)
    if report.holds != report.union_identity_holds:
        return Verdict(False, detail=report.describe())
    closed = "the χ-family is a topology" if report.union_closed else report.describe()
    return Verdict(True, detail=f"weakly topological={report.holds}; {closed}")


def _multiplication_topological(context: CheckContext) -> Verdict:
    if not is_multiplication_module(context.instance.module):
        return Verdict(True, detail="not a multiplication module: implication vacuous")
    report = is_weakly_topological(context.spectrum)
    if not report.holds:
        return Verdict(False, witness=report.failing_pair, detail=report.describe())
    return Verdict(True, detail="multiplication and weakly topological")


def _quotients_topological(context: CheckContext) -> Verdict:
    module = context.instance.module
    if not is_weakly_topological(context.spectrum):
        return Verdict.not_applicable("module is not weakly topological")
    for submodule in context.spectrum.lattice:
        quotient = quotient_graded_module(module, submodule)
        report = is_weakly_topological(pseudo_spectrum(quotient))
        if not report.holds:
            return Verdict(False, witness=submodule, detail=f"{quotient.name}: {report.describe()}")
    return Verdict(True, detail=f"{len(context.spectrum.lattice)} quotients")


def _injective_multiplication(context: CheckContext) -> Verdict:
    return check_corollary_injective_implies_multiplication(context.spectrum)


def _radical_colon(context: CheckContext) -> Verdict:
    return check_lemma_radical_colon(context.spectrum)


def _closure(context: CheckContext) -> Verdict:
    return theorems.check_closure_formula(context.topology, context.subsets)


def _density(context: CheckContext) -> Verdict:
    return theorems.check_density(context.topology, context.subsets)


def _t0(context: CheckContext) -> Verdict:
    return theorems.check_t0(context.topology)


def _closed_points(context: CheckContext) -> Verdict:
    return theorems.check_closed_points(context.topology)


def _t1(context: CheckContext) -> Verdict:
    return theorems.check_theorem_T1(context.topology)


def _irreducible_eta(context: CheckContext) -> Verdict:
    return theorems.check_theorem_irreducible_eta(context.topology, context.subsets)


def _irreducibility_bundle(context: CheckContext) -> Verdict:
    return theorems.combine(theorems.check_corollary_irreducibility_bundle(context.topology))


def _irreducible_closed(context: CheckContext) -> Verdict:
    return theorems.check_irreducible_closed_sets(context.topology)


def _components(context: CheckContext) -> Verdict:
    return theorems.check_components_bijection(context.topology)


def _components_primeful(context: CheckContext) -> Verdict:
    return theorems.check_components_primeful_form(context.topology)


def _connected(context: CheckContext) -> Verdict:
    return theorems.check_theorem_connected_transfer(context.topology)


def _equivalences(context: CheckContext) -> Verdict:
    return theorems.check_irreducible_equivalences(context.topology)


def _spectral(context: CheckContext) -> Verdict:
    return theorems.check_spectral_conditions(context.topology)


def _noetherian(context: CheckContext) -> Verdict:
    return theorems.check_theorem_noetherian_spectral(context.topology)


def _is_point(context: CheckContext) -> Verdict:
    # every recorded point passes the predicate again
    for point in context.spectrum.points:
        verdict = is_pseudo_weakly_prime(point, context.instance.module)
        if not verdict:
            return Verdict(False, witness=point, detail=verdict.detail)
    return Verdict(True, detail=f"{len(context.spectrum)} points")


REGISTRY: List[TheoremEntry] = [
    TheoremEntry("lattice-oracle", "Graded submodule enumeration matches the oracles", _oracle),
    TheoremEntry("spectrum-points", "Every point of Υ_M has a graded weakly prime colon ideal", _is_point),
    TheoremEntry("colon-ideals-graded", "(P :_R M) is a graded ideal", _colon_ideals_graded),
    TheoremEntry("weakly-prime-pair-form", "Elementwise and ideal-pair weakly prime tests agree", _pair_form),
    TheoremEntry(
        "weakly-prime-submodules",
        "Graded weakly prime submodules are pseudo weakly prime",
        _weakly_prime_submodules,
    ),
    TheoremEntry("gpw-rad-closure", "GPWrad is extensive, monotone and idempotent", _gpw_rad_closure),
    TheoremEntry(
        "union-identity",
        "Weakly topological iff χ(I) ∪ χ(J) = χ(I ∩ J) for semiprime pairs",
        _union_identity,
    ),
    TheoremEntry(
        "multiplication-topological",
        "Multiplication modules are weakly topological",
        _multiplication_topological,
    ),
    TheoremEntry(
        "quotients-topological",
        "Quotients of weakly topological modules are weakly topological",
        _quotients_topological,
    ),
    TheoremEntry(
        "injective-multiplication",
        "Pseudo weakly injective modules are multiplication modules",
        _injective_multiplication,
    ),
    TheoremEntry("radical-colon", "For primeful M and radical P: P = (PM : M) iff Ann(M) ⊆ P", _radical_colon),
    TheoremEntry("closure-formula", "Cl(W) = χ(η(W))", _closure, needs_topology=True),
    TheoremEntry("zero-point-density", "Sets containing the zero point are dense", _density, needs_topology=True),
    TheoremEntry("t0", "Υ_M is T0", _t0, needs_topology=True),
    TheoremEntry(
        "closed-points",
        "{C} closed iff its colon is maximal in Ω with singleton fiber",
        _closed_points,
        needs_topology=True,
    ),
    TheoremEntry("t1-criterion", "T1 iff every colon is maximal in Ω with singleton fiber", _t1, needs_topology=True),
    TheoremEntry(
        "irreducible-eta",
        "W irreducible iff η(W) is pseudo weakly prime",
        _irreducible_eta,
        needs_topology=True,
    ),
    TheoremEntry(
        "irreducibility-corollaries",
        "Consequences for varieties, fibers, GMax and domains",
        _irreducibility_bundle,
        needs_topology=True,
    ),
    TheoremEntry(
        "irreducible-closed-sets",
        "Irreducible closed sets are the χ(I) with generic point I",
        _irreducible_closed,
        needs_topology=True,
    ),
    TheoremEntry(
        "components-minimal-points",
        "Components correspond to minimal points",
        _components,
        needs_topology=True,
    ),
    TheoremEntry(
        "components-primeful-form",
        "Components of a primeful module are χ(LM)",
        _components_primeful,
        needs_topology=True,
    ),
    TheoremEntry(
        "connected-transfer",
        "φ⁻¹(χ(K*)) = χ(KM) and connectedness passes to R/Ann(M)",
        _connected,
        needs_topology=True,
    ),
    TheoremEntry(
        "irreducible-equivalences",
        "Five characterisations of irreducibility agree",
        _equivalences,
        needs_topology=True,
    ),
    TheoremEntry("weakly-spectral", "Υ_M satisfies the weakly spectral conditions", _spectral, needs_topology=True),
    TheoremEntry(
        "noetherian-spectral",
        "χ(P) = χ(IM) for all P makes Υ_M weakly spectral",
        _noetherian,
        needs_topology=True,
    ),
]


def theorem_ids(registry: Optional[List[TheoremEntry]] = None) -> List[str]:
    return [entry.theorem_id for entry in (REGISTRY if registry is None else registry)]
