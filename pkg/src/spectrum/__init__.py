"""Colon ideals, weakly prime tests and the graded pseudo weakly prime spectrum."""

from .classification import (
    NaturalMap,
    check_corollary_injective_implies_multiplication,
    check_lemma_radical_colon,
    classify,
    gmax_submodules,
    is_multiplication_module,
    is_primeful,
    is_pseudo_weakly_injective,
    natural_map,
)
from .ideals import (
    annihilator,
    colon_ideal,
    graded_maximal_ideals,
    graded_prime_ideals,
    graded_radical,
    graded_weakly_prime_ideals,
    is_graded_prime_ideal,
    is_graded_weakly_prime_ideal,
    is_graded_weakly_prime_pairs,
    is_graded_weakly_prime_submodule,
    is_integral_domain,
    is_quasi_local,
)
from .spectrum import (
    Spectrum,
    WeakTopologyReport,
    eta,
    fiber,
    gpw_rad,
    is_extraordinary,
    is_pseudo_weakly_prime,
    is_semiprime,
    is_weakly_topological,
    pseudo_spectrum,
    semiprime_submodules,
    variety,
)

__all__ = [
    "NaturalMap",
    "Spectrum",
    "WeakTopologyReport",
    "annihilator",
    "check_corollary_injective_implies_multiplication",
    "check_lemma_radical_colon",
    "classify",
    "colon_ideal",
    "eta",
    "fiber",
    "gmax_submodules",
    "gpw_rad",
    "graded_maximal_ideals",
    "graded_prime_ideals",
    "graded_radical",
    "graded_weakly_prime_ideals",
    "is_extraordinary",
    "is_graded_prime_ideal",
    "is_graded_weakly_prime_ideal",
    "is_graded_weakly_prime_pairs",
    "is_graded_weakly_prime_submodule",
    "is_integral_domain",
    "is_multiplication_module",
    "is_primeful",
    "is_pseudo_weakly_injective",
    "is_pseudo_weakly_prime",
    "is_quasi_local",
    "is_semiprime",
    "is_weakly_topological",
    "natural_map",
    "pseudo_spectrum",
    "semiprime_submodules",
    "variety",
]
