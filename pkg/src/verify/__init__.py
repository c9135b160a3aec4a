"""Theorem suite, verification service and report rendering."""

from .registry import REGISTRY, CheckContext, TheoremEntry, theorem_ids
from .report import analysis_to_dict, failure_lines, render_machine, render_suite_machine, report_to_dict, suite_to_dict
from .service import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    AnalysisReport,
    IdealRow,
    SuiteReport,
    TheoremResult,
    VerificationReport,
    VerificationService,
    VerifyOptions,
    analyze_instance,
)
from .witness import describe_witness

__all__ = [
    "FAIL",
    "NOT_APPLICABLE",
    "PASS",
    "REGISTRY",
    "AnalysisReport",
    "CheckContext",
    "IdealRow",
    "SuiteReport",
    "TheoremEntry",
    "TheoremResult",
    "VerificationReport",
    "VerificationService",
    "VerifyOptions",
    "analysis_to_dict",
    "analyze_instance",
    "describe_witness",
    "failure_lines",
    "render_machine",
    "render_suite_machine",
    "report_to_dict",
    "suite_to_dict",
    "theorem_ids",
]
