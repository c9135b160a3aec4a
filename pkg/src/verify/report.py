"""Machine-readable renderings of verification and analysis reports."""

from __future__ import annotations

import json
from dataclasses import asdict, replace
from typing import Any, Dict, List

from src.verify.service import AnalysisReport, SuiteReport, VerificationReport


def report_to_dict(report: VerificationReport) -> Dict[str, Any]:
    """Wall times are left out so repeated runs serialize identically."""
    return {
        "instance": report.instance,
        "passed": report.passed,
        "counts": report.counts,
        "results": [
            {
                "id": result.theorem_id,
                "title": result.title,
                "status": result.status,
                "detail": result.detail,
                "witness": result.witness,
            }
            for result in report.results
        ],
    }


def suite_to_dict(suite: SuiteReport) -> Dict[str, Any]:
    return {
        "passed": suite.passed,
        "counts": suite.counts,
        "instances": [report_to_dict(report) for report in suite.reports],
    }


def analysis_to_dict(report: AnalysisReport) -> Dict[str, Any]:
    data = asdict(replace(report, spectrum=None, space=None))
    data.pop("spectrum", None)
    data.pop("space", None)
    return data


def render_machine(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_suite_machine(suite: SuiteReport) -> str:
    return render_machine(suite_to_dict(suite))


def failure_lines(suite: SuiteReport) -> List[str]:
    lines = []
    for report in suite.reports:
        for result in report.failures:
            witness = f" [witness: {result.witness}]" if result.witness else ""
            lines.append(f"{report.instance} {result.theorem_id}: {result.detail}{witness}")
    return lines
