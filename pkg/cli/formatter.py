#!/usr/bin/env python3
"""
Output Formatter
----------------
Formatação textual de fibrados, veredictos e relatórios para o terminal.
"""

from typing import List

from bundles.hn_core import Bundle, format_slope, is_semistable, mu
from criteria.classify import ClassificationVerdict
from criteria.reduction import HYPOTHESIS_TAGS, KeyInequalityReport, ReductionTrace
from verify.report import VerifyReport


def format_bundle(bundle: Bundle) -> str:
    """Forma canônica da gramática; inclinações inteiras sem denominador."""
    return str(bundle)


def format_info(bundle: Bundle) -> str:
    lines = [
        f"bundle: {format_bundle(bundle)}",
        f"rank: {bundle.rank}",
        f"degree: {bundle.degree}",
        f"slope: {format_slope(mu(bundle)) if not bundle.is_zero else 'undefined'}",
        "hn slopes: " + (", ".join(format_slope(s) for s in bundle.slopes) or "none"),
        f"semistable: {str(is_semistable(bundle)).lower()}",
    ]
    return "\n".join(lines)


def format_verdict(verdict: ClassificationVerdict, explain: bool = False) -> str:
    text = str(verdict.answer).lower()
    if explain:
        text += f"\n{verdict.explain()}"
    return text


def format_key_report(report: KeyInequalityReport) -> str:
    tags = ", ".join(
        f"({tag}) {'ok' if ok else 'violated'}"
        for tag, ok in zip(HYPOTHESIS_TAGS, report.hypotheses)
    )
    return "\n".join(
        [
            f"c = {report.c}",
            f"hypotheses: {tags}",
            f"inequality holds: {str(report.inequality_holds).lower()}",
            f"conclusion holds: {str(report.conclusion_holds).lower()}",
        ]
    )


def format_trace(trace: ReductionTrace) -> str:
    lines: List[str] = []
    for n, step in enumerate(trace.steps):
        lines.append(f"F_{n} = {step.f}  U_{n} = {step.common_u}  c_{n} = {step.c}")
    lines.append(f"terminated: {str(trace.terminated).lower()}")
    return "\n".join(lines)


def format_report(report: VerifyReport) -> str:
    lines = []
    for name, result in report.properties.items():
        status = "ok" if not result.failures else f"FAILED ({len(result.failures)})"
        lines.append(f"{name}: {result.checked} checked, {status}")
        for failure in result.failures:
            lines.append(f"    [{'; '.join(failure.inputs)}] {failure.detail}")
    verdict = "all properties passed ✅" if report.passed else "property failures ❌"
    lines.append(verdict)
    return "\n".join(lines)
