"""Report models, emitters and golden-file comparison."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field

from fixed_quadrics.errors import ConfigError

Status = Literal["pass", "fail", "skipped"]

GOLDEN_FIELDS = ("n", "dim_S", "dim_Q", "degeneracy", "det_factors", "det", "corank")

NOT_EXPANDED = "nonzero (not expanded)"


class CheckOutcome(BaseModel):
    status: Status
    seconds: float | None = None
    message: str = ""
    blocker: bool = True


class Report(BaseModel):
    partition: list[int]
    n: int
    dim_S: int
    dim_Q: int
    degeneracy: int
    det_factors: list[str] = Field(default_factory=list)
    det: str = ""
    corank: int | None = None
    checks: dict[str, CheckOutcome] = Field(default_factory=dict)

    @property
    def failures(self) -> list[str]:
        return [
            name
            for name, outcome in self.checks.items()
            if outcome.status == "fail" and outcome.blocker
        ]

    @property
    def passed(self) -> bool:
        return not self.failures

    def label(self) -> str:
        return ",".join(str(p) for p in self.partition)


class SweepReport(BaseModel):
    n: int
    count: int
    reports: list[Report]
    failures: list[str] = Field(default_factory=list)
    false_pass_bound: str

    @property
    def passed(self) -> bool:
        return not self.failures


def emit_json(report: Report | SweepReport) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"


def _text_report(report: Report) -> list[str]:
    lines = [
        f"partition   {report.label()}",
        f"n           {report.n}",
        f"dim_S       {report.dim_S}",
        f"dim_Q       {report.dim_Q}",
        f"degeneracy  {report.degeneracy}",
    ]
    for index, factor in enumerate(report.det_factors, start=1):
        lines.append(f"det P_{index:<5}{factor}")
    if report.det:
        lines.append(f"det         {report.det}")
    if report.corank is not None:
        lines.append(f"corank      {report.corank}")
    if report.checks:
        width = max(len(name) for name in report.checks)
        lines.append("checks")
        for name, outcome in report.checks.items():
            timing = f"  {outcome.seconds:.3f}s" if outcome.seconds is not None else ""
            lines.append(f"  {name.ljust(width)}  {outcome.status:<7}{timing}  {outcome.message}")
    return lines


def emit_text(report: Report | SweepReport) -> str:
    if isinstance(report, Report):
        return "\n".join(_text_report(report)) + "\n"
    lines = [f"sweep n={report.n}: {report.count} partitions"]
    for item in report.reports:
        status = "pass" if item.passed else "FAIL"
        lines.append(
            f"  {item.label():<24} dim_S={item.dim_S:<4} d={item.degeneracy:<2} "
            f"corank={item.corank if item.corank is not None else '-'}  {status}"
        )
    lines.append(f"failures: {', '.join(report.failures) if report.failures else 'none'}")
    lines.append(f"false-pass bound per partition: {report.false_pass_bound}")
    return "\n".join(lines) + "\n"


def _latex_escape(text: str) -> str:
    return text.replace("_", "\\_")


def emit_latex(report: Report | SweepReport) -> str:
    """A ``tabular`` of the report fields; one row per partition for a sweep."""
    if isinstance(report, Report):
        rows = [
            ("partition", f"$({report.label()})$"),
            ("$\\dim S$", str(report.dim_S)),
            ("$\\dim Q$", str(report.dim_Q)),
            ("$d(\\lambda)$", str(report.degeneracy)),
            ("$\\det M$", f"${report.det}$" if report.det else ""),
            ("corank", "" if report.corank is None else str(report.corank)),
        ]
        rows += [(_latex_escape(name), o.status) for name, o in report.checks.items()]
        body = " \\\\\n".join(f"{key} & {value}" for key, value in rows)
        return "\\begin{tabular}{ll}\n" + body + "\n\\end{tabular}\n"
    body = " \\\\\n".join(
        f"$({r.label()})$ & {r.dim_S} & {r.degeneracy} & "
        f"{'' if r.corank is None else r.corank} & {'pass' if r.passed else 'fail'}"
        for r in report.reports
    )
    header = "$\\lambda$ & $\\dim S$ & $d(\\lambda)$ & corank & checks \\\\\n\\hline\n"
    return "\\begin{tabular}{lllll}\n" + header + body + "\n\\end{tabular}\n"


def emit(report: Report | SweepReport, fmt: str = "text") -> str:
    if fmt == "json":
        return emit_json(report)
    if fmt == "latex":
        return emit_latex(report)
    return emit_text(report)


def load_golden(path: Path) -> dict[str, dict[str, Any]]:
    """Golden file: JSON object mapping ``"4,2,2,2"`` to expected report fields."""
    try:
        with open(path) as f:
            data = json.load(f)
    except FileNotFoundError as e:
        raise ConfigError(f"golden file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"golden file {path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"golden file {path} must hold a JSON object")
    return data


def golden_mismatches(report: Report, expected: dict[str, Any]) -> list[str]:
    mismatches = []
    for key, value in expected.items():
        if key not in GOLDEN_FIELDS:
            mismatches.append(f"unknown golden field {key!r}")
            continue
        actual = getattr(report, key)
        if actual != value:
            mismatches.append(f"{key}: expected {value!r}, got {actual!r}")
    return mismatches


def apply_golden(report: Report, golden: dict[str, dict[str, Any]]) -> Report:
    """Add a ``golden`` check when the golden file has an entry for this partition."""
    expected = golden.get(report.label())
    if expected is None:
        return report
    mismatches = golden_mismatches(report, expected)
    outcome = CheckOutcome(
        status="fail" if mismatches else "pass",
        message="; ".join(mismatches) if mismatches else f"{len(expected)} fields match",
    )
    return report.model_copy(update={"checks": {**report.checks, "golden": outcome}})
