import operator
from typing import Annotated, Any, TypedDict


class VerificationState(TypedDict):
    """
    State of one partition's run through the verification graph.
    Check outcomes merge by key; the step log is append-only.
    """

    # Input
    partition: list[int]
    settings: Any  # fixed_quadrics.config.Settings
    selected: list[str] | None  # check ids, None for all
    golden: dict[str, dict] | None
    verbose: bool

    # Artefacts
    context: Any  # fixed_quadrics.checks.VerificationContext
    phases: list[str]  # phases still to run, in order

    # Results
    checks: Annotated[dict[str, Any], operator.or_]
    steps_completed: Annotated[list[dict], operator.add]
    report: Any  # fixed_quadrics.report.Report
