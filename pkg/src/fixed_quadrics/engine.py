from __future__ import annotations

import sys
from typing import Any

from langgraph.graph import END, StateGraph

from fixed_quadrics.config import Settings
from fixed_quadrics.errors import ConfigError
from fixed_quadrics.nodes.construct import construct_node
from fixed_quadrics.nodes.phases import PHASES, make_manager, phase_node
from fixed_quadrics.nodes.summary import report_node
from fixed_quadrics.partitions import Partition, as_partition, enumerate_partitions
from fixed_quadrics.quadric_props import false_pass_bound
from fixed_quadrics.report import Report, SweepReport
from fixed_quadrics.state import VerificationState


def route_next_phase(state: VerificationState) -> str:
    """Next requested phase, or the report once none remain."""
    remaining = state.get("phases") or []
    return remaining[0] if remaining else "report"


def create_verification_graph():
    """
    Creates and compiles the verification graph:
    construct -> fixed_space -> determinant -> rank -> report, skipping unrequested phases.
    """
    builder = StateGraph(VerificationState)

    builder.add_node("construct", construct_node)
    for phase in PHASES:
        builder.add_node(phase, phase_node(phase))
    builder.add_node("report", report_node)

    builder.set_entry_point("construct")

    targets = {name: name for name in (*PHASES, "report")}
    builder.add_conditional_edges("construct", route_next_phase, targets)
    for phase in PHASES:
        builder.add_conditional_edges(phase, route_next_phase, targets)
    builder.add_edge("report", END)

    return builder.compile()


def phases_for(selected: list[str] | None) -> list[str]:
    """Phases holding at least one selected check, in pipeline order."""
    manager = make_manager()
    if not selected:
        return list(PHASES)
    known = set(manager.check_ids())
    unknown = [check for check in selected if check not in known]
    if unknown:
        raise ConfigError(f"unknown check id(s): {', '.join(unknown)}")
    return [
        phase
        for phase in PHASES
        if any(check.id in selected for check in manager.phases[phase].checks)
    ]


def initial_state(
    partition: Partition,
    settings: Settings,
    selected: list[str] | None = None,
    golden: dict[str, dict] | None = None,
    verbose: bool = False,
) -> dict[str, Any]:
    return {
        "partition": list(partition.parts),
        "settings": settings,
        "selected": selected,
        "golden": golden,
        "verbose": verbose,
        "context": None,
        "phases": phases_for(selected),
        "checks": {},
        "steps_completed": [],
        "report": None,
    }


def run_verification(
    partition: Partition | str,
    settings: Settings | None = None,
    selected: list[str] | None = None,
    golden: dict[str, dict] | None = None,
    verbose: bool = False,
) -> Report:
    """
    Run every requested check for one partition.
    """
    settings = settings or Settings()
    lam = as_partition(partition)
    if verbose:
        print(f"🔍 Verifying {lam}", file=sys.stderr)
    graph = create_verification_graph()
    final = graph.invoke(initial_state(lam, settings, selected, golden, verbose))
    return final["report"]


def run_sweep(
    n: int,
    settings: Settings | None = None,
    selected: list[str] | None = None,
    golden: dict[str, dict] | None = None,
    verbose: bool = False,
) -> SweepReport:
    """
    Verify all partitions of n; reports come back in enumeration order.
    """
    settings = settings or Settings()
    partitions = enumerate_partitions(n, settings.enumeration_bound)
    if verbose:
        print(f"🚀 Sweeping {len(partitions)} partitions of {n}", file=sys.stderr)
    graph = create_verification_graph()
    inputs = [initial_state(lam, settings, selected, golden, verbose) for lam in partitions]
    finals = graph.batch(inputs, config={"max_concurrency": settings.parallel})
    reports = [final["report"] for final in finals]
    return SweepReport(
        n=n,
        count=len(reports),
        reports=reports,
        failures=[r.label() for r in reports if not r.passed],
        false_pass_bound=str(false_pass_bound(n, settings.trials, settings.specialization_bound)),
    )
