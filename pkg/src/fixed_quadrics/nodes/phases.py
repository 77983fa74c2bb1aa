import sys
from collections.abc import Callable

from fixed_quadrics.checklists import ChecklistManager
from fixed_quadrics.checks import VALIDATORS
from fixed_quadrics.state import VerificationState

PHASES = ("fixed_space", "determinant", "rank")


def make_manager() -> ChecklistManager:
    manager = ChecklistManager()
    manager.register_all(VALIDATORS)
    return manager


def phase_node(phase: str) -> Callable[[VerificationState], dict]:
    """
    Node running one checklist phase against the shared context.
    """

    def run(state: VerificationState) -> dict:
        ctx = state["context"]
        selected = set(state["selected"]) if state.get("selected") else None
        outcomes = make_manager().run_phase(
            phase, ctx, selected=selected, timings=ctx.settings.timings
        )
        failed = [name for name, outcome in outcomes.items() if outcome.status == "fail"]
        if state.get("verbose"):
            label = ",".join(str(p) for p in state["partition"])
            marker = "❌" if failed else "✅"
            print(f"{marker} {label}: {phase} ({len(outcomes)} checks)", file=sys.stderr)
        step = {
            "node": phase,
            "outcome": f"{len(outcomes)} checks, {len(failed)} failed",
            "status": "failure" if failed else "success",
        }
        return {
            "checks": outcomes,
            "phases": [p for p in state["phases"] if p != phase],
            "steps_completed": [step],
        }

    run.__name__ = f"{phase}_node"
    return run
