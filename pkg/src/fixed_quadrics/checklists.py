import json
import time
from collections.abc import Callable
from pathlib import Path
from typing import Any

from fixed_quadrics.report import CheckOutcome

RULES_DIR = Path(__file__).parent / "rules"


class ChecklistCheck:
    def __init__(self, data: dict[str, Any]):
        self.id = data["id"]
        self.description = data["description"]
        self.type = data["type"]  # BLOCKER or WARNING
        self.validator_name = data["validator"]
        self.args = data.get("args", [])
        # int, or the name of a Settings field holding the largest n to run on
        self.max_n = data.get("max_n")


class ChecklistPhase:
    def __init__(self, data: dict[str, Any]):
        self.id = data["id"]
        self.name = data["name"]
        self.status = data["status"]  # OPTIONAL phases never block
        self.description = data.get("description", "")
        self.checks = [ChecklistCheck(c) for c in data.get("checks", [])]


class ChecklistManager:
    def __init__(self, checklist_dir: Path = RULES_DIR, name: str = "verify"):
        self.checklist_dir = checklist_dir
        self.name = name
        self.validators: dict[str, Callable] = {}
        self._phases: dict[str, ChecklistPhase] | None = None

    def register_validator(self, name: str, func: Callable):
        self.validators[name] = func

    def register_all(self, validators: dict[str, Callable]):
        for name, func in validators.items():
            self.register_validator(name, func)

    @property
    def phases(self) -> dict[str, ChecklistPhase]:
        if self._phases is None:
            self._phases = self.load_checklist(self.name)
        return self._phases

    def load_checklist(self, name: str) -> dict[str, ChecklistPhase]:
        path = self.checklist_dir / f"{name}.json"
        if not path.exists():
            return {}

        with open(path) as f:
            data = json.load(f)
        return {p["id"]: ChecklistPhase(p) for p in data.get("phases", [])}

    def check_ids(self) -> list[str]:
        return [check.id for phase in self.phases.values() for check in phase.checks]

    def limit_for(self, check: ChecklistCheck, settings: Any) -> int | None:
        if check.max_n is None or isinstance(check.max_n, int):
            return check.max_n
        return settings.bound_for(check.max_n)

    def run_check(self, check: ChecklistCheck, ctx: Any) -> tuple[bool, str]:
        if check.validator_name not in self.validators:
            return False, f"Validator '{check.validator_name}' not registered"

        validator = self.validators[check.validator_name]
        try:
            result = validator(ctx, *check.args)
            if isinstance(result, tuple):
                return result
            return result, "Check passed" if result else "Check failed"
        except Exception as e:
            return False, f"Error running validator '{check.validator_name}': {str(e)}"

    def run_phase(
        self, phase_name: str, ctx: Any, selected: set[str] | None = None, timings: bool = False
    ) -> dict[str, CheckOutcome]:
        """Run every check of a phase; unselected or out-of-range checks are ``skipped``."""
        phase = self.phases.get(phase_name)
        if phase is None:
            return {
                phase_name: CheckOutcome(status="fail", message=f"Checklist '{phase_name}' not found")
            }

        outcomes: dict[str, CheckOutcome] = {}
        for check in phase.checks:
            if selected is not None and check.id not in selected:
                outcomes[check.id] = CheckOutcome(status="skipped", message="not selected")
                continue
            limit = self.limit_for(check, ctx.settings)
            if limit is not None and ctx.n > limit:
                outcomes[check.id] = CheckOutcome(
                    status="skipped", message=f"n={ctx.n} above {check.max_n}={limit}"
                )
                continue
            started = time.perf_counter()
            passed, msg = self.run_check(check, ctx)
            elapsed = time.perf_counter() - started
            outcomes[check.id] = CheckOutcome(
                status="pass" if passed else "fail",
                seconds=round(elapsed, 6) if timings else None,
                message=msg,
                blocker=check.type == "BLOCKER" and phase.status == "MANDATORY",
            )
        return outcomes
