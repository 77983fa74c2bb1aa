import json

import pytest

from fixed_quadrics.checklists import RULES_DIR, ChecklistManager
from fixed_quadrics.checks import VALIDATORS, VerificationContext
from fixed_quadrics.config import Settings
from fixed_quadrics.errors import ConfigError
from fixed_quadrics.partitions import parse_partition


def write_checklist(checklist_dir, checks, name="verify", status="MANDATORY"):
    checklist_dir.mkdir(exist_ok=True)
    data = {
        "phases": [
            {
                "id": "test_phase",
                "name": "Test Phase",
                "status": status,
                "checks": checks,
            }
        ]
    }
    with open(checklist_dir / f"{name}.json", "w") as f:
        json.dump(data, f)


def ctx_for(text="3,2,1", **settings):
    return VerificationContext(parse_partition(text), Settings(**settings))


def test_checklist_manager_load(tmp_path):
    checklist_dir = tmp_path / "rules"
    write_checklist(
        checklist_dir,
        [
            {"id": "check1", "description": "True Check", "type": "BLOCKER", "validator": "always_true"},
            {"id": "check2", "description": "False Check", "type": "WARNING", "validator": "always_false"},
        ],
    )

    manager = ChecklistManager(checklist_dir)
    manager.register_validator("always_true", lambda *args: (True, "OK"))
    manager.register_validator("always_false", lambda *args: (False, "Failing"))

    outcomes = manager.run_phase("test_phase", ctx_for())

    assert outcomes["check1"].status == "pass"
    assert outcomes["check2"].status == "fail"
    assert outcomes["check2"].blocker is False
    assert outcomes["check2"].message == "Failing"


def test_checklist_manager_block(tmp_path):
    checklist_dir = tmp_path / "rules"
    write_checklist(
        checklist_dir,
        [{"id": "check1", "description": "Blocking Check", "type": "BLOCKER", "validator": "always_false"}],
    )

    manager = ChecklistManager(checklist_dir)
    manager.register_validator("always_false", lambda *args: (False, "Blocked!"))

    outcomes = manager.run_phase("test_phase", ctx_for())

    assert outcomes["check1"].status == "fail"
    assert outcomes["check1"].blocker is True


def test_optional_phase_never_blocks(tmp_path):
    checklist_dir = tmp_path / "rules"
    write_checklist(
        checklist_dir,
        [{"id": "check1", "description": "Advisory", "type": "BLOCKER", "validator": "always_false"}],
        status="OPTIONAL",
    )

    manager = ChecklistManager(checklist_dir)
    manager.register_validator("always_false", lambda *args: (False, "Advisory only"))

    outcomes = manager.run_phase("test_phase", ctx_for())

    assert outcomes["check1"].status == "fail"
    assert outcomes["check1"].blocker is False


def test_unregistered_and_raising_validators(tmp_path):
    checklist_dir = tmp_path / "rules"
    write_checklist(
        checklist_dir,
        [
            {"id": "missing", "description": "", "type": "BLOCKER", "validator": "nobody"},
            {"id": "boom", "description": "", "type": "BLOCKER", "validator": "boom"},
            {"id": "bare", "description": "", "type": "BLOCKER", "validator": "bare"},
        ],
    )

    def boom(ctx):
        raise ZeroDivisionError("division by zero")

    manager = ChecklistManager(checklist_dir)
    manager.register_all({"boom": boom, "bare": lambda ctx: True})

    outcomes = manager.run_phase("test_phase", ctx_for())

    assert "not registered" in outcomes["missing"].message
    assert "division by zero" in outcomes["boom"].message
    assert outcomes["bare"].status == "pass"
    assert outcomes["bare"].message == "Check passed"


def test_selection_and_size_gates(tmp_path):
    checklist_dir = tmp_path / "rules"
    write_checklist(
        checklist_dir,
        [
            {"id": "small", "description": "", "type": "BLOCKER", "validator": "ok", "max_n": 3},
            {"id": "gated", "description": "", "type": "BLOCKER", "validator": "ok", "max_n": "symbolic_bound"},
            {"id": "other", "description": "", "type": "BLOCKER", "validator": "ok"},
        ],
    )
    manager = ChecklistManager(checklist_dir)
    manager.register_validator("ok", lambda ctx: (True, "fine"))

    outcomes = manager.run_phase("test_phase", ctx_for(symbolic_bound=5), selected={"small", "gated"})

    assert outcomes["small"].status == "skipped"
    assert "n=6" in outcomes["small"].message
    assert outcomes["gated"].status == "skipped"
    assert outcomes["other"].message == "not selected"


def test_args_and_timings(tmp_path):
    checklist_dir = tmp_path / "rules"
    write_checklist(
        checklist_dir,
        [{"id": "sized", "description": "", "type": "BLOCKER", "validator": "sized", "args": [4]}],
    )
    manager = ChecklistManager(checklist_dir)
    manager.register_validator("sized", lambda ctx, samples: (samples == 4, f"{samples} samples"))

    outcomes = manager.run_phase("test_phase", ctx_for(), timings=True)

    assert outcomes["sized"].status == "pass"
    assert outcomes["sized"].seconds is not None
    assert manager.run_phase("test_phase", ctx_for())["sized"].seconds is None


def test_missing_phase_and_file(tmp_path):
    manager = ChecklistManager(tmp_path)
    assert manager.phases == {}
    outcome = manager.run_phase("nowhere", ctx_for())["nowhere"]
    assert outcome.status == "fail"


def test_unknown_settings_gate(tmp_path):
    checklist_dir = tmp_path / "rules"
    write_checklist(
        checklist_dir,
        [{"id": "odd", "description": "", "type": "BLOCKER", "validator": "ok", "max_n": "no_such_bound"}],
    )
    manager = ChecklistManager(checklist_dir)
    with pytest.raises(ConfigError):
        manager.limit_for(manager.phases["test_phase"].checks[0], Settings())


class TestShippedRules:
    def test_every_validator_registered(self):
        manager = ChecklistManager(RULES_DIR)
        names = {check.validator_name for phase in manager.phases.values() for check in phase.checks}
        assert names <= set(VALIDATORS)

    def test_phase_order_and_ids(self):
        manager = ChecklistManager(RULES_DIR)
        assert list(manager.phases) == ["fixed_space", "determinant", "rank"]
        assert len(manager.check_ids()) == len(set(manager.check_ids())) == 14

    @pytest.mark.parametrize("text", ["1", "2,1", "3,2,1", "2,2,1,1", "3,3"])
    def test_all_checks_pass(self, text):
        manager = ChecklistManager(RULES_DIR)
        manager.register_all(VALIDATORS)
        ctx = ctx_for(text)
        for phase in manager.phases:
            outcomes = manager.run_phase(phase, ctx)
            failed = {name: o.message for name, o in outcomes.items() if o.status == "fail"}
            assert not failed
