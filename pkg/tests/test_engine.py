import pytest

from fixed_quadrics.config import Settings
from fixed_quadrics.engine import (
    create_verification_graph,
    initial_state,
    phases_for,
    route_next_phase,
    run_sweep,
    run_verification,
)
from fixed_quadrics.errors import ConfigError
from fixed_quadrics.partitions import parse_partition
from fixed_quadrics.report import NOT_EXPANDED


def test_route_next_phase():
    assert route_next_phase({"phases": ["determinant", "rank"]}) == "determinant"
    assert route_next_phase({"phases": []}) == "report"


def test_phases_for_selection():
    assert phases_for(None) == ["fixed_space", "determinant", "rank"]
    assert phases_for(["corank_exact", "det_identity"]) == ["determinant", "rank"]
    with pytest.raises(ConfigError, match="no_such_check"):
        phases_for(["no_such_check"])


def test_graph_walks_every_phase():
    graph = create_verification_graph()
    state = initial_state(parse_partition("2,1"), Settings())
    final = graph.invoke(state)
    nodes = [step["node"] for step in final["steps_completed"]]
    assert nodes == ["construct", "fixed_space", "determinant", "rank", "report"]
    assert final["phases"] == []


def test_graph_skips_unrequested_phases():
    graph = create_verification_graph()
    state = initial_state(parse_partition("2,1"), Settings(), selected=["corank_randomized"])
    final = graph.invoke(state)
    nodes = [step["node"] for step in final["steps_completed"]]
    assert nodes == ["construct", "rank", "report"]
    assert final["checks"]["corank_randomized"].status == "pass"
    assert final["checks"]["corank_exact"].status == "skipped"


def test_run_verification_321():
    report = run_verification("3,2,1", Settings(letters=True))
    assert report.passed
    assert report.n == 6
    assert report.dim_S == 8
    assert report.degeneracy == 1
    assert report.corank == 1
    assert report.det == "0"
    assert report.det_factors == ["0", "0", "b"]
    assert len(report.checks) == 14


def test_run_verification_above_symbolic_bound():
    report = run_verification(
        "3,3,1", Settings(symbolic_bound=6), selected=["det_identity", "vanishing_criterion"]
    )
    assert report.passed
    assert report.checks["det_identity"].status == "skipped"
    assert len(report.det_factors) == 3
    assert "0" not in report.det_factors
    assert NOT_EXPANDED not in report.det_factors
    assert report.det == NOT_EXPANDED


def test_construct_failure_is_reported():
    report = run_verification("1^7", Settings(letters=True))
    assert not report.passed
    assert report.checks["construct"].status == "fail"
    assert report.corank is None


def test_golden_check():
    golden = {"2,2": {"dim_S": 4, "degeneracy": 0}, "3": {"dim_S": 99}}
    assert run_verification("2,2", golden=golden).checks["golden"].status == "pass"
    report = run_verification("3", golden=golden)
    assert report.checks["golden"].status == "fail"
    assert not report.passed


def test_verbose_progress(capsys):
    run_verification("2", selected=["unipotence"], verbose=True)
    err = capsys.readouterr().err
    assert "🔍 Verifying" in err
    assert "✅ 2: fixed_space" in err


class TestSweep:
    def test_n1(self):
        sweep = run_sweep(1)
        assert sweep.count == 1
        assert sweep.passed
        assert sweep.reports[0].partition == [1]

    def test_enumeration_order_with_parallel_batch(self):
        sweep = run_sweep(5, Settings(parallel=4))
        labels = [r.label() for r in sweep.reports]
        assert labels == ["5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1,1,1,1,1"]
        assert sweep.passed
        assert sweep.failures == []

    def test_deterministic(self):
        first = run_sweep(4, Settings(seed=3))
        second = run_sweep(4, Settings(seed=3))
        assert first.model_dump() == second.model_dump()

    def test_false_pass_bound_string(self):
        assert run_sweep(2, Settings(trials=1, specialization_bound=10)).false_pass_bound == "1/10"
