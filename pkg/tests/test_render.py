import json

from fixed_quadrics.fixed_space import generic_element, link_schema
from fixed_quadrics.partitions import block_grid, parse_partition
from fixed_quadrics.render import (
    latex_grid,
    latex_polynomial,
    render_json,
    render_latex,
    render_text,
    render_vector,
)
from fixed_quadrics.report import (
    CheckOutcome,
    Report,
    SweepReport,
    apply_golden,
    emit,
    golden_mismatches,
    load_golden,
)


def lettered(text):
    return generic_element(parse_partition(text)).with_letters()


class TestMatrices:
    def test_text_rules(self):
        G = lettered("2,1")
        assert render_text(G.matrix, G.grid).splitlines() == [
            "a 0 | b",
            "0 0 | 0",
            "-------",
            "b 0 | c",
        ]

    def test_text_without_grid(self):
        G = lettered("2")
        assert render_text(G.matrix) == "a 0\n0 0"

    def test_empty(self):
        assert render_text(generic_element(parse_partition("2")).matrix.submatrix([], [])) == "[]"

    def test_latex(self):
        G = lettered("2,1")
        assert render_latex(G.matrix, G.grid) == (
            "\\begin{pmatrix}\n"
            "\ta & 0 & \\vline & b \\\\\n"
            "\t0 & 0 & \\vline & 0 \\\\\n"
            "\\hline\n"
            "\tb & 0 & \\vline & c\n"
            "\\end{pmatrix}"
        )

    def test_latex_schema_symbols(self):
        lam = parse_partition("3")
        out = latex_grid(link_schema(lam), block_grid(lam), block_grid(lam))
        assert "\\bullet" in out
        assert "\\ast" in out

    def test_latex_polynomial(self):
        assert latex_polynomial("2*v1_2_1^10*b") == "2 v_{1,2,1}^{10} b"

    def test_json(self):
        assert render_json(lettered("2").matrix) == [["a", "0"], ["0", "0"]]
        assert render_vector([1, "x"]) == ["1", "x"]


def sample_report():
    return Report(
        partition=[3, 2, 1],
        n=6,
        dim_S=8,
        dim_Q=7,
        degeneracy=1,
        det_factors=["0", "0", "b"],
        det="0",
        corank=1,
        checks={
            "corank_exact": CheckOutcome(status="pass", message="exact corank 1"),
            "note": CheckOutcome(status="fail", message="advisory", blocker=False),
        },
    )


class TestReport:
    def test_warning_failures_do_not_block(self):
        report = sample_report()
        assert report.passed
        assert report.label() == "3,2,1"

    def test_json_keeps_blocker_flag(self):
        data = json.loads(emit(sample_report(), "json"))
        assert data["checks"]["note"]["blocker"] is False
        assert data["checks"]["corank_exact"]["seconds"] is None

    def test_json_parses_back(self):
        report = sample_report()
        parsed = Report.model_validate_json(emit(report, "json"))
        assert parsed == report
        assert parsed.passed

    def test_sweep_json_parses_back(self):
        failing = sample_report().model_copy(
            update={"checks": {"corank_exact": CheckOutcome(status="fail", message="corank 0")}}
        )
        sweep = SweepReport(
            n=6,
            count=2,
            reports=[sample_report(), failing],
            failures=[failing.label()],
            false_pass_bound="1/2",
        )
        parsed = SweepReport.model_validate_json(emit(sweep, "json"))
        assert parsed == sweep
        assert [r.passed for r in parsed.reports] == [True, False]

    def test_text(self):
        out = emit(sample_report(), "text")
        assert "det P_3    b" in out
        assert "corank      1" in out

    def test_latex(self):
        out = emit(sample_report(), "latex")
        assert "corank\\_exact & pass" in out

    def test_sweep_text(self):
        sweep = SweepReport(n=6, count=1, reports=[sample_report()], false_pass_bound="1/2")
        out = emit(sweep, "text")
        assert "failures: none" in out
        assert "3,2,1" in out


class TestGolden:
    def test_load(self, golden_dir):
        golden = load_golden(golden_dir / "worked_examples.json")
        assert golden["4,2,2,2"]["corank"] == 2

    def test_mismatches(self):
        report = sample_report()
        assert golden_mismatches(report, {"corank": 1, "det": "0"}) == []
        assert golden_mismatches(report, {"corank": 2}) == ["corank: expected 2, got 1"]
        assert golden_mismatches(report, {"colour": "red"}) == ["unknown golden field 'colour'"]

    def test_apply(self):
        report = apply_golden(sample_report(), {"3,2,1": {"dim_S": 9}})
        assert report.checks["golden"].status == "fail"
        assert not report.passed
        assert apply_golden(sample_report(), {"2": {}}) == sample_report()
