from fixed_quadrics.checks import VerificationContext
from fixed_quadrics.errors import QuadricsError
from fixed_quadrics.fixed_space import dim_Q, dim_S
from fixed_quadrics.partitions import degeneracy
from fixed_quadrics.quadric_props import reported_factors
from fixed_quadrics.report import NOT_EXPANDED, CheckOutcome, Report, apply_golden
from fixed_quadrics.state import VerificationState


def _determinant_fields(ctx: VerificationContext) -> tuple[list[str], str]:
    if ctx.symbolic:
        factorization = ctx.factorization
        return [str(f) for f in factorization.factors], str(factorization.product)
    s = ctx.settings
    factors = reported_factors(
        ctx.generic, s.symbolic_bound, s.trials, s.seed, s.specialization_bound
    )
    return factors, "0" if ctx.det_vanishes else NOT_EXPANDED


def report_node(state: VerificationState) -> dict:
    """
    Assemble the Report from the context and the collected check outcomes.
    """
    ctx = state["context"]
    lam = ctx.partition
    checks = dict(state.get("checks") or {})
    report = Report(
        partition=list(lam.parts),
        n=lam.n,
        dim_S=dim_S(lam),
        dim_Q=dim_Q(lam),
        degeneracy=degeneracy(lam),
        checks=checks,
    )
    if "construct" not in checks:
        try:
            factors, det = _determinant_fields(ctx)
            report = report.model_copy(
                update={"det_factors": factors, "det": det, "corank": ctx.corank}
            )
        except QuadricsError as e:
            checks["summary"] = CheckOutcome(status="fail", message=str(e))
            report = report.model_copy(update={"checks": checks})
    if state.get("golden"):
        report = apply_golden(report, state["golden"])
    step = {"node": "report", "status": "success" if report.passed else "failure"}
    return {"report": report, "steps_completed": [step]}
