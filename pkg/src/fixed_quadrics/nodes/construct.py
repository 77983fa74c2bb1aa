from fixed_quadrics.checks import VerificationContext
from fixed_quadrics.errors import QuadricsError
from fixed_quadrics.partitions import Partition
from fixed_quadrics.report import CheckOutcome
from fixed_quadrics.state import VerificationState


def construct_node(state: VerificationState) -> dict:
    """
    Build the verification context and the generic element every phase shares.
    """
    ctx = VerificationContext(Partition(tuple(state["partition"])), state["settings"])
    step = {"node": "construct", "partition": state["partition"]}
    try:
        ctx.generic
    except QuadricsError as e:
        return {
            "context": ctx,
            "phases": [],
            "checks": {"construct": CheckOutcome(status="fail", message=str(e))},
            "steps_completed": [{**step, "status": "failure"}],
        }
    return {"context": ctx, "steps_completed": [{**step, "status": "success"}]}
