"""Quadrics fixed by a unipotent matrix: generic fixed matrix, determinant and rank."""

from fixed_quadrics.config import Settings
from fixed_quadrics.engine import create_verification_graph, run_sweep, run_verification
from fixed_quadrics.fixed_space import (
    GenericFixedMatrix,
    brute_force_fixed_basis,
    dim_Q,
    dim_S,
    generic_element,
    jordan_nilpotent,
)
from fixed_quadrics.partitions import Partition, degeneracy, enumerate_partitions, parse_partition
from fixed_quadrics.quadric_props import (
    corank_computed,
    corank_expected,
    det_by_formula,
    det_direct,
    null_basis,
    rank_witness,
    witness_minor,
)
from fixed_quadrics.report import Report, SweepReport

__version__ = "0.1.0"

__all__ = [
    "GenericFixedMatrix",
    "Partition",
    "Report",
    "Settings",
    "SweepReport",
    "brute_force_fixed_basis",
    "corank_computed",
    "corank_expected",
    "create_verification_graph",
    "degeneracy",
    "det_by_formula",
    "det_direct",
    "dim_Q",
    "dim_S",
    "enumerate_partitions",
    "generic_element",
    "jordan_nilpotent",
    "null_basis",
    "parse_partition",
    "rank_witness",
    "run_sweep",
    "run_verification",
    "witness_minor",
]
