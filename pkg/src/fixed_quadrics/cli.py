"""
Command-line entry point.

Exit codes: 0 when every requested check passes, 1 when a check fails, 2 for usage,
configuration or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from fixed_quadrics.config import Settings, color_enabled, resolve_settings
from fixed_quadrics.engine import run_sweep, run_verification
from fixed_quadrics.errors import LetterOverflow, QuadricsError
from fixed_quadrics.fixed_space import (
    GenericFixedMatrix,
    dim_Q,
    dim_S,
    generic_element,
    link_schema,
    letters_fit,
)
from fixed_quadrics.partitions import (
    BlockGrid,
    Partition,
    degeneracy,
    enumerate_partitions,
    parse_partition,
)
from fixed_quadrics.quadric_props import (
    det_by_formula,
    det_consistency,
    formula_vanishes,
    null_basis,
    restricted_matrices,
    reported_factors,
    upper_right_matrix,
    witness_minor,
)
from fixed_quadrics.render import (
    cells,
    latex_grid,
    latex_polynomial,
    render_grid,
    render_vector,
)
from fixed_quadrics.report import NOT_EXPANDED, CheckOutcome, Report, emit, load_golden

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

SHOW_CHOICES = ("M", "Mprime", "Mdoubleprime", "P", "schema")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "latex"], help="Output format")
    common.add_argument(
        "--letters", action="store_true", default=None, help="Name variables a, b, c, ..."
    )
    common.add_argument("--seed", type=int, help="Seed for random specializations (default 0)")
    common.add_argument("--trials", type=int, help="Random specializations per test (default 5)")
    common.add_argument(
        "--symbolic-bound", type=int, help="Largest n expanded symbolically (default 9)"
    )
    common.add_argument(
        "--exact-rank-bound", type=int, help="Largest n for exact elimination (default 8)"
    )
    common.add_argument(
        "--bound", dest="specialization_bound", type=int, help="Specialization range (default 10^6)"
    )
    common.add_argument("--parallel", type=int, help="Partitions verified concurrently")
    common.add_argument("--config", type=Path, help="JSON settings file")
    common.add_argument(
        "--timings", action="store_true", default=None, help="Record seconds per check"
    )
    common.add_argument("--verbose", "-v", action="store_true", help="Progress on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fixed-quadrics",
        description="Quadrics fixed by a unipotent matrix: dimension, determinant and rank",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:

  SINGLE PARTITION:
    fixed-quadrics generic 2,2,1,1 --letters
    fixed-quadrics det 2,2,1,1 --letters --format text
    fixed-quadrics rank 4,2,2,2
    fixed-quadrics minor 4,2,2,2 --letters

  VERIFICATION:
    fixed-quadrics verify 3,2,1
    fixed-quadrics verify 4,2,2,2 --checks corank_exact,minor_witness
    fixed-quadrics sweep --n 8 --format json --seed 0

  PARTITION SYNTAX:
    4,2,2,2    or    2^3,4^1    or    "(1^0, 2^3, 4^1)"

  LETTERS:
    --letters names the variables a, b, c, ... in catalog order with no letter skipped,
    so matrices written with a skipped letter read one letter earlier here. Every command,
    verify and sweep included, refuses --letters for partitions with more than 26 variables.
        """,
    )
    common = _common_options()
    subparsers = parser.add_subparsers(dest="command", help="Commands", required=True)

    def partition_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text, parents=[common])
        sub.add_argument("partition", help="Jordan type, e.g. 4,2,2,2")
        return sub

    generic = partition_command("generic", "Print the generic fixed matrix M")
    generic.add_argument(
        "--show",
        choices=SHOW_CHOICES,
        action="append",
        help="Matrices to print (repeatable; default M)",
    )
    partition_command("dim", "Dimension of the fixed space and of its projectivization")
    partition_command("det", "Factored determinant of M")
    partition_command("rank", "Generic corank of M, randomized and exact")
    partition_command("nullspace", "Polynomial null vectors of M")
    partition_command("minor", "Nonzero minor of size n - d")

    for name, help_text in (
        ("verify", "Run all checks for one partition"),
        ("sweep", "Run all checks for every partition of n"),
    ):
        if name == "verify":
            sub = partition_command(name, help_text)
        else:
            sub = subparsers.add_parser(name, help=help_text, parents=[common])
            sub.add_argument("--n", type=int, required=True, help="Size of the partitions")
        sub.add_argument("--checks", help="Comma-separated check ids to run (default all)")
        sub.add_argument("--golden", type=Path, help="JSON file of expected report fields")
    return parser


def settings_from_args(args: argparse.Namespace) -> Settings:
    cli_values = {
        name: getattr(args, name, None)
        for name in (
            "seed",
            "trials",
            "symbolic_bound",
            "exact_rank_bound",
            "specialization_bound",
            "parallel",
            "letters",
            "format",
            "timings",
        )
    }
    return resolve_settings(cli_values, args.config)


def _element(lam: Partition, settings: Settings) -> GenericFixedMatrix:
    G = generic_element(lam)
    return G.with_letters() if settings.letters else G


def _require_letters(partitions: list[Partition], settings: Settings) -> None:
    if not settings.letters:
        return
    for lam in partitions:
        if not letters_fit(lam):
            raise LetterOverflow(
                f"{lam}: {dim_S(lam)} variables do not fit in a..z; drop --letters"
            )


def _base_report(lam: Partition) -> Report:
    return Report(
        partition=list(lam.parts),
        n=lam.n,
        dim_S=dim_S(lam),
        dim_Q=dim_Q(lam),
        degeneracy=degeneracy(lam),
    )


def _emit_tables(
    tables: list[tuple[str, list[list[str]], BlockGrid | None, BlockGrid | None]], fmt: str
) -> str:
    if fmt == "json":
        payload = {name: table for name, table, _, _ in tables}
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    blocks = []
    for name, table, row_grid, col_grid in tables:
        if fmt == "latex":
            blocks.append(f"% {name}\n{latex_grid(table, row_grid, col_grid)}")
        else:
            blocks.append(f"{name}:\n{render_grid(table, row_grid, col_grid)}")
    return "\n\n".join(blocks) + "\n"


def cmd_generic(args: argparse.Namespace, settings: Settings) -> tuple[str, int]:
    lam = parse_partition(args.partition)
    G = _element(lam, settings)
    grid = G.grid
    tables: list[tuple[str, list[list[str]], BlockGrid | None, BlockGrid | None]] = []
    for show in args.show or ["M"]:
        if show == "M":
            tables.append(("M", cells(G.matrix), grid, grid))
        elif show == "P":
            tables.append(("P", cells(upper_right_matrix(G)), None, None))
        elif show == "schema":
            tables.append(("schema", link_schema(lam), grid, grid))
        else:
            restricted = restricted_matrices(G)
            if show == "Mprime":
                tables.append(("Mprime", cells(restricted.Mprime), grid, None))
            else:
                tables.append(("Mdoubleprime", cells(restricted.Mdoubleprime), None, None))
    return _emit_tables(tables, settings.format), EXIT_OK


def cmd_dim(args: argparse.Namespace, settings: Settings) -> tuple[str, int]:
    lam = parse_partition(args.partition)
    return emit(_base_report(lam), settings.format), EXIT_OK


def cmd_det(args: argparse.Namespace, settings: Settings) -> tuple[str, int]:
    lam = parse_partition(args.partition)
    G = _element(lam, settings)
    report = _base_report(lam)
    s = settings
    if lam.n <= s.symbolic_bound:
        factorization = det_by_formula(G)
        report = report.model_copy(
            update={
                "det_factors": [str(f) for f in factorization.factors],
                "det": str(factorization.product),
            }
        )
        return emit(report, s.format), EXIT_OK
    vanishes = formula_vanishes(G, s.trials, s.seed, s.specialization_bound)
    consistent = det_consistency(G, s.trials, s.seed, s.specialization_bound)
    outcome = CheckOutcome(
        status="pass" if consistent else "fail",
        message=f"det M = Π det P_i at {s.trials} seeded points",
    )
    report = report.model_copy(
        update={
            "det_factors": reported_factors(
                G, s.symbolic_bound, s.trials, s.seed, s.specialization_bound
            ),
            "det": "0" if vanishes else NOT_EXPANDED,
            "checks": {"det_consistency": outcome},
        }
    )
    return emit(report, s.format), EXIT_OK if consistent else EXIT_CHECK_FAILED


def cmd_rank(args: argparse.Namespace, settings: Settings) -> tuple[str, int]:
    lam = parse_partition(args.partition)
    _require_letters([lam], settings)
    report = run_verification(
        lam,
        settings,
        selected=["corank_randomized", "corank_exact"],
        verbose=args.verbose,
    )
    return emit(report, settings.format), EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _vector_cell(vector: list[str]) -> list[list[str]]:
    return [[value] for value in vector]


def cmd_nullspace(args: argparse.Namespace, settings: Settings) -> tuple[str, int]:
    lam = parse_partition(args.partition)
    G = _element(lam, settings)
    vectors = [render_vector(v) for v in null_basis(G)]
    restricted = restricted_matrices(G)
    if settings.format == "json":
        payload = {
            "partition": list(lam.parts),
            "corank": len(vectors),
            "columns": list(restricted.columns),
            "rows": list(restricted.rows),
            "null_vectors": vectors,
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n", EXIT_OK
    if settings.format == "latex":
        body = ",\n".join(latex_grid(_vector_cell(v)) for v in vectors)
        return (body or "% no null vectors") + "\n", EXIT_OK
    lines = [
        f"corank {len(vectors)}",
        f"M' columns {', '.join(map(str, restricted.columns)) or '-'}",
        f"M'' rows   {', '.join(map(str, restricted.rows)) or '-'}",
    ]
    for index, vector in enumerate(vectors, start=1):
        support = [f"{i}: {value}" for i, value in enumerate(vector, start=1) if value != "0"]
        lines.append(f"v{index} = {{{'; '.join(support)}}}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_minor(args: argparse.Namespace, settings: Settings) -> tuple[str, int]:
    lam = parse_partition(args.partition)
    G = _element(lam, settings)
    s = settings
    minor = witness_minor(G, s.symbolic_bound, s.trials, s.seed, s.specialization_bound)
    det = str(minor.minor_det) if minor.minor_det is not None else None
    if s.format == "json":
        payload: dict[str, Any] = {
            "partition": list(lam.parts),
            "size": minor.size,
            "rows": list(minor.rows),
            "cols": list(minor.cols),
            "certificate": minor.certificate,
            "minor_det": det,
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n", EXIT_OK
    lines = [
        f"size        {minor.size}",
        f"rows        {', '.join(map(str, minor.rows))}",
        f"cols        {', '.join(map(str, minor.cols))}",
        f"certificate {minor.certificate}",
    ]
    if det is not None:
        lines.append(f"minor       {latex_polynomial(det) if s.format == 'latex' else det}")
    return "\n".join(lines) + "\n", EXIT_OK


def _selected(args: argparse.Namespace) -> list[str] | None:
    if not args.checks:
        return None
    return [c.strip() for c in args.checks.split(",") if c.strip()]


def cmd_verify(args: argparse.Namespace, settings: Settings) -> tuple[str, int]:
    lam = parse_partition(args.partition)
    _require_letters([lam], settings)
    golden = load_golden(args.golden) if args.golden else None
    report = run_verification(
        lam,
        settings,
        selected=_selected(args),
        golden=golden,
        verbose=args.verbose,
    )
    return emit(report, settings.format), EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> tuple[str, int]:
    _require_letters(enumerate_partitions(args.n, settings.enumeration_bound), settings)
    golden = load_golden(args.golden) if args.golden else None
    sweep = run_sweep(
        args.n, settings, selected=_selected(args), golden=golden, verbose=args.verbose
    )
    return emit(sweep, settings.format), EXIT_OK if sweep.passed else EXIT_CHECK_FAILED


COMMANDS = {
    "generic": cmd_generic,
    "dim": cmd_dim,
    "det": cmd_det,
    "rank": cmd_rank,
    "nullspace": cmd_nullspace,
    "minor": cmd_minor,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = settings_from_args(args)
        output, code = COMMANDS[args.command](args, settings)
    except QuadricsError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(output)
    if args.verbose:
        marker = "✅" if code == EXIT_OK else "❌"
        line = f"{marker} {args.command} finished with exit code {code}"
        if color_enabled(sys.stderr):
            line = f"\033[{32 if code == EXIT_OK else 31}m{line}\033[0m"
        print(line, file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
