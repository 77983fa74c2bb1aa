"""Text, LaTeX and JSON renderings of block-ruled matrices."""

from __future__ import annotations

import re
from collections.abc import Sequence

from fixed_quadrics.algebra import RingMatrix
from fixed_quadrics.partitions import BlockGrid

_CANONICAL_NAME = re.compile(r"v(\d+)_(\d+)_(\d+)")
_POWER = re.compile(r"\^(\d+)")
LATEX_SYMBOLS = {"•": "\\bullet", "*": "\\ast"}


def cells(matrix: RingMatrix) -> list[list[str]]:
    return [[str(value) for value in row] for row in matrix.entries]


def _boundaries(grid: BlockGrid | None, size: int) -> set[int]:
    if grid is None or grid.n != size:
        return set()
    return set(grid.boundaries())


def render_grid(
    table: Sequence[Sequence[str]],
    row_grid: BlockGrid | None = None,
    col_grid: BlockGrid | None = None,
) -> str:
    """Right-aligned columns; ``|`` and ``-`` rules after every interior block offset."""
    if not table:
        return "[]"
    n_cols = len(table[0])
    if n_cols == 0:
        return "\n".join("[]" for _ in table)
    width = max(len(cell) for row in table for cell in row)
    col_rules = _boundaries(col_grid, n_cols)
    row_rules = _boundaries(row_grid, len(table))

    def line(row: Sequence[str]) -> str:
        parts = []
        for j, cell in enumerate(row):
            if j in col_rules:
                parts.append("|")
            parts.append(cell.rjust(width))
        return " ".join(parts)

    lines = []
    for i, row in enumerate(table):
        if i in row_rules:
            lines.append("-" * len(line(row)))
        lines.append(line(row))
    return "\n".join(lines)


def render_text(matrix: RingMatrix, grid: BlockGrid | None = None) -> str:
    return render_grid(cells(matrix), grid, grid)


def latex_polynomial(text: str) -> str:
    """``2*v1_2_1^10*b`` → ``2 v_{1,2,1}^{10} b``."""
    text = _CANONICAL_NAME.sub(r"v_{\1,\2,\3}", text)
    text = _POWER.sub(r"^{\1}", text)
    return text.replace("*", " ")


def render_latex(matrix: RingMatrix, grid: BlockGrid | None = None) -> str:
    return latex_grid(cells(matrix), grid, grid)


def latex_grid(
    table: Sequence[Sequence[str]],
    row_grid: BlockGrid | None = None,
    col_grid: BlockGrid | None = None,
) -> str:
    """``pmatrix`` with ``\\vline`` cells between column blocks and ``\\hline`` between rows."""
    n_rows = len(table)
    col_rules = _boundaries(col_grid, len(table[0]) if table else 0)
    row_rules = _boundaries(row_grid, n_rows)
    body = []
    for i, row in enumerate(table):
        if i in row_rules:
            body.append("\\hline")
        entries = []
        for j, cell in enumerate(row):
            if j in col_rules:
                entries.append("\\vline")
            entries.append(LATEX_SYMBOLS.get(cell, latex_polynomial(cell)))
        terminator = " \\\\" if i < n_rows - 1 else ""
        body.append("\t" + " & ".join(entries) + terminator)
    return "\\begin{pmatrix}\n" + "\n".join(body) + "\n\\end{pmatrix}"


def render_json(matrix: RingMatrix) -> list[list[str]]:
    return cells(matrix)


def render_vector(vector: Sequence[object]) -> list[str]:
    return [str(value) for value in vector]
