import sys
from pathlib import Path

import pytest

# Add src to sys.path
src_path = Path(__file__).parent.parent / "src"
if src_path.exists() and str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from fixed_quadrics.algebra import Polynomial  # noqa: E402
from fixed_quadrics.fixed_space import generic_element  # noqa: E402
from fixed_quadrics.partitions import enumerate_partitions, parse_partition  # noqa: E402

GOLDEN_DIR = Path(__file__).parent / "golden"


def partitions_up_to(n_max: int) -> list:
    return [lam for n in range(1, n_max + 1) for lam in enumerate_partitions(n)]


def partition_ids(partitions) -> list[str]:
    return [str(lam) for lam in partitions]


@pytest.fixture
def lettered():
    """Generic element with variables renamed a, b, c, ..."""

    def build(text: str):
        return generic_element(parse_partition(text)).with_letters()

    return build


@pytest.fixture
def letters():
    """``letters("cgk", G)`` -> the named variables as polynomials over G's catalog."""

    def build(names: str, G):
        return [Polynomial.variable(name, G.catalog) for name in names]

    return build


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
