"""Cross-checks against an independent computer algebra system."""

import pytest

from conftest import partition_ids, partitions_up_to
from fixed_quadrics.fixed_space import dim_S, generic_element, jordan_nilpotent
from fixed_quadrics.partitions import degeneracy
from fixed_quadrics.quadric_props import det_by_formula, null_basis

sympy = pytest.importorskip("sympy")

ORACLE = partitions_up_to(5)


def to_sympy(matrix, symbols):
    return sympy.Matrix(
        [[sympy.sympify(str(v).replace("^", "**"), locals=symbols) for v in row] for row in matrix.entries]
    )


def symbols_for(G):
    return {name: sympy.Symbol(name) for name in G.catalog}


@pytest.mark.parametrize("lam", ORACLE, ids=partition_ids(ORACLE))
def test_determinant(lam):
    G = generic_element(lam)
    symbols = symbols_for(G)
    expected = sympy.expand(to_sympy(G.matrix, symbols).det(method="berkowitz"))
    ours = sympy.sympify(str(det_by_formula(G).product).replace("^", "**"), locals=symbols)
    assert sympy.expand(ours - expected) == 0


@pytest.mark.parametrize("lam", ORACLE, ids=partition_ids(ORACLE))
def test_rank(lam):
    G = generic_element(lam)
    assert to_sympy(G.matrix, symbols_for(G)).rank() == lam.n - degeneracy(lam)


@pytest.mark.parametrize("lam", ORACLE, ids=partition_ids(ORACLE))
def test_fixed_space_dimension(lam):
    n = lam.n
    N = sympy.Matrix([[int(v) for v in row] for row in jordan_nilpotent(lam).entries])
    unknowns = sympy.symbols(f"x0:{n * (n + 1) // 2}")
    A = sympy.zeros(n, n)
    position = 0
    for i in range(n):
        for j in range(i, n):
            A[i, j] = A[j, i] = unknowns[position]
            position += 1
    equations = list(N * A + A * N.T)
    system, _ = sympy.linear_eq_to_matrix(equations, unknowns)
    assert len(unknowns) - system.rank() == dim_S(lam)


@pytest.mark.parametrize("lam", ORACLE, ids=partition_ids(ORACLE))
def test_null_vectors(lam):
    G = generic_element(lam)
    symbols = symbols_for(G)
    M = to_sympy(G.matrix, symbols)
    for vector in null_basis(G):
        v = sympy.Matrix([sympy.sympify(str(x).replace("^", "**"), locals=symbols) for x in vector])
        assert (M * v).expand() == sympy.zeros(lam.n, 1)
