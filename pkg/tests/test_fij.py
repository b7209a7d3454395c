import pytest
import sympy

from conftest import to_sympy
from hessquant import fij, symfun
from hessquant.poly import parse

PAIRS = [(i, j) for i in range(1, 7) for j in range(1, i + 1)]


def sympy_f(i, j):
    xs = sympy.symbols(f"x1:{i + 1}")
    total = 0
    for k in range(j):
        term = xs[k]
        for l in range(j, i):
            term *= xs[k] - xs[l]
        total += term
    return sympy.expand(total)


@pytest.mark.parametrize("i,j", PAIRS)
@pytest.mark.parametrize("method", fij.F_METHODS)
def test_every_route_matches_the_sum_of_products(method, i, j):
    assert to_sympy(fij.f_poly(i, j, method)) == sympy_f(i, j)


@pytest.mark.parametrize("i,j", PAIRS)
def test_degree_and_support(i, j):
    f = fij.f_poly(i, j)
    assert f.homogeneous_degree() == 2 * (i - j + 1)
    assert max(v for v in f.variables()) <= i


def test_small_values():
    assert fij.f_poly(4, 4) == parse("x1 + x2 + x3 + x4")
    assert fij.f_poly(2, 1) == parse("x1^2 - x1*x2")
    assert fij.f_poly(3, 2) == parse("x1^2 - x1*x3 + x2^2 - x2*x3")


def test_bad_indices():
    with pytest.raises(ValueError):
        fij.f_poly(1, 2)
    with pytest.raises(ValueError):
        fij.f_poly(3, 0)
    with pytest.raises(ValueError):
        fij.f_poly(2, 1, "nonsense")


@pytest.mark.parametrize("i", range(1, 7))
def test_first_column_from_e(i):
    assert fij.f_i1_from_e(i) == fij.f_poly(i, 1)


@pytest.mark.parametrize("k,i", [(k, i) for i in range(1, 7) for k in range(1, i + 1)])
def test_e_f_relations(k, i):
    assert fij.verify_e_f_relation(k, i)
    assert fij.e_from_f_determinant(k, i) == symfun.elementary(k, i)


@pytest.mark.parametrize("m,n", [(m, n) for n in range(1, 7) for m in range(1, n + 1)])
def test_matrix_identities(m, n):
    assert fij.verify_matrix_factorization(m, n)
    assert fij.verify_h_determinant(m, n)


@pytest.mark.parametrize("i,j", PAIRS)
def test_eh_sum_vanishes(i, j):
    assert fij.eh_vanishing_sum(i, j) == 0


def test_determinant_matrix_shape():
    m = fij.f_determinant_matrix(3, 1)
    assert m.order == 3
    # the last row carries k * e_k^(i), highest k first
    assert m.entry(3, 1) == symfun.elementary(3, 3).scale(3)
    assert m.entry(3, 3) == symfun.elementary(1, 3)
