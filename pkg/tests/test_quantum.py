import pytest
import sympy

from conftest import to_sympy
from hessquant import fij, hessfn, quantum, symfun
from hessquant.poly import DEFAULT_REGISTRY as REG, parse, q, x


def sympy_charpoly_coefficients(n):
    lam = sympy.Symbol("lam")
    m = sympy.zeros(n, n)
    for r in range(n):
        for s in range(n):
            if r == s:
                m[r, s] = sympy.Symbol(f"x{r + 1}")
            elif r < s:
                m[r, s] = sympy.Symbol(f"q{r + 1}_{s + 1}")
            elif r == s + 1:
                m[r, s] = -1
    poly = sympy.Poly((lam * sympy.eye(n) - m).det(method="berkowitz"), lam)
    return [sympy.expand((-1) ** i * poly.coeff_monomial(lam ** (n - i))) for i in range(n + 1)]


@pytest.mark.parametrize("n", range(1, 6))
def test_E_against_sympy_charpoly(n):
    coeffs = sympy_charpoly_coefficients(n)
    for i in range(1, n + 1):
        for method in quantum.E_METHODS:
            assert to_sympy(quantum.E_poly(i, n, method)) == coeffs[i]


def test_E_edges():
    assert quantum.E_poly(0, 3) == 1
    assert quantum.E_poly(4, 3) == 0
    assert quantum.E_poly(-1, 3) == 0
    with pytest.raises(ValueError):
        quantum.E_poly(1, 2, "bogus")


def test_E_examples():
    assert quantum.E_poly(2, 2) == parse("x1*x2 + q1_2")
    assert quantum.E_poly(3, 3) == parse("x1*x2*x3 + x1*q2_3 + x3*q1_2 + q1_3")


def test_interval_packings_are_disjoint():
    for n in range(1, 6):
        for size in range(n + 1):
            seen = set()
            for pack in quantum.interval_packings(n, size):
                pts = [p for r, s in pack for p in range(r, s + 1)]
                assert len(pts) == len(set(pts)) == size
                assert pack not in seen
                seen.add(pack)


def test_truncation():
    h = hessfn.parse_csv("3,4,4,5,5")
    for i in range(1, 6):
        t = quantum.truncated_E(h, i, 5)
        names = {REG.name(v) for v in t.variables()}
        assert not names & {"q1_3", "q1_4", "q1_5", "q2_5"}
        assert quantum.classical_limit(t) == symfun.elementary(i, 5)
    with pytest.raises(ValueError):
        quantum.truncated_E(h, 1, 4)


PAIRS = [(i, j) for i in range(1, 7) for j in range(1, i + 1)]


@pytest.mark.parametrize("i,j", PAIRS)
def test_F_routes_agree(i, j):
    ref = quantum.F_poly(i, j, "quantize")
    assert quantum.F_poly(i, j, "determinant") == ref
    assert quantum.F_poly(i, j, "recursion") == ref
    assert quantum.classical_limit(ref) == fij.f_poly(i, j)


def test_F_worked_examples():
    assert quantum.F_poly(2, 1) == parse("x1^2 - x1*x2 - 2*q1_2")
    assert quantum.F_poly(3, 2) == parse("(x1 - x3)*x1 + (x2 - x3)*x2 - 2*q1_2 - 2*q2_3")
    f31 = fij.f_poly(3, 1)
    assert quantum.F_poly(3, 1) == f31 + q(1, 2) * (-3 * x(1) - x(2) + 2 * x(3)) + q(2, 3) * x(1) + 3 * q(1, 3)


@pytest.mark.parametrize("k,i", [(k, i) for i in range(1, 6) for k in range(1, i + 1)])
def test_E_F_relation(k, i):
    assert quantum.verify_E_F_relation(k, i)
    assert quantum.E_from_F_determinant(k, i) == quantum.E_poly(k, i)


def test_F_bad_indices():
    with pytest.raises(ValueError):
        quantum.F_poly(2, 3)
