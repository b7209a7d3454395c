import pytest
import sympy

from conftest import to_sympy
from hessquant import coordring as cr
from hessquant import hessfn, ideal, quantum
from hessquant.poly import DEFAULT_REGISTRY as REG, parse, z


def sympy_conjugate(choice, n):
    """g^{-1} X g with sympy's own matrix inverse."""
    g = sympy.eye(n)
    for i in range(2, n + 1):
        for j in range(1, i):
            g[i - 1, j - 1] = sympy.Symbol(f"z{i}_{j}")
    if choice is cr.NILPOTENT:
        xm = sympy.zeros(n, n)
        for k in range(n - 1):
            xm[k, k + 1] = 1
    else:
        xm = sympy.diag(*range(1, n + 1))
    return (g.inv() * xm * g).applyfunc(sympy.expand)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("choice", [cr.NILPOTENT, cr.SEMISIMPLE])
def test_minors_match_sympy(choice, n):
    ref = sympy_conjugate(choice, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                assert to_sympy(cr.defining_minor(choice, i, j, n)) == ref[i - 1, j - 1]


def test_small_minors():
    assert cr.nu(2, 1, 2) == -(z(2, 1) ** 2)
    assert cr.xi(2, 1, 2) == z(2, 1)
    assert cr.xi(3, 1, 3) == parse("2*z3_1 - z2_1*z3_2")


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_xi_closed_form(n):
    for i in range(1, n):
        for j in range(1, i + 1):
            assert cr.xi_minor_formula(i, j, n) == cr.xi(n + 1 - j, n - i, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_main_identity(n):
    for i in range(1, n):
        for j in range(1, i + 1):
            assert cr.verify_main3(i, j, n)


def test_phi_assignment():
    phi = cr.phi_assignment(3)
    assert phi[REG.z_id(2, 1)] == quantum.E_poly(1, 2)
    assert phi[REG.z_id(3, 1)] == quantum.E_poly(2, 2)
    with pytest.raises(ValueError):
        cr.phi_substitute(z(4, 1), 3)


@pytest.mark.parametrize("n", [2, 3])
def test_phi_q(n):
    gb = ideal.buchberger(quantum.quantum_generators(n))
    for r in range(1, n):
        for s in range(r + 1, n + 1):
            assert cr.verify_phi_q(r, s, n, gb)


def test_operator_choice_aliases():
    assert cr.OperatorChoice("regular_nilpotent") is cr.NILPOTENT
    assert cr.operator_matrix(cr.SEMISIMPLE, 3).entry(3, 3) == 3
    # the shift moves the spectrum to 1 - c, ..., n - c
    assert cr.operator_matrix(cr.SEMISIMPLE, 3, shift=2).entry(1, 1) == -1


def test_presentations():
    h = hessfn.parse_csv("2,3,3")
    gens = cr.presentation_generators("cohomology", h)
    assert [g.homogeneous_degree() for g in gens] == [4, 4, 2]
    ss = cr.presentation_generators("semisimple", h)
    hs = hessfn.dual(h)
    assert set(cr.semisimple_indices(h)) == (
        {(3, j) for j in (1, 2, 3)} | {(i, j) for j in (1, 2) for i in range(hs(j), 3)})
    assert len(ss) == len(cr.semisimple_indices(h))
    nil = cr.presentation_generators("nilpotent", hessfn.parse_csv("3,4,4,5,5"))
    gone = {REG.q_id(1, 3), REG.q_id(1, 4), REG.q_id(1, 5), REG.q_id(2, 5)}
    assert all(not (g.variables() & gone) for g in nil)
    with pytest.raises(ValueError):
        cr.presentation_generators("bogus", h)
