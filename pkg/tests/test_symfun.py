import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_sympy
from hessquant import symfun
from hessquant.poly import DEFAULT_REGISTRY as REG, Polynomial, q, x
from hessquant.symfun import ExpansionError, StdElemIndex


def sym_x(n):
    return sympy.symbols(f"x1:{n + 1}")


@pytest.mark.parametrize("i,n", [(k, n) for n in range(0, 6) for k in range(-1, n + 2)])
def test_elementary_and_complete_by_enumeration(i, n):
    xs = sym_x(n)
    e = sum((sympy.Mul(*c) for c in itertools.combinations(xs, i)), sympy.Integer(0)) if i >= 0 else 0
    h = sum((sympy.Mul(*c) for c in itertools.combinations_with_replacement(xs, i)), sympy.Integer(0)) if i >= 0 else 0
    if i == 0:
        e = h = 1
    assert to_sympy(symfun.elementary(i, n)) == sympy.expand(e)
    assert to_sympy(symfun.complete(i, n)) == sympy.expand(h)


def test_power_sum():
    assert symfun.power_sum(3, 2) == x(1) ** 3 + x(2) ** 3


def test_newton_identity_vanishes():
    for n in range(1, 5):
        for m in range(1, 5):
            assert symfun.newton_eh_sum(m, n) == 0


def test_divided_difference_basics():
    assert symfun.divided_difference(x(1), 1) == 1
    assert symfun.divided_difference(x(1) ** 2, 1) == x(1) + x(2)
    assert symfun.divided_difference(x(3), 1) == 0
    # a symmetric factor passes straight through
    e2 = symfun.elementary(2, 2)
    assert symfun.divided_difference(e2 * x(1), 1) == e2
    with pytest.raises(ValueError):
        symfun.divided_difference(q(1, 2) * x(1), 1)


def test_swap_is_an_involution():
    p = x(1) ** 3 * x(2) + x(3)
    assert symfun.swap_variables(symfun.swap_variables(p, 2), 2) == p


class TestStandardIndex:
    def test_validation(self):
        with pytest.raises(ValueError):
            StdElemIndex((2,))
        with pytest.raises(ValueError):
            StdElemIndex((1, -1))

    def test_count_is_factorial(self):
        # 0 <= i_k <= k on every level gives (m + 1)! indices
        assert len(symfun.all_levels(3)) == 24
        assert len(symfun.all_levels(4)) == 120

    def test_degree_filter(self):
        idx = list(symfun.std_elem_indices(3, 2))
        assert all(sum(i.levels) == 2 for i in idx)
        assert len(idx) == sum(1 for t in symfun.all_levels(3) if sum(t.levels) == 2)


class TestExpansion:
    def test_known_expansion(self):
        # x1^2 = e_1^(1) e_1^(2) - e_2^(2)
        coeffs = symfun.expand_standard(x(1) ** 2, 2)
        assert coeffs == {StdElemIndex((1, 1)): 1, StdElemIndex((0, 2)): -1}

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_standard_monomials_expand_to_themselves(self, m):
        for idx in symfun.all_levels(m):
            coeffs = symfun.expand_standard(symfun.std_elem_monomial(idx), m)
            assert coeffs == {idx: 1}

    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 1), st.integers(-5, 5)),
                    max_size=5))
    @settings(max_examples=40, deadline=None)
    def test_reconstruction_in_the_box(self, terms):
        p = Polynomial.zero(REG)
        for a, b, c, k in terms:
            p = p + (x(1) ** a * x(2) ** b * x(3) ** c).scale(k)
        assert symfun.reconstruct(symfun.expand_standard(p, 3)) == p

    def test_outside_box_raises(self):
        with pytest.raises(ExpansionError):
            symfun.expand_standard(x(2) ** 3, 3)
        with pytest.raises(ExpansionError):
            symfun.expand_standard(x(4), 3)
        with pytest.raises(ValueError):
            symfun.expand_standard(q(1, 2), 3)

    def test_rational_coefficients_survive(self):
        p = x(1).scale(Fraction(1, 3))
        coeffs = symfun.expand_standard(p, 2)
        assert symfun.reconstruct(coeffs) == p

    def test_quantize_of_e_is_E(self):
        from hessquant.quantum import E_poly
        for n in range(1, 4):
            for i in range(1, n + 1):
                assert symfun.quantize(symfun.elementary(i, n), n) == E_poly(i, n)
