"""Quantized elementary symmetric polynomials ``E_i^(n)`` and quantizations ``F_{i,j}``.

``M_n`` carries ``x_k`` on the diagonal, ``q_{rs}`` above it and ``-1`` on the
subdiagonal, and ``det(lam I - M_n) = sum_i (-1)^i E_i^(n) lam^(n-i)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, List, Tuple

from .fij import e_determinant_matrix, f_determinant_matrix, f_poly
from .hessfn import HessenbergFunction, q_vanishing_set
from .poly import (
    DEFAULT_REGISTRY,
    KIND_Q,
    Polynomial,
    PolyMatrix,
    VarRegistry,
    lam,
    poly_prod,
    poly_sum,
    q,
    x,
)
from .symfun import StdElemIndex, quantize

E_METHODS = ("charpoly", "recursion", "strings")
QF_METHODS = ("quantize", "determinant", "recursion")


def build_Mn(n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> PolyMatrix:
    if n < 1:
        raise ValueError("n must be >= 1")

    def cell(r: int, s: int):
        if r == s:
            return x(r, registry)
        if r < s:
            return q(r, s, registry)
        return -1 if r == s + 1 else 0

    return PolyMatrix.from_function(n, cell, registry)


@lru_cache(maxsize=None)
def characteristic_polynomial(n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``det(lam I - M_n)`` with ``lam`` an ordinary variable."""
    lam_i = PolyMatrix.identity(n, registry).scale(lam(registry))
    return (lam_i - build_Mn(n, registry)).det()


@lru_cache(maxsize=None)
def _E_charpoly(i: int, n: int, reg: VarRegistry) -> Polynomial:
    coeff = characteristic_polynomial(n, reg).coefficient_in(reg.lam_id(), n - i)
    return coeff if i % 2 == 0 else -coeff


@lru_cache(maxsize=None)
def _E_recursion(i: int, n: int, reg: VarRegistry) -> Polynomial:
    if i == 0:
        return Polynomial.one(reg)
    if i < 0 or i > n:
        return Polynomial.zero(reg)
    out = _E_recursion(i, n - 1, reg) + _E_recursion(i - 1, n - 1, reg) * x(n, reg)
    for k in range(1, i):
        out = out + _E_recursion(i - 1 - k, n - 1 - k, reg) * q(n - k, n, reg)
    return out


def interval_packings(n: int, size: int, start: int = 1) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """Sets of pairwise disjoint intervals ``[r, s]`` inside ``[start, n]`` covering ``size`` points.

    Intervals come out sorted by their left end, so each set appears once.
    """
    if size == 0:
        yield ()
        return
    for r in range(start, n + 1):
        for s in range(r, min(n, r + size - 1) + 1):
            for rest in interval_packings(n, size - (s - r + 1), s + 1):
                yield ((r, s),) + rest


@lru_cache(maxsize=None)
def _E_strings(i: int, n: int, reg: VarRegistry) -> Polynomial:
    if i == 0:
        return Polynomial.one(reg)
    if i < 0 or i > n:
        return Polynomial.zero(reg)

    def rho(r: int, s: int) -> Polynomial:
        return x(r, reg) if r == s else q(r, s, reg)

    return poly_sum(
        (poly_prod((rho(r, s) for r, s in packing), reg) for packing in interval_packings(n, i)),
        reg,
    )


_E_BUILDERS = {"charpoly": _E_charpoly, "recursion": _E_recursion, "strings": _E_strings}


def E_poly(i: int, n: int, method: str = "recursion", registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``E_i^(n)``: 1 for ``i = 0``, 0 for ``i < 0`` or ``i > n``."""
    if method not in _E_BUILDERS:
        raise ValueError(f"unknown method {method!r}; choose from {E_METHODS}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if i == 0:
        return Polynomial.one(registry)
    if i < 0 or i > n:
        return Polynomial.zero(registry)
    return _E_BUILDERS[method](i, n, registry)


def truncated_E(h: HessenbergFunction, i: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``E_i^(n)`` with every ``q_{rs}``, ``(r, s)`` in the vanishing set of ``h``, set to 0."""
    if h.n != n:
        raise ValueError(f"h is defined on [{h.n}], not [{n}]")
    gone = [registry.q_id(r, s) for r, s in q_vanishing_set(h)]
    return E_poly(i, n, "recursion", registry).drop_terms_with(gone)


def quantum_std_monomial(idx: StdElemIndex, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``E_{i_1..i_m} = E_{i_1}^(1) ... E_{i_m}^(m)``."""
    return _quantum_product(idx.levels, registry)


@lru_cache(maxsize=None)
def _quantum_product(levels: Tuple[int, ...], reg: VarRegistry) -> Polynomial:
    if not levels:
        return Polynomial.one(reg)
    return _quantum_product(levels[:-1], reg) * E_poly(levels[-1], len(levels), "recursion", reg)


def classical_limit(p: Polynomial) -> Polynomial:
    """Set every quantum parameter ``q_{rs}`` to 0."""
    return p.drop_terms_with(v for v in p.variables() if VarRegistry.kind(v) == KIND_Q)


def _check_ij(i: int, j: int) -> None:
    if not (isinstance(i, int) and isinstance(j, int)) or not i >= j >= 1:
        raise ValueError(f"need i >= j >= 1, got (i, j) = ({i}, {j})")


@lru_cache(maxsize=None)
def _F_quantize(i: int, j: int, reg: VarRegistry) -> Polynomial:
    return quantize(f_poly(i, j, "recursion", reg), i)


def F_determinant_matrix(i: int, j: int, registry: VarRegistry = DEFAULT_REGISTRY) -> PolyMatrix:
    """The f-determinant matrix with ``E_k^(n)`` in place of ``e_k^(n)``."""
    return f_determinant_matrix(i, j, registry, entry=lambda k, n: E_poly(k, n, "recursion", registry))


@lru_cache(maxsize=None)
def _F_determinant(i: int, j: int, reg: VarRegistry) -> Polynomial:
    return F_determinant_matrix(i, j, reg).det()


@lru_cache(maxsize=None)
def _F_recursion(i: int, j: int, reg: VarRegistry) -> Polynomial:
    if j == 0:
        return Polynomial.zero(reg)
    if i == j:
        return poly_sum((x(k, reg) for k in range(1, j + 1)), reg)
    prev = _F_recursion(i - 1, j, reg)
    # both correction sums are empty when i = j + 1
    left = x(j, reg) * prev + poly_sum(
        ((q(j, j + k, reg) * _F_recursion(i - 1, j + k, reg)).scale((-1) ** k)
         for k in range(1, i - j)), reg)
    right = x(i, reg) * prev + poly_sum(
        ((q(i - k, i, reg) * _F_recursion(i - k - 1, j, reg)).scale((-1) ** k)
         for k in range(1, i - j)), reg)
    corner = q(j, i, reg).scale((-1) ** (i - j) * (i - j + 1))
    return _F_recursion(i - 1, j - 1, reg) + left - right + corner


_F_BUILDERS = {"quantize": _F_quantize, "determinant": _F_determinant, "recursion": _F_recursion}


def F_poly(i: int, j: int, method: str = "recursion", registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``F_{i,j}``, the quantization of ``f_{i,j}``."""
    _check_ij(i, j)
    if method not in _F_BUILDERS:
        raise ValueError(f"unknown method {method!r}; choose from {QF_METHODS}")
    return _F_BUILDERS[method](i, j, registry)


def _check_ki(k: int, i: int) -> None:
    if not 1 <= k <= i:
        raise ValueError(f"need 1 <= k <= i, got (k, i) = ({k}, {i})")


def E_F_relation_sides(k: int, i: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Tuple[Polynomial, Polynomial]:
    """``(k E_k^(i), sum_l (-1)^(l-1) F_{i,i+1-l} E_{k-l}^(i-l))``."""
    _check_ki(k, i)
    lhs = E_poly(k, i, "recursion", registry).scale(k)
    rhs = poly_sum(
        (
            (F_poly(i, i + 1 - l, "recursion", registry)
             * E_poly(k - l, i - l, "recursion", registry)).scale((-1) ** (l - 1))
            for l in range(1, k + 1)
        ),
        registry,
    )
    return lhs, rhs


def verify_E_F_relation(k: int, i: int, registry: VarRegistry = DEFAULT_REGISTRY) -> bool:
    lhs, rhs = E_F_relation_sides(k, i, registry)
    return lhs == rhs


def E_from_F_determinant(k: int, i: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    _check_ki(k, i)
    m = e_determinant_matrix(k, i, registry, entry=lambda a, b: F_poly(a, b, "recursion", registry))
    return m.det().scale(Fraction(1, factorial(k)))


def quantum_generators(n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> List[Polynomial]:
    """``[E_1^(n), ..., E_n^(n)]``."""
    return [E_poly(i, n, "recursion", registry) for i in range(1, n + 1)]
