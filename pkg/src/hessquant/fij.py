"""The polynomials ``f_{i,j}`` and their relations with ``e`` and ``h``.

``f_{i,j} = sum_{k=1..j} prod_{l=j+1..i} (x_k - x_l) * x_k`` for ``i >= j >= 1``,
available through four independent constructions.  ``f_{i,0} = 0``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Tuple

from .poly import DEFAULT_REGISTRY, Polynomial, PolyMatrix, VarRegistry, poly_prod, poly_sum, x
from .symfun import complete, elementary

F_METHODS = ("closed", "recursion", "eh", "determinant")


def _check_ij(i: int, j: int) -> None:
    if not (isinstance(i, int) and isinstance(j, int)) or not i >= j >= 1:
        raise ValueError(f"need i >= j >= 1, got (i, j) = ({i}, {j})")


@lru_cache(maxsize=None)
def _f_closed(i: int, j: int, reg: VarRegistry) -> Polynomial:
    terms = []
    for k in range(1, j + 1):
        xk = x(k, reg)
        terms.append(poly_prod((xk - x(l, reg) for l in range(j + 1, i + 1)), reg) * xk)
    return poly_sum(terms, reg)


@lru_cache(maxsize=None)
def _f_recursion(i: int, j: int, reg: VarRegistry) -> Polynomial:
    if j == 0:
        return Polynomial.zero(reg)
    if i == j:
        return poly_sum((x(k, reg) for k in range(1, j + 1)), reg)
    return _f_recursion(i - 1, j - 1, reg) + (x(j, reg) - x(i, reg)) * _f_recursion(i - 1, j, reg)


@lru_cache(maxsize=None)
def _f_eh(i: int, j: int, reg: VarRegistry) -> Polynomial:
    d = i - j + 1
    return poly_sum(
        (
            (elementary(k, i, reg) * complete(d - k, j, reg)).scale((-1) ** k * (i - k))
            for k in range(d + 1)
        ),
        reg,
    )


def f_determinant_matrix(i: int, j: int, reg: VarRegistry = DEFAULT_REGISTRY, entry=None) -> PolyMatrix:
    """The order ``i-j+1`` matrix whose determinant is ``f_{i,j}``.

    ``entry(k, n)`` supplies the elementary-type entries (``e_k^(n)`` by
    default); swapping in ``E_k^(n)`` gives the quantized matrix.
    """
    if entry is None:
        def entry(k, n):
            return elementary(k, n, reg)
    size = i - j + 1

    def cell(r: int, c: int):
        if r < size:
            if c <= r + 1:
                return entry(r - c + 1, j + r - 1)
            return 0
        k = size + 1 - c
        return entry(k, i).scale(k)

    return PolyMatrix.from_function(size, cell, reg)


@lru_cache(maxsize=None)
def _f_determinant(i: int, j: int, reg: VarRegistry) -> Polynomial:
    return f_determinant_matrix(i, j, reg).det()


_BUILDERS = {
    "closed": _f_closed,
    "recursion": _f_recursion,
    "eh": _f_eh,
    "determinant": _f_determinant,
}


def f_poly(i: int, j: int, method: str = "recursion", registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``f_{i,j}`` built by ``method`` in ``closed``, ``recursion``, ``eh``, ``determinant``."""
    _check_ij(i, j)
    try:
        builder = _BUILDERS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {F_METHODS}") from None
    return builder(i, j, registry)


def f_i1_from_e(i: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``sum_{k<i} (-1)^k (i-k) e_k^(i) x_1^(i-k)``, which equals ``f_{i,1}``."""
    x1 = x(1, registry)
    return poly_sum(
        ((elementary(k, i, registry) * x1 ** (i - k)).scale((-1) ** k * (i - k)) for k in range(i)),
        registry,
    )


def e_determinant_matrix(k: int, i: int, reg: VarRegistry = DEFAULT_REGISTRY, entry=None) -> PolyMatrix:
    """Order ``k`` matrix with ``f_{i-k+r, i-k+c}`` on and below the diagonal, ``r`` above it.

    Its determinant is ``k! e_k^(i)``.  ``entry(a, b)`` defaults to ``f_{a,b}``.
    """
    if entry is None:
        def entry(a, b):
            return f_poly(a, b, "recursion", reg)
    base = i - k

    def cell(r: int, c: int):
        if c <= r:
            return entry(base + r, base + c)
        if c == r + 1:
            return r
        return 0

    return PolyMatrix.from_function(k, cell, reg)


def _check_ki(k: int, i: int) -> None:
    if not 1 <= k <= i:
        raise ValueError(f"need 1 <= k <= i, got (k, i) = ({k}, {i})")


def e_from_f_determinant(k: int, i: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``e_k^(i)`` recovered as ``det / k!`` over the f-matrix."""
    _check_ki(k, i)
    return e_determinant_matrix(k, i, registry).det().scale(Fraction(1, factorial(k)))


def e_f_relation_sides(k: int, i: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Tuple[Polynomial, Polynomial]:
    """``(k e_k^(i), sum_l (-1)^(l-1) f_{i,i+1-l} e_{k-l}^(i-l))``."""
    _check_ki(k, i)
    lhs = elementary(k, i, registry).scale(k)
    rhs = poly_sum(
        (
            (f_poly(i, i + 1 - l, "recursion", registry) * elementary(k - l, i - l, registry)).scale(
                (-1) ** (l - 1))
            for l in range(1, k + 1)
        ),
        registry,
    )
    return lhs, rhs


def verify_e_f_relation(k: int, i: int, registry: VarRegistry = DEFAULT_REGISTRY) -> bool:
    lhs, rhs = e_f_relation_sides(k, i, registry)
    return lhs == rhs


def h_matrix(m: int, n: int, reg: VarRegistry = DEFAULT_REGISTRY) -> PolyMatrix:
    """``(h_{r-c+1}^{(m-1+c)})`` of order ``n-m+1``."""
    return PolyMatrix.from_function(n - m + 1, lambda r, c: complete(r - c + 1, m - 1 + c, reg), reg)


def _check_mn(m: int, n: int) -> None:
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got (m, n) = ({m}, {n})")


def verify_h_determinant(m: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> bool:
    _check_mn(m, n)
    return h_matrix(m, n, registry).det() == elementary(n - m + 1, n, registry)


def factorization_matrices(m: int, n: int, reg: VarRegistry = DEFAULT_REGISTRY) -> Tuple[PolyMatrix, PolyMatrix, PolyMatrix, PolyMatrix]:
    """``(L, A, D, H)`` where ``L`` should equal ``A @ D @ H``.

    ``L`` holds ``f_{m-1+r, m-1+c}`` on and below the diagonal and ``r`` on the
    superdiagonal; ``A = ((-1)^(r+c) e_{r-c}^(m-1+r))``; ``D = diag(1..N)``;
    ``H = (h_{r-c+1}^(m-1+c))``.
    """
    size = n - m + 1

    def left(r, c):
        if c <= r:
            return f_poly(m - 1 + r, m - 1 + c, "recursion", reg)
        return r if c == r + 1 else 0

    lhs = PolyMatrix.from_function(size, left, reg)
    a = PolyMatrix.from_function(
        size, lambda r, c: elementary(r - c, m - 1 + r, reg).scale((-1) ** (r + c)), reg)
    d = PolyMatrix.from_function(size, lambda r, c: r if r == c else 0, reg)
    return lhs, a, d, h_matrix(m, n, reg)


def verify_matrix_factorization(m: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> bool:
    _check_mn(m, n)
    lhs, a, d, h = factorization_matrices(m, n, registry)
    return lhs == a @ d @ h


def eh_vanishing_sum(i: int, j: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``sum_{k=0}^{i-j+1} (-1)^k e_k^(i) h_{i-j+1-k}^(j)``, zero for ``i >= j``."""
    d = i - j + 1
    return poly_sum(
        ((elementary(k, i, registry) * complete(d - k, j, registry)).scale((-1) ** k)
         for k in range(d + 1)),
        registry,
    )


def classical_generators(n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> List[Polynomial]:
    """``[f_{n,1}, ..., f_{n,n}]``."""
    return [f_poly(n, j, "recursion", registry) for j in range(1, n + 1)]
