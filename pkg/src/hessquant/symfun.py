"""Symmetric polynomials, divided differences and standard elementary monomials.

``e_{i_1,...,i_m} = e_{i_1}^{(1)} e_{i_2}^{(2)} ... e_{i_m}^{(m)}`` with
``0 <= i_k <= k``.  With ``m`` levels these products span exactly the
polynomials in ``x_1..x_m`` whose ``x_k``-degree is at most ``m + 1 - k``
(each factor is linear in every variable it involves, and the dimensions
agree degree by degree).  ``expand_standard`` therefore solves a square
system on that box of monomials; the echelon form for each ``(m, degree)``
is built once and cached.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Tuple

from .poly import (
    DEFAULT_REGISTRY,
    KIND_X,
    Monomial,
    Polynomial,
    VarRegistry,
    grevlex_key,
    poly_sum,
    x,
)


class ExpansionError(ArithmeticError):
    """The polynomial is not in the span of the requested standard monomials."""


@dataclass(frozen=True, order=True)
class StdElemIndex:
    """Levels ``(i_1, ..., i_m)`` of a standard elementary monomial."""

    levels: Tuple[int, ...]

    def __post_init__(self):
        levels = tuple(self.levels)
        object.__setattr__(self, "levels", levels)
        for k, ik in enumerate(levels, start=1):
            if not isinstance(ik, int) or not 0 <= ik <= k:
                raise ValueError(f"level {k} has index {ik}, expected 0..{k}")

    @property
    def m(self) -> int:
        return len(self.levels)

    def degree(self) -> int:
        """Weighted degree ``2 * sum(levels)``."""
        return 2 * sum(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def __repr__(self) -> str:
        return f"StdElemIndex({self.levels})"


def _check_x_only(p: Polynomial) -> None:
    for v in p.variables():
        if VarRegistry.kind(v) != KIND_X:
            raise ValueError(f"expected a polynomial in x-variables, found {p.registry.name(v)}")


@lru_cache(maxsize=None)
def elementary(i: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``e_i(x_1, ..., x_n)``; 1 for ``i = 0`` and 0 outside ``0..n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if i == 0:
        return Polynomial.one(registry)
    if i < 0 or i > n:
        return Polynomial.zero(registry)
    return elementary(i, n - 1, registry) + x(n, registry) * elementary(i - 1, n - 1, registry)


@lru_cache(maxsize=None)
def complete(i: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """Complete homogeneous symmetric polynomial ``h_i(x_1, ..., x_n)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if i == 0:
        return Polynomial.one(registry)
    if i < 0 or n == 0:
        return Polynomial.zero(registry)
    return complete(i, n - 1, registry) + x(n, registry) * complete(i - 1, n, registry)


def power_sum(k: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    if k < 1 or n < 1:
        raise ValueError("power_sum needs k >= 1 and n >= 1")
    return poly_sum((x(r, registry) ** k for r in range(1, n + 1)), registry)


def swap_variables(p: Polynomial, k: int) -> Polynomial:
    """The transposition ``s_k`` exchanging ``x_k`` and ``x_{k+1}``."""
    reg = p.registry
    a, b = reg.x_id(k), reg.x_id(k + 1)
    return p.rename({a: b, b: a})


def divided_difference(p: Polynomial, k: int) -> Polynomial:
    """``(p - s_k p) / (x_k - x_{k+1})``, computed as an exact division."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_x_only(p)
    numerator = p - swap_variables(p, k)
    if not numerator:
        return Polynomial.zero(p.registry)
    try:
        return numerator.exact_div(x(k, p.registry) - x(k + 1, p.registry))
    except ArithmeticError as exc:  # pragma: no cover - would be an arithmetic bug
        raise AssertionError("p - s_k(p) not divisible by x_k - x_{k+1}") from exc


def std_elem_monomial(idx: StdElemIndex, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    return _std_product(idx.levels, registry)


@lru_cache(maxsize=None)
def _std_product(levels: Tuple[int, ...], registry: VarRegistry) -> Polynomial:
    if not levels:
        return Polynomial.one(registry)
    head = _std_product(levels[:-1], registry)
    return head * elementary(levels[-1], len(levels), registry)


def std_elem_indices(m: int, total: int) -> Iterator[StdElemIndex]:
    """All level vectors with ``m`` levels and ``sum(levels) == total``."""

    def rec(k: int, left: int, acc: list):
        if k > m:
            if left == 0:
                yield StdElemIndex(tuple(acc))
            return
        # the remaining levels k..m can absorb at most sum(k..m)
        cap = (m * (m + 1) - (k - 1) * k) // 2
        if left > cap:
            return
        for ik in range(min(k, left) + 1):
            acc.append(ik)
            yield from rec(k + 1, left - ik, acc)
            acc.pop()

    if m < 0 or total < 0:
        return iter(())
    return rec(1, total, [])


# -- exact expansion -----------------------------------------------------------

class _Echelon:
    """Reduced row echelon form of the standard monomials of one degree.

    Box monomials are numbered in descending grevlex order.  Each pivot row
    is a combination of standard monomials, normalized to 1 at its pivot and
    0 at every other pivot, so solving is a single lookup per pivot.
    """

    def __init__(self, m: int, total: int, registry: VarRegistry):
        self.m = m
        self.total = total
        self.registry = registry
        polys = [(idx, std_elem_monomial(idx, registry)) for idx in std_elem_indices(m, total)]
        monos = sorted({mono for _, p in polys for mono in p},
                       key=lambda mono: grevlex_key(mono, registry), reverse=True)
        self.monos = monos
        self.index = {mono: k for k, mono in enumerate(monos)}
        rows: Dict[int, Tuple[Dict[int, Fraction], Dict[StdElemIndex, Fraction]]] = {}
        for idx, p in polys:
            vec = {self.index[mono]: Fraction(c) for mono, c in p.items()}
            comb = {idx: Fraction(1)}
            heap = list(vec)
            heapq.heapify(heap)
            while heap:
                col = heapq.heappop(heap)
                c = vec.get(col)
                if not c or col not in rows:
                    continue
                pvec, pcomb = rows[col]
                for k, v in pvec.items():
                    nv = vec.get(k, 0) - c * v
                    if nv:
                        if k not in vec:
                            heapq.heappush(heap, k)
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
                _axpy(comb, pcomb, -c)
            if not vec:  # pragma: no cover - would contradict linear independence
                raise ExpansionError(f"standard monomials of degree {2 * total} are dependent")
            lead = min(vec)
            inv = 1 / vec[lead]
            vec = {k: v * inv for k, v in vec.items()}
            comb = {k: v * inv for k, v in comb.items()}
            # back-substitute so no other row carries the new pivot column
            for col, (pvec, pcomb) in rows.items():
                c = pvec.get(lead)
                if c:
                    _axpy(pvec, vec, -c)
                    _axpy(pcomb, comb, -c)
            rows[lead] = (vec, comb)
        if len(rows) != len(monos):  # pragma: no cover
            raise ExpansionError("standard monomials do not span the degree-bounded box")
        self.rows = rows

    def solve(self, p: Polynomial) -> Dict[StdElemIndex, Fraction]:
        comb: Dict[StdElemIndex, Fraction] = {}
        for mono, c in p.items():
            col = self.index.get(mono)
            if col is None:
                raise ExpansionError(
                    f"polynomial is not in the span of standard monomials with {self.m} levels"
                )
            _axpy(comb, self.rows[col][1], c)
        return comb


def _axpy(target: dict, source: dict, c) -> None:
    """``target += c * source`` in place, dropping zeros."""
    for k, v in source.items():
        nv = target.get(k, 0) + c * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


@lru_cache(maxsize=None)
def _echelon(m: int, total: int, registry: VarRegistry) -> _Echelon:
    return _Echelon(m, total, registry)


def _normalize(c: Fraction):
    return c.numerator if c.denominator == 1 else c


def expand_standard(p: Polynomial, m: int) -> Dict[StdElemIndex, object]:
    """Unique coefficients ``c`` with ``p = sum(c[idx] * e_idx)`` over ``m`` levels.

    Coefficients are ``int`` when integral and ``Fraction`` otherwise.
    Raises ``ExpansionError`` when ``p`` is outside the span, e.g. when
    ``m`` is too small.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    _check_x_only(p)
    reg = p.registry
    for v in p.variables():
        if reg.indices(v)[0] > m:
            raise ExpansionError(f"{reg.name(v)} is outside x_1..x_{m}")
    result: Dict[StdElemIndex, object] = {}
    for deg, part in p.homogeneous_parts().items():
        comb = _echelon(m, deg // 2, reg).solve(part)
        for idx, c in comb.items():
            if c:
                result[idx] = _normalize(c)
    return result


def reconstruct(coeffs: Mapping[StdElemIndex, object], registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``sum(c * e_idx)``, the inverse of ``expand_standard``."""
    return poly_sum((std_elem_monomial(idx, registry).scale(c) for idx, c in coeffs.items()), registry)


def quantize(p: Polynomial, m: int) -> Polynomial:
    """Replace every ``e_{i_1..i_m}`` in the expansion of ``p`` by ``E_{i_1..i_m}``."""
    from .quantum import quantum_std_monomial

    coeffs = expand_standard(p, m)
    reg = p.registry
    return poly_sum(
        (quantum_std_monomial(idx, reg).scale(c) for idx, c in sorted(coeffs.items())), reg
    )


def newton_eh_sum(m: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``sum_{i=0..m} (-1)^i e_i^(n) h_{m-i}^(n)``, identically zero for m >= 1."""
    return poly_sum(
        (
            (elementary(i, n, registry) * complete(m - i, n, registry)).scale((-1) ** i)
            for i in range(m + 1)
        ),
        registry,
    )


def all_levels(m: int) -> List[StdElemIndex]:
    """Every standard index with ``m`` levels, in lexicographic order."""
    return [StdElemIndex(t) for t in itertools.product(*(range(k + 1) for k in range(1, m + 1)))]
