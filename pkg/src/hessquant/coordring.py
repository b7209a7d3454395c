"""Minors of ``g^{-1} X g`` on the lower-unipotent cell, and the map ``phi``.

``g`` is lower unitriangular with free entries ``z_{ij}`` (``i > j``).  Since
``det g = 1``, Cramer's rule gives ``(g^{-1} X g)_{ij}`` as the determinant of
``g`` with its ``i``-th column replaced by the ``j``-th column of ``X g``, a
polynomial in the ``z``'s.  ``X`` is the regular nilpotent Jordan block
(ones on the superdiagonal) or the regular semisimple ``diag(1, ..., n)``.

``phi`` sends ``z_{ij}`` to ``E_{i-j}^{(n-j)}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Tuple

from .fij import f_poly
from .hessfn import HessenbergFunction, dual
from .ideal import GroebnerBasis, normal_form
from .poly import (
    DEFAULT_REGISTRY,
    KIND_Z,
    Polynomial,
    PolyMatrix,
    VarRegistry,
    z,
)
from .quantum import E_poly, F_poly, truncated_E


class OperatorChoice(str, Enum):
    REGULAR_NILPOTENT = "regular_nilpotent"
    REGULAR_SEMISIMPLE = "regular_semisimple"


NILPOTENT = OperatorChoice.REGULAR_NILPOTENT
SEMISIMPLE = OperatorChoice.REGULAR_SEMISIMPLE


def operator_matrix(choice: OperatorChoice, n: int, shift=0, registry: VarRegistry = DEFAULT_REGISTRY) -> PolyMatrix:
    """The Jordan block or ``diag(1..n)``, minus ``shift`` times the identity."""
    choice = OperatorChoice(choice)
    if choice is NILPOTENT:
        def cell(i, j):
            return (1 if j == i + 1 else 0) - (shift if i == j else 0)
    else:
        def cell(i, j):
            return i - shift if i == j else 0
    return PolyMatrix.from_function(n, cell, registry)


@dataclass(frozen=True)
class UnipotentSymbolic:
    """Lower unitriangular ``g`` with ``z_{ij}`` below the diagonal."""

    n: int
    registry: VarRegistry = DEFAULT_REGISTRY

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @property
    def matrix(self) -> PolyMatrix:
        return _unipotent(self.n, self.registry)

    def inverse(self) -> PolyMatrix:
        """``g^{-1} = sum_k (-N)^k`` with ``N = g - I`` nilpotent."""
        g = self.matrix
        n = self.n
        ident = PolyMatrix.identity(n, self.registry)
        neg = ident - g
        out, power = ident, ident
        for _ in range(n - 1):
            power = power @ neg
            out = out + power
        return out


@lru_cache(maxsize=None)
def _unipotent(n: int, reg: VarRegistry) -> PolyMatrix:
    return PolyMatrix.from_function(
        n, lambda i, j: 1 if i == j else (z(i, j, reg) if i > j else 0), reg)


def _check_unit(i: int, j: int, n: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i}, {j}) outside [1, {n}]")


def conjugated_entry(x_mat: PolyMatrix, i: int, j: int) -> Polynomial:
    """``(g^{-1} X g)_{ij}`` via the column-replacement determinant."""
    n = x_mat.order
    _check_unit(i, j, n)
    reg = x_mat.registry
    g = _unipotent(n, reg)
    xg = x_mat @ g
    return g.with_column(i - 1, xg.column(j - 1)).det()


@lru_cache(maxsize=None)
def _minor(choice: OperatorChoice, i: int, j: int, n: int, shift, reg: VarRegistry) -> Polynomial:
    return conjugated_entry(operator_matrix(choice, n, shift, reg), i, j)


def defining_minor(choice, i: int, j: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY,
                   shift=0) -> Polynomial:
    """``nu_{i,j}`` (nilpotent) or ``xi_{i,j}`` (semisimple) as a polynomial in ``z``."""
    _check_unit(i, j, n)
    return _minor(OperatorChoice(choice), i, j, n, shift, registry)


def nu(i: int, j: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    return defining_minor(NILPOTENT, i, j, n, registry)


def xi(i: int, j: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    return defining_minor(SEMISIMPLE, i, j, n, registry)


def conjugate_by_inverse(choice, n: int, registry: VarRegistry = DEFAULT_REGISTRY, shift=0) -> PolyMatrix:
    """``g^{-1} X g`` by explicit matrix products, independent of the minors."""
    g = UnipotentSymbolic(n, registry)
    return g.inverse() @ operator_matrix(choice, n, shift, registry) @ g.matrix


def xi_formula_matrix(i: int, j: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> PolyMatrix:
    """Order ``i-j+1`` matrix in the ``z``'s whose determinant is ``pm xi_{n+1-j, n-i}``.

    Row ``a < i-j+1``: ``a z_{n-i+a, n-i}``, then ``z_{n-i+a, n-i+b-1}`` for
    ``b <= a``, a 1 at ``b = a+1`` and zeros after.  The last row is
    ``((i-j+1) z_{n-j+1, n-i}, z_{n-j+1, n-i+1}, ..., z_{n-j+1, n-j})``.
    """
    size = i - j + 1
    base = n - i

    def cell(a: int, b: int):
        # the last row is row base + size = n - j + 1, so one rule covers it
        row = base + a
        if b == 1:
            return z(row, base, registry).scale(a)
        if b - 1 < a:
            return z(row, base + b - 1, registry)
        if b == a + 1:
            return 1
        return 0

    return PolyMatrix.from_function(size, cell, registry)


def _check_main3(i: int, j: int, n: int) -> None:
    if not 1 <= j <= i <= n - 1:
        raise ValueError(f"need 1 <= j <= i <= n-1, got (i, j, n) = ({i}, {j}, {n})")


def xi_minor_formula(i: int, j: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """``(-1)^{i-j} det`` of ``xi_formula_matrix``; equals ``xi_{n+1-j, n-i}``."""
    _check_main3(i, j, n)
    d = xi_formula_matrix(i, j, n, registry).det()
    return d if (i - j) % 2 == 0 else -d


@lru_cache(maxsize=None)
def phi_assignment(n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> dict:
    return {
        registry.z_id(i, j): E_poly(i - j, n - j, "recursion", registry)
        for i in range(2, n + 1) for j in range(1, i)
    }


def phi_substitute(p: Polynomial, n: int) -> Polynomial:
    """Simultaneous substitution ``z_{ij} -> E_{i-j}^{(n-j)}``."""
    reg = p.registry
    for v in p.variables():
        if VarRegistry.kind(v) != KIND_Z:
            continue
        if reg.indices(v)[0] > n:
            raise ValueError(f"{reg.name(v)} is out of range for n = {n}")
    return p.substitute(phi_assignment(n, reg))


def main3_sides(i: int, j: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Tuple[Polynomial, Polynomial]:
    """``(phi(xi_{n+1-j, n-i}), (-1)^{i-j} F_{i,j})``."""
    _check_main3(i, j, n)
    lhs = phi_substitute(xi(n + 1 - j, n - i, n, registry), n)
    rhs = F_poly(i, j, "recursion", registry)
    return lhs, rhs if (i - j) % 2 == 0 else -rhs


def verify_main3(i: int, j: int, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> bool:
    lhs, rhs = main3_sides(i, j, n, registry)
    return lhs == rhs


def phi_q_residue(r: int, s: int, n: int, gb: GroebnerBasis, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """Normal form of ``phi(nu_{n+1-r, n+1-s}) + q_{rs}`` modulo ``gb``."""
    if not 1 <= r < s <= n:
        raise ValueError(f"need 1 <= r < s <= n, got (r, s, n) = ({r}, {s}, {n})")
    for v in gb.variables:
        if VarRegistry.kind(v) == KIND_Z:
            raise ValueError("basis must live in the x, q variables")
        idx = registry.indices(v)
        if max(idx) > n:
            raise ValueError(f"basis involves {registry.name(v)}, beyond n = {n}")
    if registry.x_id(n) not in gb.variables:
        raise ValueError(f"basis does not involve x{n}; it was built for a smaller n")
    p = phi_substitute(nu(n + 1 - r, n + 1 - s, n, registry), n)
    return normal_form(p + Polynomial.variable(registry.q_id(r, s), registry), gb)


def verify_phi_q(r: int, s: int, n: int, gb: GroebnerBasis, registry: VarRegistry = DEFAULT_REGISTRY) -> bool:
    return not phi_q_residue(r, s, n, gb, registry)


# -- presentations --------------------------------------------------------------

COHOMOLOGY = "cohomology_regular_nilpotent"
COORD_SEMISIMPLE = "coordring_regular_semisimple"
COORD_NILPOTENT = "coordring_regular_nilpotent"
TARGETS = (COHOMOLOGY, COORD_SEMISIMPLE, COORD_NILPOTENT)
TARGET_ALIASES = {
    "cohomology": COHOMOLOGY,
    "semisimple": COORD_SEMISIMPLE,
    "nilpotent": COORD_NILPOTENT,
    COHOMOLOGY: COHOMOLOGY,
    COORD_SEMISIMPLE: COORD_SEMISIMPLE,
    COORD_NILPOTENT: COORD_NILPOTENT,
}


def semisimple_indices(h: HessenbergFunction) -> List[Tuple[int, int]]:
    """``(n, 1..n)`` together with ``(i, j)``, ``j < n``, ``h*(j) <= i <= n-1``."""
    n = h.n
    hs = dual(h)
    pairs = [(i, j) for j in range(1, n) for i in range(hs(j), n)]
    pairs += [(n, j) for j in range(1, n + 1)]
    return sorted(set(pairs), key=lambda ij: (ij[1], ij[0]))


def presentation_generators(target: str, h: HessenbergFunction,
                            registry: VarRegistry = DEFAULT_REGISTRY) -> List[Polynomial]:
    try:
        target = TARGET_ALIASES[target]
    except KeyError:
        raise ValueError(f"unknown target {target!r}; choose from {TARGETS}") from None
    n = h.n
    if target == COHOMOLOGY:
        return [f_poly(h(j), j, "recursion", registry) for j in range(1, n + 1)]
    if target == COORD_NILPOTENT:
        return [truncated_E(h, i, n, registry) for i in range(1, n + 1)]
    return [F_poly(i, j, "recursion", registry) for i, j in semisimple_indices(h)]


def redundant_cohomology_generators(h: HessenbergFunction, registry: VarRegistry = DEFAULT_REGISTRY) -> List[Polynomial]:
    """``f_{i,j}`` for every ``j`` and ``h(j) <= i <= n``."""
    n = h.n
    return [f_poly(i, j, "recursion", registry) for j in range(1, n + 1) for i in range(h(j), n + 1)]


def z_side_generators(choice, h: HessenbergFunction, registry: VarRegistry = DEFAULT_REGISTRY) -> List[Polynomial]:
    """Minors ``nu_{i,j}`` or ``xi_{i,j}`` with ``i > h(j)``."""
    n = h.n
    return [defining_minor(choice, i, j, n, registry)
            for j in range(1, n + 1) for i in range(h(j) + 1, n + 1)]


def z_variables(n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> List[int]:
    return [registry.z_id(i, j) for i in range(2, n + 1) for j in range(1, i)]


def xq_variables(n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> List[int]:
    return ([registry.x_id(k) for k in range(1, n + 1)]
            + [registry.q_id(r, s) for r in range(1, n) for s in range(r + 1, n + 1)])
