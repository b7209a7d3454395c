"""Gröbner bases, normal forms and Hilbert series over the rationals.

Internally every polynomial is a dict from dense exponent tuples (over the
ring's variables, sorted by id) to ``Fraction`` coefficients.  The engine
stays deliberately small: Buchberger's algorithm with the normal selection
strategy and Gebauer-Moeller pair pruning (product and chain criteria).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .poly import DEFAULT_REGISTRY, Polynomial, RegistryMismatch, VarRegistry

Exps = Tuple[int, ...]
Dense = Dict[Exps, Fraction]

GREVLEX = "graded_reverse_lex"
GRLEX = "graded_lex"
_ALIASES = {"grevlex": GREVLEX, "grlex": GRLEX, GREVLEX: GREVLEX, GRLEX: GRLEX}


class BudgetExceeded(RuntimeError):
    """Buchberger's algorithm hit its pair or basis-size limit."""


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = GREVLEX
    weighted: bool = True

    def __post_init__(self):
        if self.kind not in _ALIASES:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "kind", _ALIASES[self.kind])

    @classmethod
    def parse(cls, name: str) -> "MonomialOrder":
        return cls(name)


DEFAULT_ORDER = MonomialOrder()


class _Ring:
    """Variables, weights and the heap key for one computation."""

    def __init__(self, variables: Sequence[int], order: MonomialOrder, registry: VarRegistry):
        self.variables = tuple(sorted(set(variables)))
        self.pos = {v: k for k, v in enumerate(self.variables)}
        self.order = order
        self.registry = registry
        self.weights = tuple(registry.degree(v) if order.weighted else 1 for v in self.variables)
        w = self.weights
        if order.kind == GREVLEX:
            # smaller key = larger monomial, for use with heapq
            def key(a: Exps):
                return (-sum(e * d for e, d in zip(a, w)), a[::-1])
        else:
            def key(a: Exps):
                return (-sum(e * d for e, d in zip(a, w)), tuple(-e for e in a))
        self.key = key

    def degree(self, a: Exps) -> int:
        return sum(e * d for e, d in zip(a, self.weights))

    def to_dense(self, p: Polynomial) -> Dense:
        n = len(self.variables)
        out: Dense = {}
        for mono, c in p.items():
            a = [0] * n
            for v, e in mono:
                try:
                    a[self.pos[v]] = e
                except KeyError:
                    raise ValueError(
                        f"variable {self.registry.name(v)} is not in the ring") from None
            out[tuple(a)] = Fraction(c)
        return out

    def to_poly(self, d: Dense) -> Polynomial:
        vs = self.variables
        return Polynomial(
            {tuple((vs[k], e) for k, e in enumerate(a) if e): c for a, c in d.items()},
            self.registry,
        )

    def lead(self, d: Dense) -> Exps:
        return min(d, key=self.key)


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exps, b: Exps) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Poly:
    """A basis member: lead exponent, lead-first sorted terms, monic."""

    __slots__ = ("lead", "terms")

    def __init__(self, lead: Exps, terms: List[Tuple[Exps, Fraction]]):
        self.lead = lead
        self.terms = terms


def _monic(ring: _Ring, d: Dense) -> _Poly:
    items = sorted(d.items(), key=lambda t: ring.key(t[0]))
    inv = 1 / items[0][1]
    return _Poly(items[0][0], [(a, c * inv) for a, c in items])


def _reduce(ring: _Ring, f: Dense, basis: Sequence[_Poly], full: bool = True) -> Dense:
    """Remainder of ``f`` modulo ``basis`` (tail-reduced when ``full``)."""
    key = ring.key
    f = dict(f)
    heap = [(key(a), a) for a in f]
    heapq.heapify(heap)
    rest: Dense = {}
    while heap:
        _, a = heapq.heappop(heap)
        c = f.pop(a, None)
        if not c:
            continue
        g = None
        for cand in basis:
            if _divides(cand.lead, a):
                g = cand
                break
        if g is None:
            rest[a] = c
            if not full:
                # lead is irreducible: keep the rest unreduced
                for _, b in heap:
                    cb = f.pop(b, None)
                    if cb:
                        rest[b] = cb
                return rest
            continue
        shift = tuple(x - y for x, y in zip(a, g.lead))
        for b, cb in g.terms[1:]:
            t = tuple(x + y for x, y in zip(b, shift))
            old = f.get(t)
            if old is None:
                f[t] = -c * cb
                heapq.heappush(heap, (key(t), t))
            else:
                nv = old - c * cb
                if nv:
                    f[t] = nv
                else:
                    # keep a zero placeholder so the stale heap entry is skipped
                    f[t] = 0
    return rest


def _spoly(ring: _Ring, f: _Poly, g: _Poly) -> Dense:
    m = _lcm(f.lead, g.lead)
    sf = tuple(x - y for x, y in zip(m, f.lead))
    sg = tuple(x - y for x, y in zip(m, g.lead))
    out: Dense = {}
    for a, c in f.terms[1:]:
        t = tuple(x + y for x, y in zip(a, sf))
        out[t] = out.get(t, 0) + c
    for a, c in g.terms[1:]:
        t = tuple(x + y for x, y in zip(a, sg))
        nv = out.get(t, 0) - c
        if nv:
            out[t] = nv
        else:
            out.pop(t, None)
    return {a: c for a, c in out.items() if c}


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Gröbner basis together with its ring and order."""

    generators: Tuple[Polynomial, ...]
    order: MonomialOrder
    variables: Tuple[int, ...]
    registry: VarRegistry = field(default=DEFAULT_REGISTRY, compare=False)
    stats: Dict[str, int] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        ring = _Ring(self.variables, self.order, self.registry)
        basis = []
        for g in self.generators:
            d = ring.to_dense(g)
            if d:
                basis.append(_monic(ring, d))
        object.__setattr__(self, "_ring", ring)
        object.__setattr__(self, "_basis", tuple(basis))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def leading_exponents(self) -> List[Exps]:
        return [g.lead for g in self._basis]

    def leading_monomials(self) -> List[Polynomial]:
        return [self._ring.to_poly({g.lead: Fraction(1)}) for g in self._basis]

    def is_unit_ideal(self) -> bool:
        return any(not any(g.lead) for g in self._basis)

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return not normal_form(p, self)


def _ring_variables(gens: Iterable[Polynomial], extra: Optional[Iterable[int]]) -> Tuple[int, ...]:
    vs = set()
    for g in gens:
        vs |= g.variables()
    if extra is not None:
        vs |= set(extra)
    return tuple(sorted(vs))


def _common_registry(gens: Sequence[Polynomial]) -> VarRegistry:
    reg = gens[0].registry
    for g in gens[1:]:
        if g.registry is not reg:
            raise RegistryMismatch("generators belong to different registries")
    return reg


def buchberger(
    gens: Sequence[Polynomial],
    order: Union[MonomialOrder, str] = DEFAULT_ORDER,
    variables: Optional[Iterable[int]] = None,
    max_pairs: int = 200_000,
    max_basis: int = 5_000,
    registry: Optional[VarRegistry] = None,
) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    ``variables`` adds ring variables that may not occur in ``gens`` (this
    matters for quotient dimensions and Hilbert series).  An empty ``gens``
    is the zero ideal and needs ``variables``.  Exceeding either budget
    raises ``BudgetExceeded``.
    """
    if isinstance(order, str):
        order = MonomialOrder(order)
    gens = list(gens)
    if not gens and variables is None:
        raise ValueError("need generators or an explicit variable list")
    reg = _common_registry(gens) if gens else (registry or DEFAULT_REGISTRY)
    ring = _Ring(_ring_variables(gens, variables), order, reg)

    basis: List[_Poly] = []
    live: List[bool] = []
    pairs: List[tuple] = []  # heap of (key(lcm), serial, i, j, lcm)
    serial = 0
    processed = 0

    def add(h: _Poly) -> None:
        nonlocal serial, pairs
        t = len(basis)
        candidates = [(i, _lcm(basis[i].lead, h.lead)) for i in range(t) if live[i]]
        # chain criterion among the new pairs (Gebauer-Moeller M and F)
        kept: List[Tuple[int, Exps]] = []
        by_lcm: Dict[Exps, int] = {}
        for i, m in candidates:
            if any(m2 != m and _divides(m2, m) for _, m2 in candidates):
                continue
            if m in by_lcm:
                # prefer a coprime representative so the whole class can be dropped
                if _coprime(basis[i].lead, h.lead):
                    by_lcm[m] = i
                continue
            by_lcm[m] = i
        for m, i in by_lcm.items():
            if not _coprime(basis[i].lead, h.lead):
                kept.append((i, m))
        # chain criterion applied to the existing pairs (criterion B)
        survivors = []
        for entry in pairs:
            _, _, i, j, m = entry
            if (_divides(h.lead, m)
                    and _lcm(basis[i].lead, h.lead) != m
                    and _lcm(basis[j].lead, h.lead) != m):
                continue
            survivors.append(entry)
        if len(survivors) != len(pairs):
            heapq.heapify(survivors)
            pairs = survivors
        for i, m in kept:
            serial += 1
            heapq.heappush(pairs, (ring.key(m), serial, i, t, m))
        # members whose lead is a multiple of the new lead are redundant for the basis
        for i in range(t):
            if live[i] and _divides(h.lead, basis[i].lead):
                live[i] = False
        basis.append(h)
        live.append(True)
        if len(basis) > max_basis:
            raise BudgetExceeded(f"basis grew past {max_basis} elements")

    initial = [ring.to_dense(g) for g in gens]
    initial = [d for d in initial if d]
    if not initial:
        return GroebnerBasis((), order, ring.variables, reg, {"pairs": 0, "basis": 0})
    initial.sort(key=lambda d: ring.key(ring.lead(d)), reverse=True)
    for d in initial:
        r = _reduce(ring, d, basis)
        if r:
            add(_monic(ring, r))

    while pairs:
        _, _, i, j, _ = heapq.heappop(pairs)
        processed += 1
        if processed > max_pairs:
            raise BudgetExceeded(f"processed more than {max_pairs} critical pairs")
        s = _spoly(ring, basis[i], basis[j])
        if not s:
            continue
        r = _reduce(ring, s, basis)
        if r:
            h = _monic(ring, r)
            if not any(h.lead):
                basis.append(h)
                live.append(True)
                live[:-1] = [False] * (len(live) - 1)
                break
            add(h)

    return _reduced_basis(ring, [b for b, ok in zip(basis, live) if ok],
                          order, {"pairs": processed, "basis": len(basis)})


def _reduced_basis(ring: _Ring, basis: List[_Poly], order: MonomialOrder, stats) -> GroebnerBasis:
    # minimal: drop members whose lead is divisible by another lead
    minimal: List[_Poly] = []
    for k, g in enumerate(basis):
        if any(_divides(h.lead, g.lead) and (h.lead != g.lead or m < k)
               for m, h in enumerate(basis) if m != k):
            continue
        minimal.append(g)
    reduced: List[_Poly] = []
    for k, g in enumerate(minimal):
        others = [h for m, h in enumerate(minimal) if m != k]
        tail = _reduce(ring, dict(g.terms[1:]), others)
        tail[g.lead] = Fraction(1)
        reduced.append(_monic(ring, tail))
    reduced.sort(key=lambda g: ring.key(g.lead))
    gens = tuple(ring.to_poly(dict(g.terms)) for g in reduced)
    stats = dict(stats, reduced=len(gens))
    return GroebnerBasis(gens, order, ring.variables, ring.registry, stats)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``p`` modulo ``gb``; zero iff ``p`` is in the ideal."""
    if p.registry is not gb.registry:
        raise RegistryMismatch("polynomial and basis belong to different registries")
    extra = p.variables() - set(gb.variables)
    ring = gb._ring
    if extra:
        # an enlarged ring: basis leads keep zero exponents in the new variables
        ring = _Ring(tuple(gb.variables) + tuple(extra), gb.order, gb.registry)
        basis = [_monic(ring, ring.to_dense(g)) for g in gb.generators]
    else:
        basis = list(gb._basis)
    return ring.to_poly(_reduce(ring, ring.to_dense(p), basis))


def ideal_membership(p: Polynomial, gb: GroebnerBasis) -> bool:
    return not normal_form(p, gb)


def ideal_equal(
    a: Sequence[Polynomial],
    b: Sequence[Polynomial],
    order: Union[MonomialOrder, str] = DEFAULT_ORDER,
    **budget,
) -> bool:
    """Whether ``a`` and ``b`` generate the same ideal (double inclusion)."""
    gb_b = buchberger(b, order, **budget)
    if any(normal_form(p, gb_b) for p in a):
        return False
    gb_a = buchberger(a, order, **budget)
    return not any(normal_form(p, gb_a) for p in b)


# -- standard monomials --------------------------------------------------------

INFINITE = math.inf


def _pure_power_bounds(gb: GroebnerBasis) -> Optional[List[int]]:
    n = len(gb.variables)
    bounds: List[Optional[int]] = [None] * n
    for a in gb.leading_exponents():
        support = [k for k, e in enumerate(a) if e]
        if len(support) == 1:
            k = support[0]
            if bounds[k] is None or a[k] < bounds[k]:
                bounds[k] = a[k]
    if any(b is None for b in bounds):
        return None
    return bounds  # type: ignore[return-value]


def standard_monomials(gb: GroebnerBasis, degree_bound: Optional[int] = None) -> List[Exps]:
    """Exponents outside the leading ideal (all of them, or up to a weighted degree)."""
    leads = gb.leading_exponents()
    if any(not any(a) for a in leads):
        return []
    n = len(gb.variables)
    weights = gb._ring.weights
    bounds = _pure_power_bounds(gb)
    if bounds is None and degree_bound is None:
        raise ValueError("the quotient is infinite-dimensional; give a degree bound")
    out: List[Exps] = []
    cur = [0] * n

    def rec(k: int, deg: int):
        if k == n:
            t = tuple(cur)
            if not any(_divides(a, t) for a in leads):
                out.append(t)
            return
        e = 0
        while True:
            if bounds is not None and e >= bounds[k]:
                break
            if degree_bound is not None and deg + e * weights[k] > degree_bound:
                break
            cur[k] = e
            # prune: once the partial monomial is divisible by a lead, so are its extensions
            partial = tuple(cur[:k + 1]) + (0,) * (n - k - 1)
            if any(_divides(a, partial) for a in leads):
                break
            rec(k + 1, deg + e * weights[k])
            e += 1
        cur[k] = 0

    rec(0, 0)
    return out


def quotient_dimension(gb: GroebnerBasis) -> Union[int, float]:
    """Number of standard monomials, or ``math.inf``."""
    if gb.is_unit_ideal():
        return 0
    if _pure_power_bounds(gb) is None:
        return INFINITE
    return len(standard_monomials(gb))


@dataclass(frozen=True)
class HilbertSeries:
    """Graded dimensions ``coefficients[d] = dim (R/I)_d`` for ``d <= degree_bound``.

    Degrees are weighted, so with the default grading only even entries are
    nonzero.  ``variable_degrees`` lists the ring's variable weights, whose
    product ``prod (1 - t^w)`` turns the series into its numerator.
    """

    coefficients: Tuple[int, ...]
    variable_degrees: Tuple[int, ...]
    degree_bound: int

    @property
    def denominator_exponent(self) -> int:
        return len(self.variable_degrees)

    def numerator(self) -> Tuple[int, ...]:
        """``series * prod (1 - t^w)`` up to the degree bound."""
        coeffs = list(self.coefficients)
        for w in self.variable_degrees:
            coeffs = [c - (coeffs[d - w] if d >= w else 0) for d, c in enumerate(coeffs)]
        return tuple(coeffs)

    def total(self) -> int:
        return sum(self.coefficients)

    def as_dict(self) -> Dict[int, int]:
        return {d: c for d, c in enumerate(self.coefficients) if c}

    def to_text(self) -> str:
        parts = []
        for d, c in self.as_dict().items():
            mono = "1" if d == 0 else ("t" if d == 1 else f"t^{d}")
            parts.append(mono if c == 1 and d else f"{c}" if d == 0 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "variable_degrees": list(self.variable_degrees),
            "degree_bound": self.degree_bound,
        }


def hilbert_series(gb: GroebnerBasis, degree_bound: int) -> HilbertSeries:
    """Graded dimensions of the quotient by counting standard monomials."""
    coeffs = [0] * (degree_bound + 1)
    ring = gb._ring
    for a in standard_monomials(gb, degree_bound):
        coeffs[ring.degree(a)] += 1
    return HilbertSeries(tuple(coeffs), ring.weights, degree_bound)


def series_product(degrees: Iterable[int], variable_degrees: Iterable[int], degree_bound: int) -> Tuple[int, ...]:
    """Coefficients of ``prod (1 - t^d) / prod (1 - t^w)`` up to ``degree_bound``."""
    coeffs = [0] * (degree_bound + 1)
    coeffs[0] = 1
    for d in degrees:
        coeffs = [c - (coeffs[k - d] if k >= d else 0) for k, c in enumerate(coeffs)]
    for w in variable_degrees:
        for k in range(w, degree_bound + 1):
            coeffs[k] += coeffs[k - w]
    return tuple(coeffs)


def specialize(p: Polynomial, values: Dict[int, Fraction]) -> Polynomial:
    """Substitute rational numbers for some variables."""
    return p.substitute({v: Polynomial.constant(c, p.registry) for v, c in values.items()})
