"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a mapping from monomials to nonzero rational coefficients.
Coefficients are Python ``int`` whenever they are integral and
``fractions.Fraction`` otherwise; both compare and hash consistently, so the
term map is canonical either way.

A monomial is a tuple of ``(variable_id, exponent)`` pairs sorted by id, with
no zero exponents stored; the empty tuple is the unit monomial.  Variable ids
are integers whose natural order is the registry order

    x_1 < x_2 < ... < q_{12} < q_{13} < ... < z_{21} < z_{31} < ... < lam

so sorting by id is sorting by declared variable order.

Every variable carries an even weight (``deg x_i = 2``,
``deg q_rs = 2(s-r+1)``, ``deg z_ij = 2(i-j)``, ``deg lam = 2``) and all
degrees reported here are weighted degrees.
"""

from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Monomial = Tuple[Tuple[int, int], ...]
Coefficient = Union[int, Fraction]
Scalar = Union[int, Fraction]

_KIND_BASE = {"x": 0, "q": 1_000_000, "z": 2_000_000, "lambda": 3_000_000}
_INDEX_LIMIT = 1000

KIND_X = "x"
KIND_Q = "q"
KIND_Z = "z"
KIND_LAMBDA = "lambda"


class RegistryMismatch(ValueError):
    """Operands were built over different variable registries."""


class ParseError(ValueError):
    """Malformed polynomial text.  ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.text = text


class VarRegistry:
    """The graded variable universe: ``x_i``, ``q_rs``, ``z_ij`` and ``lam``.

    Ids are computed from (kind, indices), so the registry never has to be
    populated in advance.  ``n_max`` optionally bounds the indices.
    """

    def __init__(self, n_max: Optional[int] = None):
        if n_max is not None and not 1 <= n_max < _INDEX_LIMIT:
            raise ValueError(f"n_max must lie in [1, {_INDEX_LIMIT - 1}]")
        self.n_max = n_max
        self._degree_cache: Dict[int, int] = {}

    def __repr__(self) -> str:
        return f"VarRegistry(n_max={self.n_max})"

    def _check_index(self, *idx: int) -> None:
        top = self.n_max if self.n_max is not None else _INDEX_LIMIT - 1
        for k in idx:
            if not 1 <= k <= top:
                raise ValueError(f"variable index {k} outside [1, {top}]")

    def x_id(self, i: int) -> int:
        self._check_index(i)
        return i

    def q_id(self, r: int, s: int) -> int:
        self._check_index(r, s)
        if not r < s:
            raise ValueError(f"q_{{{r}{s}}} needs r < s")
        return _KIND_BASE["q"] + r * _INDEX_LIMIT + s

    def z_id(self, i: int, j: int) -> int:
        self._check_index(i, j)
        if not j < i:
            raise ValueError(f"z_{{{i}{j}}} needs j < i")
        return _KIND_BASE["z"] + i * _INDEX_LIMIT + j

    def lam_id(self) -> int:
        return _KIND_BASE["lambda"]

    @staticmethod
    def kind(vid: int) -> str:
        if vid < _KIND_BASE["q"]:
            return KIND_X
        if vid < _KIND_BASE["z"]:
            return KIND_Q
        if vid < _KIND_BASE["lambda"]:
            return KIND_Z
        return KIND_LAMBDA

    @staticmethod
    def indices(vid: int) -> Tuple[int, ...]:
        kind = VarRegistry.kind(vid)
        if kind == KIND_X:
            return (vid,)
        if kind == KIND_LAMBDA:
            return ()
        rest = vid - _KIND_BASE[kind]
        return divmod(rest, _INDEX_LIMIT)

    def degree(self, vid: int) -> int:
        deg = self._degree_cache.get(vid)
        if deg is None:
            kind = self.kind(vid)
            if kind == KIND_X or kind == KIND_LAMBDA:
                deg = 2
            elif kind == KIND_Q:
                r, s = self.indices(vid)
                deg = 2 * (s - r + 1)
            else:
                i, j = self.indices(vid)
                deg = 2 * (i - j)
            self._degree_cache[vid] = deg
        return deg

    def name(self, vid: int) -> str:
        kind = self.kind(vid)
        idx = self.indices(vid)
        if kind == KIND_X:
            return f"x{idx[0]}"
        if kind == KIND_Q:
            return f"q{idx[0]}_{idx[1]}"
        if kind == KIND_Z:
            return f"z{idx[0]}_{idx[1]}"
        return "lam"

    _NAME_RE = re.compile(r"^(?:x(\d+)|q(\d+)_(\d+)|z(\d+)_(\d+)|lam)$")

    def id_of(self, name: str) -> int:
        m = self._NAME_RE.match(name)
        if m is None:
            raise ValueError(f"unknown variable name {name!r}")
        if m.group(1):
            return self.x_id(int(m.group(1)))
        if m.group(2):
            return self.q_id(int(m.group(2)), int(m.group(3)))
        if m.group(4):
            return self.z_id(int(m.group(4)), int(m.group(5)))
        return self.lam_id()

    def entries(self, vids: Iterable[int]) -> list:
        """Registry rows ``(id, kind, indices, degree)`` for the given ids, in order."""
        return [(v, self.kind(v), self.indices(v), self.degree(v)) for v in sorted(set(vids))]


DEFAULT_REGISTRY = VarRegistry()


# -- monomials ---------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k == 0:
        return ()
    return tuple((v, e * k) for v, e in a)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    db = dict(b)
    return all(db.get(v, 0) >= e for v, e in a)


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """``b / a``; the caller guarantees divisibility."""
    d = dict(b)
    for v, e in a:
        left = d[v] - e
        if left:
            d[v] = left
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial, registry: VarRegistry = DEFAULT_REGISTRY) -> int:
    deg = registry.degree
    return sum(e * deg(v) for v, e in m)


def grevlex_key(m: Monomial, registry: VarRegistry = DEFAULT_REGISTRY) -> tuple:
    """Sort key, larger key = larger monomial, weighted graded reverse lex."""
    return (mono_degree(m, registry), tuple((-v, -e) for v, e in reversed(m)))


def grlex_key(m: Monomial, registry: VarRegistry = DEFAULT_REGISTRY) -> tuple:
    """Sort key, larger key = larger monomial, weighted graded lex."""
    return (mono_degree(m, registry), tuple((-v, e) for v, e in m))


def _normalize(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _as_scalar(c) -> Optional[Coefficient]:
    if isinstance(c, bool):
        return None
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _normalize(c)
    return None


# -- polynomials -------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "registry", "_hash")

    def __init__(
        self,
        terms: Optional[Mapping[Monomial, Scalar]] = None,
        registry: VarRegistry = DEFAULT_REGISTRY,
    ):
        clean: Dict[Monomial, Coefficient] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = _normalize(c)
        self._terms = clean
        self.registry = registry
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coefficient], registry: VarRegistry) -> "Polynomial":
        # terms must already be clean (no zeros)
        p = cls.__new__(cls)
        p._terms = terms
        p.registry = registry
        p._hash = None
        return p

    # constructors
    @classmethod
    def constant(cls, c: Scalar, registry: VarRegistry = DEFAULT_REGISTRY) -> "Polynomial":
        return cls({(): c}, registry)

    @classmethod
    def zero(cls, registry: VarRegistry = DEFAULT_REGISTRY) -> "Polynomial":
        return cls._raw({}, registry)

    @classmethod
    def one(cls, registry: VarRegistry = DEFAULT_REGISTRY) -> "Polynomial":
        return cls._raw({(): 1}, registry)

    @classmethod
    def variable(cls, vid: int, registry: VarRegistry = DEFAULT_REGISTRY) -> "Polynomial":
        return cls._raw({((vid, 1),): 1}, registry)

    @classmethod
    def from_name(cls, name: str, registry: VarRegistry = DEFAULT_REGISTRY) -> "Polynomial":
        return cls.variable(registry.id_of(name), registry)

    # read access
    @property
    def terms(self) -> Mapping[Monomial, Coefficient]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Monomial) -> Coefficient:
        return self._terms.get(m, 0)

    def constant_term(self) -> Coefficient:
        return self._terms.get((), 0)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def variables(self) -> frozenset:
        return frozenset(v for m in self._terms for v, _ in m)

    def degree(self) -> int:
        """Largest weighted degree of a term; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(mono_degree(m, self.registry) for m in self._terms)

    def homogeneous_degree(self) -> Optional[int]:
        """The common weighted degree of all terms, or None if there is none.

        The zero polynomial has no well-defined degree and returns None.
        """
        degs = {mono_degree(m, self.registry) for m in self._terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree() is not None

    def homogeneous_parts(self) -> Dict[int, "Polynomial"]:
        parts: Dict[int, Dict[Monomial, Coefficient]] = {}
        for m, c in self._terms.items():
            parts.setdefault(mono_degree(m, self.registry), {})[m] = c
        return {d: Polynomial._raw(t, self.registry) for d, t in sorted(parts.items())}

    def sorted_terms(self, key=None) -> list:
        """Terms in descending order (weighted grevlex unless ``key`` is given)."""
        reg = self.registry
        if key is None:
            def key(m):
                return grevlex_key(m, reg)
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, key=None) -> Tuple[Monomial, Coefficient]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms(key)[0]

    # equality / hashing
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        if c == 0:
            return not self._terms
        return self._terms == {(): c}

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # arithmetic
    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other.registry is not self.registry:
                raise RegistryMismatch("polynomials belong to different registries")
            return other
        c = _as_scalar(other)
        if c is None:
            return None
        return Polynomial._raw({(): c} if c else {}, self.registry)

    def __add__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        out = dict(self._terms)
        for m, c in o._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _normalize(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.registry)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.registry)

    def __sub__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c: Scalar) -> "Polynomial":
        c = _normalize(c) if isinstance(c, Fraction) else c
        if not c:
            return Polynomial._raw({}, self.registry)
        if c == 1:
            return self
        return Polynomial._raw(
            {m: _normalize(v * c) for m, v in self._terms.items()}, self.registry
        )

    def __mul__(self, other) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._terms, o._terms
        if not a or not b:
            return Polynomial._raw({}, self.registry)
        if len(b) == 1 and () in b:
            return self.scale(b[()])
        if len(a) == 1 and () in a:
            return o.scale(a[()])
        out: Dict[Monomial, Coefficient] = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return Polynomial({m: c for m, c in out.items() if c}, self.registry)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.registry)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other) -> "Polynomial":
        c = _as_scalar(other)
        if c is not None:
            if c == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale(Fraction(1) / c)
        if isinstance(other, Polynomial):
            return self.exact_div(other)
        return NotImplemented

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise."""
        d = self._coerce(divisor)
        if not d._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        reg = self.registry
        key = lambda m: grevlex_key(m, reg)
        lead_m, lead_c = max(d._terms.items(), key=lambda t: key(t[0]))
        inv = Fraction(1) / lead_c if lead_c not in (1, -1) else lead_c
        rest = dict(self._terms)
        quotient: Dict[Monomial, Coefficient] = {}
        while rest:
            m = max(rest, key=key)
            if not mono_divides(lead_m, m):
                raise ArithmeticError("polynomial division is not exact")
            c = _normalize(rest[m] * inv)
            qm = mono_div(m, lead_m)
            quotient[qm] = c
            for dm, dc in d._terms.items():
                t = mono_mul(dm, qm)
                v = rest.get(t, 0) - c * dc
                if v:
                    rest[t] = _normalize(v)
                else:
                    rest.pop(t, None)
        return Polynomial._raw(quotient, reg)

    # substitution
    def substitute(self, assignment: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Simultaneous substitution ``v -> assignment[v]``; others pass through."""
        if not assignment:
            return self
        for val in assignment.values():
            if isinstance(val, Polynomial) and val.registry is not self.registry:
                raise RegistryMismatch("substitution value from a different registry")
        zero_vars = {v for v, val in assignment.items() if val == 0}
        powers: Dict[Tuple[int, int], Polynomial] = {}
        out = Polynomial._raw({}, self.registry)
        acc: Dict[Monomial, Coefficient] = {}
        for m, c in self._terms.items():
            if any(v in zero_vars for v, _ in m):
                continue
            kept = tuple((v, e) for v, e in m if v not in assignment)
            subs = [(v, e) for v, e in m if v in assignment]
            if not subs:
                acc[kept] = acc.get(kept, 0) + c
                continue
            piece = Polynomial._raw({kept: c}, self.registry)
            for v, e in subs:
                pw = powers.get((v, e))
                if pw is None:
                    val = assignment[v]
                    if not isinstance(val, Polynomial):
                        val = Polynomial.constant(val, self.registry)
                    pw = val ** e
                    powers[(v, e)] = pw
                piece = piece * pw
            out = out + piece
        return out + Polynomial({m: c for m, c in acc.items() if c}, self.registry)

    def drop_terms_with(self, vids: Iterable[int]) -> "Polynomial":
        """Substitute 0 for every variable in ``vids``."""
        vs = set(vids)
        return Polynomial._raw(
            {m: c for m, c in self._terms.items() if not any(v in vs for v, _ in m)},
            self.registry,
        )

    def rename(self, mapping: Mapping[int, int]) -> "Polynomial":
        """Apply a variable permutation/renaming (must be injective on used ids)."""
        out: Dict[Monomial, Coefficient] = {}
        for m, c in self._terms.items():
            nm = tuple(sorted((mapping.get(v, v), e) for v, e in m))
            out[nm] = out.get(nm, 0) + c
        return Polynomial({m: c for m, c in out.items() if c}, self.registry)

    def coefficient_in(self, vid: int, k: int) -> "Polynomial":
        """Coefficient of ``v^k`` when viewing self as a polynomial in ``v``."""
        out: Dict[Monomial, Coefficient] = {}
        for m, c in self._terms.items():
            e = dict(m).get(vid, 0)
            if e == k:
                out[tuple((v, x) for v, x in m if v != vid)] = c
        return Polynomial._raw(out, self.registry)

    def evaluate(self, values: Mapping[int, Scalar]) -> Coefficient:
        total: Coefficient = 0
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                t = t * values[v] ** e
            total += t
        return _normalize(total) if isinstance(total, Fraction) else total

    # text
    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"Polynomial({serialize(self)!r})"


def x(i: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    return Polynomial.variable(registry.x_id(i), registry)


def q(r: int, s: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    return Polynomial.variable(registry.q_id(r, s), registry)


def z(i: int, j: int, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    return Polynomial.variable(registry.z_id(i, j), registry)


def lam(registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    return Polynomial.variable(registry.lam_id(), registry)


def const(c: Scalar, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    return Polynomial.constant(c, registry)


def poly_sum(items: Iterable[Polynomial], registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    acc: Dict[Monomial, Coefficient] = {}
    for p in items:
        if p.registry is not registry:
            raise RegistryMismatch("polynomials belong to different registries")
        for m, c in p.items():
            acc[m] = acc.get(m, 0) + c
    return Polynomial({m: c for m, c in acc.items() if c}, registry)


def poly_prod(items: Iterable[Polynomial], registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    out = Polynomial.one(registry)
    for p in items:
        out = out * p
    return out


def poly_arith(op: str, a: Polynomial, b) -> Polynomial:
    """Dispatch ``add``/``sub``/``mul``/``neg``/``pow`` by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown operation {op!r}")


# -- matrices ----------------------------------------------------------------

class PolyMatrix:
    """Square matrix of polynomials over one registry."""

    __slots__ = ("rows", "order", "registry")

    def __init__(self, rows: Sequence[Sequence], registry: VarRegistry = DEFAULT_REGISTRY):
        n = len(rows)
        if n == 0:
            raise ValueError("matrix order must be positive")
        conv = []
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            r = []
            for e in row:
                if isinstance(e, Polynomial):
                    if e.registry is not registry:
                        raise RegistryMismatch("matrix entry from a different registry")
                    r.append(e)
                else:
                    r.append(Polynomial.constant(e, registry))
            conv.append(tuple(r))
        self.rows = tuple(conv)
        self.order = n
        self.registry = registry

    @classmethod
    def from_function(cls, n: int, fn, registry: VarRegistry = DEFAULT_REGISTRY) -> "PolyMatrix":
        """Build from ``fn(i, j)`` with 1-based indices."""
        return cls([[fn(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)], registry)

    @classmethod
    def identity(cls, n: int, registry: VarRegistry = DEFAULT_REGISTRY) -> "PolyMatrix":
        return cls.from_function(n, lambda i, j: 1 if i == j else 0, registry)

    def __getitem__(self, ij: Tuple[int, int]) -> Polynomial:
        """0-based ``(row, column)`` access."""
        i, j = ij
        return self.rows[i][j]

    def entry(self, i: int, j: int) -> Polynomial:
        """1-based access, matching the usual matrix notation."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "PolyMatrix([" + ", ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.rows) + "])"

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        n = self.order
        return PolyMatrix([[self.rows[i][j] + other.rows[i][j] for j in range(n)]
                           for i in range(n)], self.registry)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        n = self.order
        return PolyMatrix([[self.rows[i][j] - other.rows[i][j] for j in range(n)]
                           for i in range(n)], self.registry)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.order != self.order:
            raise ValueError("order mismatch")
        n = self.order
        reg = self.registry
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                row.append(poly_sum(
                    (self.rows[i][k] * other.rows[k][j] for k in range(n)
                     if self.rows[i][k] and other.rows[k][j]), reg))
            out.append(row)
        return PolyMatrix(out, reg)

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix([[e * c for e in row] for row in self.rows], self.registry)

    def transpose(self) -> "PolyMatrix":
        n = self.order
        return PolyMatrix([[self.rows[j][i] for j in range(n)] for i in range(n)], self.registry)

    def with_column(self, j: int, column: Sequence[Polynomial]) -> "PolyMatrix":
        """Copy with 0-based column ``j`` replaced."""
        return PolyMatrix([[column[i] if c == j else e for c, e in enumerate(row)]
                           for i, row in enumerate(self.rows)], self.registry)

    def column(self, j: int) -> Tuple[Polynomial, ...]:
        return tuple(row[j] for row in self.rows)

    def minor(self, i: int, j: int) -> "PolyMatrix":
        """Delete 0-based row ``i`` and column ``j``."""
        return PolyMatrix([[e for c, e in enumerate(row) if c != j]
                           for r, row in enumerate(self.rows) if r != i], self.registry)

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in row] for row in self.rows], self.registry)

    def det(self, method: str = "cofactor") -> Polynomial:
        return determinant(self, method)


def _det_cofactor(m: PolyMatrix) -> Polynomial:
    # Laplace expansion down the rows, memoized on the set of unused columns.
    n = m.order
    rows = m.rows
    reg = m.registry
    memo: Dict[int, Polynomial] = {}
    full = (1 << n) - 1

    def rec(mask: int) -> Polynomial:
        # rows already used = n - popcount(mask); expand the next one
        if mask == 0:
            return Polynomial.one(reg)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        r = n - bin(mask).count("1")
        acc = []
        sign = 1
        for c in range(n):
            if not mask >> c & 1:
                continue
            e = rows[r][c]
            if e:
                sub = rec(mask & ~(1 << c))
                if sub:
                    t = e * sub
                    acc.append(t if sign > 0 else -t)
            sign = -sign
        res = poly_sum(acc, reg)
        memo[mask] = res
        return res

    return rec(full)


def _det_bareiss(m: PolyMatrix) -> Polynomial:
    n = m.order
    reg = m.registry
    a = [list(row) for row in m.rows]
    sign = 1
    prev = Polynomial.one(reg)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Polynomial.zero(reg)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if not prev.is_constant() else num / prev.constant_term()
            a[i][k] = Polynomial.zero(reg)
        prev = piv
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def determinant(m: PolyMatrix, method: str = "cofactor") -> Polynomial:
    """Exact determinant by memoized cofactor expansion or fraction-free elimination."""
    if method == "cofactor":
        return _det_cofactor(m)
    if method == "bareiss":
        return _det_bareiss(m)
    raise ValueError(f"unknown determinant method {method!r}")


def cofactor_expansion_row(m: PolyMatrix, i: int) -> list:
    """``[(entry, signed cofactor), ...]`` along 0-based row ``i``.

    ``sum(e * c for e, c in result) == det(m)``.
    """
    n = m.order
    out = []
    for j in range(n):
        if n == 1:
            cof = Polynomial.one(m.registry)
        else:
            cof = _det_cofactor(m.minor(i, j))
        if (i + j) % 2:
            cof = -cof
        out.append((m.rows[i][j], cof))
    return out


# -- text and JSON -------------------------------------------------------------

def _coef_text(c: Coefficient) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _mono_text(m: Monomial, registry: VarRegistry) -> str:
    parts = []
    for v, e in m:
        name = registry.name(v)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def serialize(p: Polynomial) -> str:
    """Canonical text: terms in descending weighted grevlex order."""
    if not p:
        return "0"
    pieces = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        mag = -c if neg else c
        mt = _mono_text(m, p.registry)
        if not mt:
            body = _coef_text(mag)
        elif mag == 1:
            body = mt
        else:
            body = f"{_coef_text(mag)}*{mt}"
        if idx == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>x\d+|q\d+_\d+|z\d+_\d+|lam)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastgroup)
        toks.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
        # identifiers must not run straight into letters ("x1y")
        if m.lastgroup == "var" and pos < n and (text[pos].isalnum() or text[pos] == "_"):
            raise ParseError(f"malformed variable near {text[start:pos + 1]!r}", start, text)
    return toks


def parse(text: str, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    """Parse the canonical text form (and any reordering of it)."""
    toks = _tokenize(text)
    pos = 0
    end = len(text)

    def peek():
        return toks[pos] if pos < len(toks) else (None, None, end)

    def take(kind=None, value=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None:
            raise ParseError("unexpected end of input", end, text)
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2], text)
        pos += 1
        return tok

    def atom() -> Polynomial:
        kind, val, at = peek()
        if kind == "num":
            take()
            num = int(val)
            if peek()[1] == "/":
                take()
                den_kind, den, den_at = take("num")
                if int(den) == 0:
                    raise ParseError("zero denominator", den_at, text)
                return Polynomial.constant(Fraction(num, int(den)), registry)
            return Polynomial.constant(num, registry)
        if kind == "var":
            take()
            try:
                return Polynomial.variable(registry.id_of(val), registry)
            except ValueError as exc:
                raise ParseError(str(exc), at, text) from None
        if val == "(":
            take()
            inner = expr()
            if peek()[1] != ")":
                raise ParseError("missing ')'", peek()[2], text)
            take()
            return inner
        if kind is None:
            raise ParseError("unexpected end of input", end, text)
        raise ParseError(f"unexpected token {val!r}", at, text)

    def power() -> Polynomial:
        base = atom()
        if peek()[1] == "^":
            take()
            base = base ** int(take("num")[1])
        return base

    def term() -> Polynomial:
        acc = power()
        while peek()[1] == "*":
            take()
            acc = acc * power()
        return acc

    def expr() -> Polynomial:
        negate = False
        if peek()[1] in ("-", "+"):
            negate = take()[1] == "-"
        acc = term()
        if negate:
            acc = -acc
        while peek()[1] in ("+", "-"):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    if not toks:
        raise ParseError("empty input", 0, text)
    result = expr()
    kind, val, at = peek()
    if kind is not None:
        raise ParseError(f"unexpected token {val!r}", at, text)
    return result


def to_json(p: Polynomial) -> dict:
    reg = p.registry
    return {
        "vars": [reg.name(v) for v in sorted(p.variables())],
        "terms": [
            {"coef": _coef_text(c), "exps": {reg.name(v): e for v, e in m}}
            for m, c in p.sorted_terms()
        ],
    }


def from_json(obj: Mapping, registry: VarRegistry = DEFAULT_REGISTRY) -> Polynomial:
    acc: Dict[Monomial, Coefficient] = {}
    for t in obj["terms"]:
        c = Fraction(t["coef"])
        m = tuple(sorted((registry.id_of(name), int(e)) for name, e in t["exps"].items() if e))
        acc[m] = acc.get(m, 0) + c
    return Polynomial({m: c for m, c in acc.items() if c}, registry)
