"""Named verification suites.

Each suite is a generator of ``CheckResult`` values; ``run_suite`` collects
them into a ``VerificationReport``.  Every check compares two exactly
computed objects, and a failing check carries the canonical text of the
difference as its witness.
"""

from __future__ import annotations

import itertools
import math
import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import coordring as cr
from . import fij, hessfn, ideal, quantum, symfun
from .poly import (
    DEFAULT_REGISTRY as REG,
    Polynomial,
    PolyMatrix,
    cofactor_expansion_row,
    from_json,
    parse,
    poly_sum,
    q,
    serialize,
    to_json,
    x,
    z,
)

POLY_DEFAULT_N = 5
GROEBNER_DEFAULT_N = 4
DEFAULT_SEED = 1729


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    params: Dict[str, object]
    passed: bool
    witness: Optional[str] = None

    def to_json(self) -> dict:
        out = {"id": self.check_id, "params": self.params, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _natural_key(text: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", text)]


@dataclass
class VerificationReport:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def sort(self) -> None:
        self.checks.sort(key=lambda c: _natural_key(c.check_id))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "n_checks": len(self.checks),
            "n_failed": len(self.failures),
            "wall_time": round(self.wall_time, 3),
            "checks": [c.to_json() for c in self.checks],
        }

    def to_text(self, verbose: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.suite}: {len(self.checks) - len(self.failures)}/{len(self.checks)}"
                 f" checks in {self.wall_time:.2f}s"]
        for c in self.checks:
            if verbose or not c.passed:
                mark = "ok  " if c.passed else "FAIL"
                line = f"  {mark} {c.check_id}"
                if c.witness is not None:
                    line += f"  witness: {c.witness}"
                lines.append(line)
        return "\n".join(lines)


@dataclass(frozen=True)
class SuiteConfig:
    """Bounds and knobs shared by all suites."""

    n_max: int = POLY_DEFAULT_N
    gb_n_max: int = GROEBNER_DEFAULT_N
    seed: int = DEFAULT_SEED
    order: str = "grevlex"
    degree_bound: Optional[int] = None
    max_pairs: int = 200_000


Suite = Callable[[SuiteConfig], Iterator[CheckResult]]


def _eq(check_id: str, params: dict, lhs: Polynomial, rhs: Polynomial) -> CheckResult:
    if lhs == rhs:
        return CheckResult(check_id, params, True)
    return CheckResult(check_id, params, False, serialize(lhs - rhs))


def _ok(check_id: str, params: dict, cond: bool, witness: Optional[str] = None) -> CheckResult:
    return CheckResult(check_id, params, bool(cond), None if cond else witness)


def _support_ok(p: Polynomial, i: int) -> bool:
    for v in p.variables():
        kind = REG.kind(v)
        idx = REG.indices(v)
        if kind == "x" and idx[0] > i:
            return False
        if kind == "q" and idx[1] > i:
            return False
        if kind in ("z", "lambda"):
            return False
    return True


# -- poly-core -------------------------------------------------------------------

def _random_poly(rng: random.Random, variables: Sequence[Polynomial], max_deg: int = 8) -> Polynomial:
    terms = []
    for _ in range(rng.randint(0, 4)):
        mono = Polynomial.one(REG)
        for v in variables:
            if rng.random() < 0.4:
                mono = mono * v ** rng.randint(1, 2)
            if mono.degree() >= max_deg:
                break
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        terms.append(mono.scale(c))
    return poly_sum(terms, REG)


def _random_homogeneous(rng: random.Random, variables: Sequence[Polynomial], deg: int) -> Polynomial:
    terms = []
    for _ in range(rng.randint(1, 3)):
        mono = Polynomial.one(REG)
        while mono.degree() < deg:
            v = rng.choice(variables)
            if mono.degree() + v.degree() > deg:
                break
            mono = mono * v
        if mono.homogeneous_degree() == deg:
            terms.append(mono.scale(rng.randint(-3, 3)))
    return poly_sum(terms, REG)


def suite_ring_axioms(cfg: SuiteConfig) -> Iterator[CheckResult]:
    rng = random.Random(cfg.seed)
    pool = [x(1), x(2), x(3), q(1, 2), q(2, 3), z(2, 1)]
    for t in range(30):
        vs = rng.sample(pool, rng.randint(1, 6))
        a, b, c = (_random_poly(rng, vs) for _ in range(3))
        p = {"trial": t}
        yield _eq(f"ring-axioms/assoc-add/{t}", p, (a + b) + c, a + (b + c))
        yield _eq(f"ring-axioms/assoc-mul/{t}", p, (a * b) * c, a * (b * c))
        yield _eq(f"ring-axioms/commute/{t}", p, a * b, b * a)
        yield _eq(f"ring-axioms/distribute/{t}", p, a * (b + c), a * b + a * c)
        yield _eq(f"ring-axioms/identity/{t}", p, a + 0, a * 1)
        yield _eq(f"ring-axioms/inverse/{t}", p, a - a, Polynomial.zero(REG))
        yield _eq(f"ring-axioms/text-roundtrip/{t}", p, parse(serialize(a)), a)
        yield _eq(f"ring-axioms/json-roundtrip/{t}", p, from_json(to_json(a)), a)
        ha = _random_homogeneous(rng, vs, 2 * rng.randint(1, 3))
        hb = _random_homogeneous(rng, vs, 2 * rng.randint(1, 3))
        if ha and hb:
            yield _ok(f"ring-axioms/graded-product/{t}", p,
                      (ha * hb).homogeneous_degree() == ha.homogeneous_degree() + hb.homogeneous_degree())
    for t in range(12):
        order = 1 + t % 4
        vs = rng.sample(pool, 3)
        m = PolyMatrix([[_random_poly(rng, vs, 4) for _ in range(order)] for _ in range(order)])
        yield _eq(f"ring-axioms/det-strategies/{t}", {"order": order}, m.det("cofactor"), m.det("bareiss"))
    example = (x(1) + x(2)) * (x(1) * x(2) + q(1, 2))
    yield _ok("ring-axioms/example-graded", {}, example.homogeneous_degree() == 6 and len(example) == 4)


# -- hessfn -------------------------------------------------------------------------

def suite_hessfn(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(1, cfg.n_max + 1):
        count = 0
        for h in hessfn.all_hessenberg_functions(n):
            count += 1
            p = {"h": str(h)}
            d = hessfn.dual(h)
            yield _ok(f"hessfn/involution/{h}", p, hessfn.dual(d) == h, str(hessfn.dual(d)))
            yield _ok(f"hessfn/dual-dimension/{h}", p, hessfn.dimension(d) == hessfn.dimension(h))
            shaded = hessfn.diagram(h).count("#")
            yield _ok(f"hessfn/shaded-count/{h}", p, shaded == sum(h.values), str(shaded))
            vanish = hessfn.q_vanishing_set(h)
            # q_{rs} vanishes exactly when the box (n+1-r, n+1-s) lies below h
            direct = {(n + 1 - i, n + 1 - j) for j in range(1, n) for i in range(j + 1, n + 1)
                      if i > h(j)}
            yield _ok(f"hessfn/vanishing-set/{h}", p, set(vanish) == direct)
        catalan = math.comb(2 * n, n) // (n + 1)
        yield _ok(f"hessfn/catalan/{n}", {"n": n}, count == catalan, str(count))
    h = hessfn.validate(5, (3, 4, 4, 5, 5))
    yield _ok("hessfn/example-dual", {"h": "3,4,4,5,5"}, hessfn.dual(h).values == (2, 4, 5, 5, 5))
    yield _ok("hessfn/example-vanishing", {"h": "3,4,4,5,5"},
              hessfn.q_vanishing_set(h) == {(1, 3), (1, 4), (1, 5), (2, 5)})
    yield _ok("hessfn/example-dimension", {"h": "3,4,4,5,5"}, hessfn.dimension(h) == 6)


# -- f, E, F agreement --------------------------------------------------------------

def _pairs(n_max: int) -> Iterator[Tuple[int, int]]:
    for i in range(1, n_max + 1):
        for j in range(1, i + 1):
            yield i, j


def suite_fij_agreement(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for i, j in _pairs(cfg.n_max):
        p = {"i": i, "j": j}
        ref = fij.f_poly(i, j, "closed")
        for m in fij.F_METHODS[1:]:
            yield _eq(f"fij-agreement/{m}/{i},{j}", p, fij.f_poly(i, j, m), ref)
        yield _ok(f"fij-agreement/degree/{i},{j}", p, ref.homogeneous_degree() == 2 * (i - j + 1))
        yield _ok(f"fij-agreement/support/{i},{j}", p, _support_ok(ref, i))
    for i in range(1, cfg.n_max + 1):
        yield _eq(f"fij-agreement/first-column/{i}", {"i": i}, fij.f_poly(i, 1, "closed"), fij.f_i1_from_e(i))
        yield _eq(f"fij-agreement/diagonal/{i}", {"i": i}, fij.f_poly(i, i, "closed"),
                  poly_sum((x(k) for k in range(1, i + 1)), REG))


def suite_E_agreement(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(1, cfg.n_max + 1):
        for i in range(1, n + 1):
            p = {"i": i, "n": n}
            ref = quantum.E_poly(i, n, "charpoly")
            for m in quantum.E_METHODS[1:]:
                yield _eq(f"E-agreement/{m}/{i},{n}", p, quantum.E_poly(i, n, m), ref)
            yield _ok(f"E-agreement/degree/{i},{n}", p, ref.homogeneous_degree() == 2 * i)
            yield _ok(f"E-agreement/support/{i},{n}", p, _support_ok(ref, n))
            yield _eq(f"E-agreement/classical/{i},{n}", p, quantum.classical_limit(ref), symfun.elementary(i, n))
            yield _eq(f"E-agreement/truncation-identity/{i},{n}", p,
                      quantum.truncated_E(hessfn.identity(n), i, n), symfun.elementary(i, n))
            yield _eq(f"E-agreement/truncation-full/{i},{n}", p,
                      quantum.truncated_E(hessfn.full(n), i, n), ref)
    examples = {
        (1, 1): "x1", (1, 2): "x1 + x2", (2, 2): "x1*x2 + q1_2",
        (1, 3): "x1 + x2 + x3", (2, 3): "x1*x2 + x1*x3 + x2*x3 + q1_2 + q2_3",
        (3, 3): "x1*x2*x3 + q2_3*x1 + q1_2*x3 + q1_3",
    }
    for (i, n), text in examples.items():
        if n <= cfg.n_max:
            yield _eq(f"E-agreement/example/{i},{n}", {"i": i, "n": n}, quantum.E_poly(i, n), parse(text))


F_EXAMPLES = {
    (2, 1): "x1^2 - x1*x2 - 2*q1_2",
    (3, 2): "x1^2 - x1*x3 + x2^2 - x2*x3 - 2*q1_2 - 2*q2_3",
    (3, 1): "x1^3 - x1^2*x2 - x1^2*x3 + x1*x2*x3 - 3*q1_2*x1 - q1_2*x2 + 2*q1_2*x3 + q2_3*x1 + 3*q1_3",
}


def suite_F_agreement(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for i, j in _pairs(cfg.n_max):
        p = {"i": i, "j": j}
        ref = quantum.F_poly(i, j, "quantize")
        for m in quantum.QF_METHODS[1:]:
            yield _eq(f"F-agreement/{m}/{i},{j}", p, quantum.F_poly(i, j, m), ref)
        yield _ok(f"F-agreement/degree/{i},{j}", p, ref.homogeneous_degree() == 2 * (i - j + 1))
        yield _ok(f"F-agreement/support/{i},{j}", p, _support_ok(ref, i))
        yield _eq(f"F-agreement/classical/{i},{j}", p, quantum.classical_limit(ref), fij.f_poly(i, j))
    for j in range(1, cfg.n_max):
        # one step above the diagonal both correction sums are empty
        i = j + 1
        expected = poly_sum(((x(k) - x(i)) * x(k) - q(k, k + 1).scale(2) for k in range(1, i)), REG)
        yield _eq(f"F-agreement/subdiagonal/{i},{j}", {"i": i, "j": j}, quantum.F_poly(i, j, "recursion"), expected)
    for (i, j), text in F_EXAMPLES.items():
        if i <= cfg.n_max:
            yield _eq(f"F-agreement/example/{i},{j}", {"i": i, "j": j}, quantum.F_poly(i, j), parse(text))


# -- divided differences and symmetric functions ---------------------------------------

def suite_divided_difference(cfg: SuiteConfig) -> Iterator[CheckResult]:
    N = cfg.n_max
    for i, j in _pairs(N):
        if i == j:
            continue
        f = fij.f_poly(i, j)
        for k in range(1, N + 1):
            if k == i:
                expected = -fij.f_poly(i - 1, j)
            elif k == j:
                expected = fij.f_poly(i, j + 1)
            else:
                expected = Polynomial.zero(REG)
            yield _eq(f"divided-difference/f/{i},{j}/{k}", {"i": i, "j": j, "k": k},
                      symfun.divided_difference(f, k), expected)
    for i in range(1, N):
        for k in range(1, N + 1):
            yield _eq(f"divided-difference/h/{i}/{k}", {"i": i, "k": k},
                      symfun.divided_difference(symfun.complete(k, i), i), symfun.complete(k - 1, i + 1))


def suite_symfun(cfg: SuiteConfig) -> Iterator[CheckResult]:
    N = cfg.n_max
    zero = Polynomial.zero(REG)
    for n in range(1, N + 1):
        for m in range(1, n + 1):
            yield _eq(f"symfun/newton-eh/{m},{n}", {"m": m, "n": n}, symfun.newton_eh_sum(m, n), zero)
        for k in range(1, n + 1):
            rhs = poly_sum(
                ((symfun.power_sum(l, n) * symfun.elementary(k - l, n)).scale((-1) ** (l - 1))
                 for l in range(1, k + 1)), REG)
            yield _eq(f"symfun/power-sums/{k},{n}", {"k": k, "n": n},
                      symfun.elementary(k, n).scale(k), rhs)
    for i, j in _pairs(N):
        p = {"i": i, "j": j}
        f = fij.f_poly(i, j)
        coeffs = symfun.expand_standard(f, i)
        yield _eq(f"symfun/expand-f/{i},{j}", p, symfun.reconstruct(coeffs), f)
        yield _ok(f"symfun/integral-f/{i},{j}", p, all(isinstance(c, int) for c in coeffs.values()))
        yield _eq(f"symfun/quantize-classical/{i},{j}", p,
                  quantum.classical_limit(symfun.quantize(f, i)), f)
    for i in range(1, N + 1):
        for k in range(0, i + 1):
            for name, poly in (("e", symfun.elementary(k, i)), ("h", symfun.complete(k, i))):
                # x_i^k appears in h_k, so the box needs k + i - 1 levels
                levels = i if name == "e" else max(i, k + i - 1)
                coeffs = symfun.expand_standard(poly, levels)
                yield _eq(f"symfun/expand-{name}/{k},{i}", {"k": k, "i": i}, symfun.reconstruct(coeffs), poly)


# -- determinant identities -----------------------------------------------------------

def suite_determinant_props(cfg: SuiteConfig) -> Iterator[CheckResult]:
    N = cfg.n_max
    zero = Polynomial.zero(REG)
    for i, j in _pairs(N):
        p = {"i": i, "j": j}
        closed = fij.f_poly(i, j, "closed")
        yield _eq(f"determinant-props/eh-expansion/{i},{j}", p, fij.f_poly(i, j, "eh"), closed)
        yield _eq(f"determinant-props/eh-vanishing/{i},{j}", p, fij.eh_vanishing_sum(i, j), zero)
        yield _eq(f"determinant-props/f-determinant/{i},{j}", p, fij.f_poly(i, j, "determinant"), closed)
        yield _eq(f"determinant-props/F-determinant/{i},{j}", p,
                  quantum.F_poly(i, j, "determinant"), quantum.F_poly(i, j, "recursion"))
    for n in range(1, N + 1):
        for m in range(1, n + 1):
            p = {"m": m, "n": n}
            yield _ok(f"determinant-props/factorization/{m},{n}", p, fij.verify_matrix_factorization(m, n))
            yield _eq(f"determinant-props/h-determinant/{m},{n}", p,
                      fij.h_matrix(m, n).det(), symfun.elementary(n - m + 1, n))
    for i in range(1, N + 1):
        for k in range(1, i + 1):
            p = {"k": k, "i": i}
            yield _eq(f"determinant-props/e-from-f/{k},{i}", p, fij.e_from_f_determinant(k, i), symfun.elementary(k, i))
            yield _eq(f"determinant-props/e-f-relation/{k},{i}", p, *fij.e_f_relation_sides(k, i))
            yield _eq(f"determinant-props/E-F-relation/{k},{i}", p, *quantum.E_F_relation_sides(k, i))
            yield _eq(f"determinant-props/E-from-F/{k},{i}", p, quantum.E_from_F_determinant(k, i), quantum.E_poly(k, i))


# -- coordinate ring ------------------------------------------------------------------

def suite_main3(cfg: SuiteConfig) -> Iterator[CheckResult]:
    N = cfg.n_max
    for n in range(2, N + 1):
        for i in range(1, n):
            for j in range(1, i + 1):
                p = {"i": i, "j": j, "n": n}
                minor = cr.xi(n + 1 - j, n - i, n)
                yield _eq(f"main3/xi-formula/{i},{j},{n}", p, cr.xi_minor_formula(i, j, n), minor)
                yield _eq(f"main3/identity/{i},{j},{n}", p, *cr.main3_sides(i, j, n))
        for a in range(2, n + 1):
            for b in range(1, a):
                p = {"i": a, "j": b, "n": n}
                yield _ok(f"main3/nu-degree/{a},{b},{n}", p,
                          cr.nu(a, b, n).homogeneous_degree() == 2 * (a - b + 1))
    for n in range(2, min(N, 4) + 1):
        for choice in (cr.NILPOTENT, cr.SEMISIMPLE):
            direct = cr.conjugate_by_inverse(choice, n)
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    yield _eq(f"main3/minor-vs-product/{choice.value}/{a},{b},{n}",
                              {"i": a, "j": b, "n": n}, cr.defining_minor(choice, a, b, n), direct.entry(a, b))
        for c in range(0, n):
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    if a != b:
                        yield _eq(f"main3/shift-invariance/{a},{b},{n}/{c}",
                                  {"i": a, "j": b, "n": n, "shift": c},
                                  cr.defining_minor(cr.SEMISIMPLE, a, b, n, shift=c), cr.xi(a, b, n))
    yield _eq("main3/example-nu21", {"n": 2}, cr.nu(2, 1, 2), -(z(2, 1) ** 2))
    yield _eq("main3/example-xi21", {"n": 2}, cr.xi(2, 1, 2), z(2, 1))


# -- Gröbner-based suites ---------------------------------------------------------------

def _gb(cfg: SuiteConfig, gens, variables=None) -> ideal.GroebnerBasis:
    return ideal.buchberger(gens, cfg.order, variables=variables, max_pairs=cfg.max_pairs)


def suite_phi_q(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(2, cfg.gb_n_max + 1):
        gb = _gb(cfg, quantum.quantum_generators(n))
        for r in range(1, n):
            for s in range(r + 1, n + 1):
                res = cr.phi_q_residue(r, s, n, gb)
                yield CheckResult(f"phi-q/{r},{s},{n}", {"r": r, "s": s, "n": n}, not res,
                                  serialize(res) if res else None)


def _combination(pairs: Iterable[Tuple[Polynomial, Polynomial]]) -> Polynomial:
    return poly_sum((a * b for a, b in pairs), REG)


def f_from_e_certificate(j: int, n: int) -> List[Tuple[Polynomial, Polynomial]]:
    """``[(multiplier, e_k^(n)), ...]`` summing to ``f_{n,j}`` (last-row cofactor expansion)."""
    m = fij.f_determinant_matrix(n, j)
    size = n - j + 1
    out = []
    for c, (_, cof) in enumerate(cofactor_expansion_row(m, size - 1), start=1):
        k = size + 1 - c
        out.append((cof.scale(k), symfun.elementary(k, n)))
    return out


def F_from_E_certificate(j: int, n: int) -> List[Tuple[Polynomial, Polynomial]]:
    m = quantum.F_determinant_matrix(n, j)
    size = n - j + 1
    out = []
    for c, (_, cof) in enumerate(cofactor_expansion_row(m, size - 1), start=1):
        k = size + 1 - c
        out.append((cof.scale(k), quantum.E_poly(k, n)))
    return out


def e_from_f_certificate(k: int, n: int) -> List[Tuple[Polynomial, Polynomial]]:
    """``[(multiplier, f_{n,*}), ...]`` summing to ``e_k^(n)``."""
    return [
        (symfun.elementary(k - l, n - l).scale(Fraction((-1) ** (l - 1), k)), fij.f_poly(n, n + 1 - l))
        for l in range(1, k + 1)
    ]


def E_from_F_certificate(k: int, n: int) -> List[Tuple[Polynomial, Polynomial]]:
    return [
        (quantum.E_poly(k - l, n - l).scale(Fraction((-1) ** (l - 1), k)), quantum.F_poly(n, n + 1 - l))
        for l in range(1, k + 1)
    ]


def suite_ideal_equality(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(1, cfg.n_max + 1):
        for j in range(1, n + 1):
            p = {"j": j, "n": n}
            yield _eq(f"ideal-equality/f-in-e/{j},{n}", p, _combination(f_from_e_certificate(j, n)), fij.f_poly(n, j))
            yield _eq(f"ideal-equality/F-in-E/{j},{n}", p, _combination(F_from_E_certificate(j, n)), quantum.F_poly(n, j))
        for k in range(1, n + 1):
            p = {"k": k, "n": n}
            yield _eq(f"ideal-equality/e-in-f/{k},{n}", p, _combination(e_from_f_certificate(k, n)), symfun.elementary(k, n))
            yield _eq(f"ideal-equality/E-in-F/{k},{n}", p, _combination(E_from_F_certificate(k, n)), quantum.E_poly(k, n))
    for n in range(1, cfg.gb_n_max + 1):
        p = {"n": n}
        yield _ok(f"ideal-equality/groebner-classical/{n}", p,
                  ideal.ideal_equal(fij.classical_generators(n), [symfun.elementary(k, n) for k in range(1, n + 1)],
                                    cfg.order, max_pairs=cfg.max_pairs))
        yield _ok(f"ideal-equality/groebner-quantum/{n}", p,
                  ideal.ideal_equal([quantum.F_poly(n, j) for j in range(1, n + 1)], quantum.quantum_generators(n),
                                    cfg.order, max_pairs=cfg.max_pairs))
    yield _ok("ideal-equality/distinguishes", {},
              not ideal.ideal_equal([x(1)], [x(1) ** 2], cfg.order))


def _x_vars(n: int) -> List[int]:
    return [REG.x_id(k) for k in range(1, n + 1)]


def specialization_values(n: int, seed: int) -> Dict[int, Fraction]:
    """Distinct nonzero rationals for every ``q_{rs}``, reproducible from ``seed``."""
    rng = random.Random(seed * 1000 + n)
    values: Dict[int, Fraction] = {}
    used = set()
    for r in range(1, n):
        for s in range(r + 1, n + 1):
            while True:
                c = Fraction(rng.choice([-1, 1]) * rng.randint(1, 50), rng.randint(1, 20))
                if c not in used:
                    break
            used.add(c)
            values[REG.q_id(r, s)] = c
    return values


def suite_hilbert(cfg: SuiteConfig) -> Iterator[CheckResult]:
    N = cfg.gb_n_max
    for n in range(1, N + 1):
        top = n * (n - 1)  # the socle degree of the flag-variety quotient
        bound = cfg.degree_bound if cfg.degree_bound is not None else top + 2
        xs = _x_vars(n)
        for h in hessfn.all_hessenberg_functions(n):
            p = {"h": str(h)}
            gens = cr.presentation_generators(cr.COHOMOLOGY, h)
            hs = ideal.hilbert_series(_gb(cfg, gens, xs), bound)
            predicted = ideal.series_product(
                [2 * (h(j) - j + 1) for j in range(1, n + 1)], [2] * n, bound)
            yield _ok(f"hilbert/complete-intersection/{h}", p, hs.coefficients == predicted,
                      f"{hs.coefficients} != {predicted}")
            redundant = ideal.hilbert_series(_gb(cfg, cr.redundant_cohomology_generators(h), xs), bound)
            yield _ok(f"hilbert/redundant-generators/{h}", p, redundant.coefficients == hs.coefficients)
            # quantum side with every q set to zero against the classical side for the dual
            hd = hessfn.dual(h)
            F_gens = cr.presentation_generators(cr.COORD_SEMISIMPLE, h)
            all_q = [REG.q_id(r, s) for r in range(1, n) for s in range(r + 1, n + 1)]
            q_zero = ideal.hilbert_series(
                _gb(cfg, F_gens + [Polynomial.variable(v, REG) for v in all_q], xs + all_q), bound)
            f_side = [fij.f_poly(i, j) for j in range(1, n + 1) for i in range(hd(j), n + 1)]
            classical = ideal.hilbert_series(_gb(cfg, f_side, xs), bound)
            yield _ok(f"hilbert/semisimple-classical-limit/{h}", p,
                      q_zero.coefficients == classical.coefficients,
                      f"{q_zero.coefficients} != {classical.coefficients}")
            if n <= 3:
                for choice, target in ((cr.NILPOTENT, cr.COORD_NILPOTENT), (cr.SEMISIMPLE, cr.COORD_SEMISIMPLE)):
                    vanish = hessfn.q_vanishing_set(h) if choice is cr.NILPOTENT else set()
                    ring = [v for v in cr.xq_variables(n)
                            if REG.kind(v) != "q" or tuple(REG.indices(v)) not in vanish]
                    xq = ideal.hilbert_series(_gb(cfg, cr.presentation_generators(target, h), ring), bound)
                    zs = [g for g in cr.z_side_generators(choice, h) if g]
                    zside = ideal.hilbert_series(
                        ideal.buchberger(zs, cfg.order, variables=cr.z_variables(n), max_pairs=cfg.max_pairs),
                        bound)
                    yield _ok(f"hilbert/z-vs-xq/{choice.value}/{h}", p, zside.coefficients == xq.coefficients,
                              f"{zside.coefficients} != {xq.coefficients}")
        e_gb = _gb(cfg, [symfun.elementary(k, n) for k in range(1, n + 1)], xs)
        yield _ok(f"hilbert/borel-rank/{n}", {"n": n}, ideal.quotient_dimension(e_gb) == math.factorial(n))
        values = specialization_values(n, cfg.seed)
        specialized = [ideal.specialize(g, values) for g in quantum.quantum_generators(n)]
        dim = ideal.quotient_dimension(_gb(cfg, specialized, xs))
        yield _ok(f"hilbert/quantum-rank/{n}", {"n": n, "seed": cfg.seed}, dim == math.factorial(n), str(dim))
        # the quantum ring and the polynomial ring in the z's have the same graded dimensions
        qgb = _gb(cfg, quantum.quantum_generators(n), cr.xq_variables(n))
        qh = ideal.hilbert_series(qgb, bound)
        zdeg = [2 * (a - b) for a in range(2, n + 1) for b in range(1, a)]
        yield _ok(f"hilbert/quantum-vs-cell/{n}", {"n": n},
                  qh.coefficients == ideal.series_product([], zdeg, bound))
    if N >= 3:
        h = hessfn.validate(3, (2, 3, 3))
        hs = ideal.hilbert_series(_gb(cfg, cr.presentation_generators(cr.COHOMOLOGY, h)), 8)
        yield _ok("hilbert/example/2,3,3", {"h": "2,3,3"}, hs.coefficients == (1, 0, 2, 0, 1, 0, 0, 0, 0))
        h = hessfn.full(3)
        hs = ideal.hilbert_series(_gb(cfg, cr.presentation_generators(cr.COHOMOLOGY, h)), 8)
        yield _ok("hilbert/example/3,3,3", {"h": "3,3,3"}, hs.coefficients == (1, 0, 2, 0, 2, 0, 1, 0, 0))


def brute_force_hilbert(gens: Sequence[Polynomial], variables: Sequence[int], degree: int) -> int:
    """``dim (R/I)_degree`` by linear algebra on all products ``monomial * generator``."""
    weights = [REG.degree(v) for v in variables]

    def monomials(deg: int) -> List[Tuple[Tuple[int, int], ...]]:
        out = []

        def rec(k, left, acc):
            if k == len(variables):
                if left == 0:
                    out.append(tuple(acc))
                return
            e = 0
            while e * weights[k] <= left:
                rec(k + 1, left - e * weights[k], acc + ([(variables[k], e)] if e else []))
                e += 1

        rec(0, deg, [])
        return out

    target = monomials(degree)
    rows = []
    for g in gens:
        d = g.homogeneous_degree()
        if d is None or d > degree:
            continue
        for m in monomials(degree - d):
            rows.append(Polynomial({m: 1}, REG) * g)
    index = {m: k for k, m in enumerate(target)}
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for r in rows:
        vec = {index[m]: Fraction(c) for m, c in r.items()}
        while vec:
            col = min(vec)
            if col not in pivots:
                inv = 1 / vec[col]
                pivots[col] = {k: v * inv for k, v in vec.items()}
                break
            c = vec[col]
            for k, v in pivots[col].items():
                nv = vec.get(k, 0) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
    return len(target) - len(pivots)


def suite_groebner(cfg: SuiteConfig) -> Iterator[CheckResult]:
    rng = random.Random(cfg.seed)
    pool = [x(1), x(2), x(3), q(1, 2)]
    ids = [REG.x_id(1), REG.x_id(2), REG.x_id(3), REG.q_id(1, 2)]
    for t in range(8):
        gens = [g for g in (_random_homogeneous(rng, pool, 2 * rng.randint(1, 3)) for _ in range(3)) if g]
        if not gens:
            continue
        gb = _gb(cfg, gens, ids)
        p = {"trial": t}
        for k, g in enumerate(gens):
            yield _ok(f"groebner/member/{t}/{k}", p, not ideal.normal_form(g, gb))
        a = _random_poly(rng, pool, 6)
        b = _random_poly(rng, pool, 6)
        na, nb = ideal.normal_form(a, gb), ideal.normal_form(b, gb)
        yield _eq(f"groebner/idempotent/{t}", p, ideal.normal_form(na, gb), na)
        c = Fraction(rng.randint(1, 7), rng.randint(1, 5))
        yield _eq(f"groebner/linear/{t}", p, ideal.normal_form(a.scale(c) + b, gb), na.scale(c) + nb)
        hs = ideal.hilbert_series(gb, 8)
        for d in range(0, 9, 2):
            bf = brute_force_hilbert(gens, ids, d)
            yield _ok(f"groebner/brute-force/{t}/{d}", p, hs.coefficients[d] == bf,
                      f"{hs.coefficients[d]} != {bf}")
    # pairwise S-polynomials reduce to zero on a basis with nontrivial pairs
    for n in range(2, min(cfg.gb_n_max, 4) + 1):
        gens = cr.z_side_generators(cr.NILPOTENT, hessfn.peterson(n))
        gb = _gb(cfg, [g for g in gens if g], cr.z_variables(n))
        bad = [
            (a, b) for a, b in itertools.combinations(range(len(gb.generators)), 2)
            if ideal.normal_form(_s_polynomial(gb, a, b), gb)
        ]
        yield _ok(f"groebner/s-pairs/{n}", {"n": n}, not bad, str(bad))
    n2 = quantum.quantum_generators(2)
    gb = _gb(cfg, n2)
    yield _ok("groebner/example-q2", {}, not ideal.normal_form(x(1) ** 2 - q(1, 2), gb))
    yield _ok("groebner/example-free", {}, ideal.normal_form(x(1), _gb(cfg, [x(2)])) == x(1))


def _s_polynomial(gb: ideal.GroebnerBasis, a: int, b: int) -> Polynomial:
    f, g = gb.generators[a], gb.generators[b]
    (mf, cf), (mg, cg) = f.leading_term(), g.leading_term()
    ring = gb._ring
    ea, eb = ring.to_dense(Polynomial({mf: 1}, REG)), ring.to_dense(Polynomial({mg: 1}, REG))
    la, lb = next(iter(ea)), next(iter(eb))
    lcm = tuple(max(u, v) for u, v in zip(la, lb))
    ua = ring.to_poly({tuple(u - v for u, v in zip(lcm, la)): Fraction(1)})
    ub = ring.to_poly({tuple(u - v for u, v in zip(lcm, lb)): Fraction(1)})
    return (ua * f).scale(Fraction(1) / cf) - (ub * g).scale(Fraction(1) / cg)


SUITES: Dict[str, Tuple[Suite, str]] = {
    "ring-axioms": (suite_ring_axioms, "poly"),
    "hessfn": (suite_hessfn, "poly"),
    "fij-agreement": (suite_fij_agreement, "poly"),
    "E-agreement": (suite_E_agreement, "poly"),
    "F-agreement": (suite_F_agreement, "poly"),
    "divided-difference": (suite_divided_difference, "poly"),
    "symfun": (suite_symfun, "poly"),
    "determinant-props": (suite_determinant_props, "poly"),
    "main3": (suite_main3, "poly"),
    "phi-q": (suite_phi_q, "groebner"),
    "ideal-equality": (suite_ideal_equality, "groebner"),
    "groebner": (suite_groebner, "groebner"),
    "hilbert": (suite_hilbert, "groebner"),
}


def run_suite(name: str, cfg: SuiteConfig = SuiteConfig()) -> VerificationReport:
    try:
        fn, _ = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'") from None
    start = time.perf_counter()
    report = VerificationReport(name, list(fn(cfg)))
    report.wall_time = time.perf_counter() - start
    report.sort()
    return report


def _run_named(args: Tuple[str, SuiteConfig]) -> VerificationReport:
    return run_suite(*args)


def run_suites(names: Sequence[str], cfg: SuiteConfig = SuiteConfig(), jobs: int = 1) -> List[VerificationReport]:
    """Run several suites, fanning out to ``jobs`` worker processes."""
    if "all" in names:
        names = list(SUITES)
    for n in names:
        if n not in SUITES:
            raise ValueError(f"unknown suite {n!r}; choose from {sorted(SUITES)} or 'all'")
    if jobs <= 1 or len(names) == 1:
        return [run_suite(n, cfg) for n in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_named, [(n, cfg) for n in names]))
