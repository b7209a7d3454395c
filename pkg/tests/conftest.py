from fractions import Fraction

import sympy

from hessquant.poly import DEFAULT_REGISTRY, Polynomial


def to_sympy(p: Polynomial):
    """Rebuild ``p`` as a sympy expression, symbol names kept."""
    reg = p.registry
    out = sympy.Integer(0)
    for m, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator) if not isinstance(c, int) else sympy.Integer(c)
        for v, e in m:
            term *= sympy.Symbol(reg.name(v)) ** e
        out += term
    return sympy.expand(out)


def from_sympy(expr, registry=DEFAULT_REGISTRY) -> Polynomial:
    expr = sympy.expand(expr)
    if expr == 0:
        return Polynomial.zero(registry)
    syms = sorted(expr.free_symbols, key=str)
    terms = {}
    for monom, coeff in sympy.Poly(expr, *syms).terms() if syms else [((), expr)]:
        m = tuple(sorted((registry.id_of(str(s)), e) for s, e in zip(syms, monom) if e))
        terms[m] = Fraction(int(coeff.p), int(coeff.q))
    return Polynomial(terms, registry)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, title, elapsed, limit, note = RESULTS[number]
        budget = f", limit {limit:g}s" if limit is not None else ""
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s{budget})"
        if note:
            line += f"  [{note}]"
        tr.write_line(line)
