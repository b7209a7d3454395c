"""Hessenberg functions ``h: [n] -> [n]``.

A Hessenberg function is weakly increasing with ``h(j) >= j`` (so ``h(n) = n``).
Values are stored 1-based in the sense that ``h[j]`` is ``h(j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Violation:
    """Why a value list fails to be a Hessenberg function."""

    rule: str  # "range", "above_diagonal", "monotone", "fixes_n", "length"
    index: Optional[int]
    message: str


class InvalidHessenbergFunction(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(v.message for v in self.violations))


def find_violations(n: int, values: Sequence[int]) -> List[Violation]:
    out: List[Violation] = []
    if not isinstance(n, int) or n < 1:
        return [Violation("length", None, f"n must be a positive integer, got {n!r}")]
    if len(values) != n:
        return [Violation("length", None, f"expected {n} values, got {len(values)}")]
    for j, hj in enumerate(values, start=1):
        if not isinstance(hj, int) or not 1 <= hj <= n:
            out.append(Violation("range", j, f"h({j}) = {hj!r} is not in [1, {n}]"))
        elif hj < j:
            out.append(Violation("above_diagonal", j, f"h({j}) = {hj} < {j}"))
        if j >= 2 and isinstance(hj, int) and isinstance(values[j - 2], int) and hj < values[j - 2]:
            out.append(Violation("monotone", j, f"h({j}) = {hj} < h({j - 1}) = {values[j - 2]}"))
    if isinstance(values[-1], int) and values[-1] != n:
        out.append(Violation("fixes_n", n, f"h({n}) = {values[-1]} < {n}"))
    return out


@dataclass(frozen=True)
class HessenbergFunction:
    n: int
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        bad = find_violations(self.n, self.values)
        if bad:
            raise InvalidHessenbergFunction(bad)

    def __call__(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise IndexError(f"h is defined on [1, {self.n}]")
        return self.values[j - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return ",".join(map(str, self.values))

    def in_space(self, i: int, j: int) -> bool:
        """Whether box ``(i, j)`` is shaded, i.e. ``i <= h(j)``."""
        return i <= self(j)


def validate(n: int, values: Sequence[int]) -> HessenbergFunction:
    """Build a Hessenberg function or raise ``InvalidHessenbergFunction``."""
    return HessenbergFunction(n, tuple(values))


def parse_csv(text: str) -> HessenbergFunction:
    """``"3,4,4,5,5"`` -> ``HessenbergFunction(5, (3, 4, 4, 5, 5))``."""
    try:
        values = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise InvalidHessenbergFunction(
            [Violation("range", None, f"cannot read integers from {text!r}")]) from None
    if not values:
        raise InvalidHessenbergFunction([Violation("length", None, "no values given")])
    return HessenbergFunction(len(values), values)


def dual(h: HessenbergFunction) -> HessenbergFunction:
    """``h*(i) = #{j : h(j) >= n + 1 - i}``, the anti-diagonal flip."""
    n = h.n
    return HessenbergFunction(
        n, tuple(sum(1 for hj in h.values if hj >= n + 1 - i) for i in range(1, n + 1)))


def dimension(h: HessenbergFunction) -> int:
    return sum(hj - j for j, hj in enumerate(h.values, start=1))


def q_vanishing_set(h: HessenbergFunction) -> FrozenSet[Tuple[int, int]]:
    """Pairs ``(r, s)`` with ``2 <= s <= n`` and ``r <= n - h(n + 1 - s)``."""
    n = h.n
    return frozenset(
        (r, s) for s in range(2, n + 1) for r in range(1, n - h(n + 1 - s) + 1)
    )


def diagram(h: HessenbergFunction) -> str:
    """Rows top to bottom; ``#`` marks the boxes with ``i <= h(j)``."""
    n = h.n
    return "\n".join(
        "".join("#" if i <= h(j) else "." for j in range(1, n + 1)) for i in range(1, n + 1)
    )


def full(n: int) -> HessenbergFunction:
    return HessenbergFunction(n, (n,) * n)


def identity(n: int) -> HessenbergFunction:
    return HessenbergFunction(n, tuple(range(1, n + 1)))


def peterson(n: int) -> HessenbergFunction:
    """``(2, 3, ..., n, n)``; for ``n = 1`` this is ``(1,)``."""
    return HessenbergFunction(n, tuple(min(j + 1, n) for j in range(1, n + 1)))


def all_hessenberg_functions(n: int) -> Iterator[HessenbergFunction]:
    """Every Hessenberg function on ``[n]`` (a Catalan number of them)."""

    def rec(j: int, lo: int, acc: list):
        if j > n:
            yield HessenbergFunction(n, tuple(acc))
            return
        for v in range(max(lo, j), n + 1):
            acc.append(v)
            yield from rec(j + 1, v, acc)
            acc.pop()

    return rec(1, 1, [])
