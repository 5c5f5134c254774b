"""Lattice points of Z^3 = {(n, d, k)} cut out by linear inequalities.

Enumeration loops over (n, k) and solves each inequality for an integer
interval of d, so a box of side 2B+1 costs O(B^2) rather than O(B^3).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .core import Q, fmt_q


@dataclass(frozen=True)
class Ineq:
    """a n + b d + c k + const <= 0 (or < 0 when ``strict``)."""

    a: Fraction
    b: Fraction
    c: Fraction
    const: Fraction = Fraction(0)
    strict: bool = False
    label: str = ""

    def __post_init__(self):
        for name in ("a", "b", "c", "const"):
            object.__setattr__(self, name, Q(getattr(self, name)))

    def value(self, n: int, d: int, k: int) -> Fraction:
        return self.a * n + self.b * d + self.c * k + self.const

    def holds(self, n: int, d: int, k: int) -> bool:
        v = self.value(n, d, k)
        return v < 0 if self.strict else v <= 0

    def __str__(self) -> str:
        terms = []
        for coef, var in ((self.a, "n"), (self.b, "d"), (self.c, "k")):
            if coef:
                terms.append(f"{fmt_q(coef)}*{var}")
        if self.const:
            terms.append(fmt_q(self.const))
        lhs = " + ".join(terms) or "0"
        return f"{lhs} {'<' if self.strict else '<='} 0"


def le(lhs: tuple, rhs: tuple, strict: bool = False, label: str = "") -> Ineq:
    """Build ``lhs <= rhs`` from coefficient 4-tuples (n, d, k, const)."""
    a = [Q(x) - Q(y) for x, y in zip(lhs, rhs)]
    return Ineq(a[0], a[1], a[2], a[3], strict, label)


def lt(lhs: tuple, rhs: tuple, label: str = "") -> Ineq:
    return le(lhs, rhs, True, label)


@dataclass(frozen=True)
class Box:
    n: tuple[int, int]
    d: tuple[int, int]
    k: tuple[int, int]

    @classmethod
    def cube(cls, bound: int) -> "Box":
        return cls((-bound, bound), (-bound, bound), (-bound, bound))


@dataclass(frozen=True)
class ConstraintSystem:
    """Conjunction of inequalities plus an optional integer predicate."""

    ineqs: tuple[Ineq, ...]
    predicate: Callable[[int, int, int], bool] | None = None
    description: str = ""
    notes: tuple[str, ...] = field(default=())

    def holds(self, n: int, d: int, k: int) -> bool:
        if not all(q.holds(n, d, k) for q in self.ineqs):
            return False
        return self.predicate is None or self.predicate(n, d, k)

    def lines(self) -> list[str]:
        out = [f"{q.label}: {q}" if q.label else str(q) for q in self.ineqs]
        out.extend(self.notes)
        return out

    def points(self, box: Box) -> Iterator[tuple[int, int, int]]:
        yield from enumerate_points(self, box)


def _d_range(ineqs, n: int, k: int, lo: int, hi: int) -> tuple[int, int] | None:
    for q in ineqs:
        rest = q.a * n + q.c * k + q.const
        if q.b == 0:
            if (rest >= 0) if q.strict else (rest > 0):
                return None
            continue
        bound = -rest / q.b
        if q.b > 0:
            # d <= bound  (or < bound)
            top = math.floor(bound)
            if q.strict and top == bound:
                top -= 1
            hi = min(hi, top)
        else:
            bot = math.ceil(bound)
            if q.strict and bot == bound:
                bot += 1
            lo = max(lo, bot)
        if lo > hi:
            return None
    return lo, hi


def enumerate_points(system: ConstraintSystem, box: Box) -> Iterator[tuple[int, int, int]]:
    """All lattice points of ``box`` satisfying ``system``, in (n, d, k) order."""
    for n in range(box.n[0], box.n[1] + 1):
        rows = []
        for k in range(box.k[0], box.k[1] + 1):
            r = _d_range(system.ineqs, n, k, box.d[0], box.d[1])
            if r is not None:
                rows.append((k, r))
        pts = []
        for k, (lo, hi) in rows:
            for d in range(lo, hi + 1):
                if system.predicate is None or system.predicate(n, d, k):
                    pts.append((n, d, k))
        pts.sort()
        yield from pts


def brute_force_points(system: ConstraintSystem, box: Box) -> list[tuple[int, int, int]]:
    """Reference enumeration testing every box point; slow, for checks only."""
    return [
        (n, d, k)
        for n in range(box.n[0], box.n[1] + 1)
        for d in range(box.d[0], box.d[1] + 1)
        for k in range(box.k[0], box.k[1] + 1)
        if system.holds(n, d, k)
    ]
