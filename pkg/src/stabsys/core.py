"""Exact arithmetic primitives: rationals, class vectors, extended slopes.

Rationals are :class:`fractions.Fraction` throughout.  Nothing in this
package lets a float reach a predicate; floats only show up in display
fields such as the phase.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

RationalLike = Union[Fraction, int, str]


class StabError(ValueError):
    """Domain error: a precondition of some operation does not hold."""


def Q(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused on purpose.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if any(ch in s for ch in ".eE"):
            raise StabError(f"decimal literal {x!r} not accepted; use p/q")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise StabError(f"cannot parse rational {x!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def fmt_q(x: Fraction | int) -> str:
    """Serialize as ``"p/q"``, dropping ``/1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ClassVector:
    """Numerical class (rank n, degree d, section dimension k)."""

    n: int
    d: int
    k: int

    def __post_init__(self):
        for v in (self.n, self.d, self.k):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError("class vector entries must be ints")

    def __iter__(self) -> Iterator[int]:
        return iter((self.n, self.d, self.k))

    def __add__(self, other: "ClassVector") -> "ClassVector":
        return ClassVector(self.n + other.n, self.d + other.d, self.k + other.k)

    def __sub__(self, other: "ClassVector") -> "ClassVector":
        return ClassVector(self.n - other.n, self.d - other.d, self.k - other.k)

    def __neg__(self) -> "ClassVector":
        return ClassVector(-self.n, -self.d, -self.k)

    def __mul__(self, lam: int) -> "ClassVector":
        return ClassVector(lam * self.n, lam * self.d, lam * self.k)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.n == 0 and self.d == 0 and self.k == 0

    def as_list(self) -> list[int]:
        return [self.n, self.d, self.k]

    @classmethod
    def of(cls, value) -> "ClassVector":
        """Build from a ClassVector, a 3-sequence, or an ``"n,d,k"`` string."""
        if isinstance(value, ClassVector):
            return value
        if isinstance(value, str):
            parts = [p for p in value.replace(" ", "").split(",") if p != ""]
            if len(parts) != 3:
                raise StabError(f"class must be n,d,k; got {value!r}")
            try:
                return cls(*(int(p) for p in parts))
            except ValueError as exc:
                raise StabError(f"class entries must be integers: {value!r}") from exc
        n, d, k = value
        return cls(int(n), int(d), int(k))

    def __str__(self) -> str:
        return f"({self.n},{self.d},{self.k})"


@functools.total_ordering
@dataclass(frozen=True)
class Slope:
    """A rational slope or +infinity (``value is None``).

    There is no -infinity; nothing in the theory produces one.
    """

    value: Fraction | None

    @classmethod
    def finite(cls, x: RationalLike) -> "Slope":
        return cls(Q(x))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other: "Slope") -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        return compare_slopes(self, other) < 0

    def __str__(self) -> str:
        return "inf" if self.value is None else fmt_q(self.value)

    @classmethod
    def parse(cls, s: str) -> "Slope":
        return INFINITY if s == "inf" else cls(Q(s))


INFINITY = Slope(None)


def compare_slopes(a: Slope, b: Slope) -> int:
    """Three-way comparison: -1, 0 or 1."""
    if a.value is None:
        return 0 if b.value is None else 1
    if b.value is None:
        return -1
    return (a.value > b.value) - (a.value < b.value)


def is_parallel(a: ClassVector, b: ClassVector) -> bool:
    """True iff the 3x2 matrix [a|b] has rank at most one."""
    return (
        a.n * b.d - a.d * b.n == 0
        and a.n * b.k - a.k * b.n == 0
        and a.d * b.k - a.k * b.d == 0
    )


@dataclass(frozen=True)
class Genus:
    g: int

    def __post_init__(self):
        if not isinstance(self.g, int) or self.g < 0:
            raise StabError(f"genus must be a nonnegative integer, got {self.g!r}")

    @property
    def euler_char(self) -> int:
        """chi(O_C) = 1 - g."""
        return 1 - self.g

    @property
    def canonical_degree(self) -> int:
        return 2 * self.g - 2


def as_genus(g) -> Genus:
    return g if isinstance(g, Genus) else Genus(int(g))
