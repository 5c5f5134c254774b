"""Section-count bounds, Clifford indices and the admissible-class filter."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ClassVector, Genus, StabError, as_genus


@dataclass(frozen=True)
class SheafClass:
    """Numerical data of a sheaf: rank, degree, optional h0, genus of the curve."""

    n: int
    d: int
    g: Genus
    h0: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "g", as_genus(self.g))
        if self.n < 0:
            raise StabError("rank must be >= 0")
        if self.h0 is not None and self.h0 < 0:
            raise StabError("h0 must be >= 0")

    @property
    def h1(self) -> int | None:
        """Riemann-Roch: h0 - h1 = d + n(1 - g)."""
        if self.h0 is None:
            return None
        return self.h0 - self.d - self.n * self.g.euler_char

    @property
    def slope(self) -> Fraction:
        if self.n == 0:
            raise StabError("slope of a torsion sheaf is infinite")
        return Fraction(self.d, self.n)


def h0_upper(c: SheafClass, semistable: bool = False, mu_min_nonneg: bool = False) -> int:
    """Upper bound on h0 from the available hypotheses."""
    if c.n == 0:
        if c.d < 0:
            raise StabError("torsion sheaf with negative degree")
        return c.d
    if mu_min_nonneg and c.d < 0:
        raise StabError("inconsistent flags: mu_min >= 0 but d < 0")
    if semistable and c.d < 0:
        return 0
    if mu_min_nonneg or semistable:
        # a semistable sheaf with d >= 0 has mu_min = d/n >= 0
        return c.d + c.n
    raise StabError("no bound applies without semistability or mu_min >= 0")


def clifford_upper(c: SheafClass) -> Fraction:
    """h0 <= d/2 + n for slopes within [0, 2g - 2]."""
    if c.n < 1:
        raise StabError("clifford bound needs n >= 1")
    mu = Fraction(c.d, c.n)
    if not 0 <= mu <= c.g.canonical_degree:
        raise StabError(f"slope {mu} outside [0, {c.g.canonical_degree}]")
    return Fraction(c.d, 2) + c.n


def system_section_bound(c: ClassVector) -> bool:
    if c.n <= 0:
        raise StabError("section bound stated for n > 0")
    return c.k <= c.d + c.n


def system_clifford_bound(c: ClassVector, g: Genus | int | None = None) -> bool:
    if c.n <= 0:
        raise StabError("clifford bound for systems stated for n > 0")
    return Fraction(c.k) <= Fraction(c.d, 2) + c.n


def clifford_index(n: int, d: int, h0: int, g: Genus | int | None = None, h1: int | None = None) -> Fraction:
    """(d - 2(h0 - n))/n.

    With the genus given, the value is cross-checked against the
    Serre-dual expression (g + 1) - (h0 + h1)/n. A recorded ``h1`` that
    contradicts Riemann-Roch raises.
    """
    if n < 1:
        raise StabError("clifford index needs n >= 1")
    if h0 < 0:
        raise StabError("h0 must be >= 0")
    value = Fraction(d - 2 * (h0 - n), n)
    if g is None:
        if h1 is not None:
            raise StabError("h1 given without genus")
        return value
    g = as_genus(g)
    rr_h1 = h0 - d - n * g.euler_char
    if h1 is not None and h1 != rr_h1:
        raise StabError(f"inconsistent input: h1={h1} but Riemann-Roch gives {rr_h1}")
    if rr_h1 < 0:
        raise StabError(f"inconsistent input: Riemann-Roch gives h1={rr_h1} < 0")
    dual = clifford_index_dual(n, h0, rr_h1, g)
    if dual != value:  # pragma: no cover - algebraic identity
        raise StabError("clifford index forms disagree")
    return value


def clifford_index_dual(n: int, h0: int, h1: int, g: Genus | int) -> Fraction:
    """(g + 1) - (h0 + h1)/n."""
    g = as_genus(g)
    return Fraction(g.g + 1) - Fraction(h0 + h1, n)


# -- extremal systems --------------------------------------------------------

COMPLETE_TRIVIAL = "CompleteTrivial"
P1_SUMS = "P1Sums"
NOT_EXTREMAL = "NotExtremal"
TORSION_CASE = "TorsionCase"


@dataclass(frozen=True)
class ExtremalVerdict:
    tag: str
    partition: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.partition is not None:
            out["partition"] = list(self.partition)
        return out


def extremal_classify(c: ClassVector, g: Genus | int) -> ExtremalVerdict:
    """Classify classes attaining k = d + n."""
    g = as_genus(g)
    if c.n == 0:
        return ExtremalVerdict(TORSION_CASE)
    if c.n < 0 or c.k <= 0:
        raise StabError("extremal classification needs n > 0 and k > 0")
    if c.k != c.d + c.n:
        return ExtremalVerdict(NOT_EXTREMAL)
    if g.g >= 1:
        return ExtremalVerdict(COMPLETE_TRIVIAL if c.d == 0 else NOT_EXTREMAL)
    if c.d < 0:
        return ExtremalVerdict(NOT_EXTREMAL)
    partition = (c.d,) + (0,) * (c.n - 1)
    return ExtremalVerdict(P1_SUMS, partition)


# -- admissible filter -------------------------------------------------------


def admissible_semistable(c: ClassVector, alpha=None) -> bool:
    """Necessary numerical conditions for a mu_alpha-semistable system.

    (n = 0 or k > 0) forces d >= 0, and n, k > 0 forces k <= d + n. The
    filter does not depend on alpha; the argument is accepted for symmetry
    with the other predicates.
    """
    if c.n < 0 or c.k < 0:
        raise StabError(f"admissible filter needs n, k >= 0, got {c}")
    if (c.n == 0 or c.k > 0) and c.d < 0:
        return False
    if c.n > 0 and c.k > 0 and c.k > c.d + c.n:
        return False
    return True


def admissible_raw(n: int, d: int, k: int) -> bool:
    """Integer-argument version of :func:`admissible_semistable` for hot loops."""
    if (n == 0 or k > 0) and d < 0:
        return False
    return not (n > 0 and k > 0 and k > d + n)


def bounds_report(c: ClassVector, alpha=None, g: int | None = None) -> dict:
    out: dict = {"admissible_semistable": admissible_semistable(c, alpha) if c.n >= 0 and c.k >= 0 else None}
    if c.n > 0:
        out["section_bound"] = system_section_bound(c)
        out["clifford_bound"] = system_clifford_bound(c)
        if g is not None and c.k > 0:
            out["extremal"] = extremal_classify(c, g).to_json()
    return out
