"""Central charges and slopes on class vectors.

Every charge here is a linear map Z^3 -> Q + iQ; families store it as a
pair of rational coefficient rows acting on (n, d, k).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import INFINITY, ClassVector, Q, Slope, StabError, fmt_q


@dataclass(frozen=True)
class ComplexRational:
    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", Q(self.re))
        object.__setattr__(self, "im", Q(self.im))

    def __add__(self, other: "ComplexRational") -> "ComplexRational":
        return ComplexRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexRational") -> "ComplexRational":
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ComplexRational":
        return ComplexRational(-self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


def _check_alpha(alpha: Fraction) -> Fraction:
    alpha = Q(alpha)
    if alpha < 0:
        raise StabError(f"alpha must be >= 0, got {alpha}")
    return alpha


def z_alpha(c: ClassVector, alpha) -> ComplexRational:
    """Z_alpha = -(d + alpha k) + i n."""
    alpha = _check_alpha(alpha)
    return ComplexRational(-(c.d + alpha * c.k), Fraction(c.n))


def z_alpha_beta(c: ClassVector, alpha, beta) -> ComplexRational:
    """Z_alpha shifted by beta n on the real part."""
    alpha = _check_alpha(alpha)
    beta = Q(beta)
    return ComplexRational(-(c.d + alpha * c.k - beta * c.n), Fraction(c.n))


def z_tilt(c: ClassVector, alpha, beta, gamma) -> ComplexRational:
    """Charge on the tilted heart: (d + gamma n - k) + i (d + alpha k - beta n).

    A tilted object with cohomologies (t-part, f-part) has charge
    z_tilt(t) - z_tilt(f), which is z_tilt of the signed class t - f.
    """
    alpha = _check_alpha(alpha)
    beta, gamma = Q(beta), Q(gamma)
    return ComplexRational(
        c.d + gamma * c.n - c.k,
        c.d + alpha * c.k - beta * c.n,
    )


def slope(z: ComplexRational) -> Slope:
    """-Re/Im, or +inf when Im = 0."""
    if z.im == 0:
        return INFINITY
    return Slope(-z.re / z.im)


def mu_alpha(c: ClassVector, alpha) -> Slope:
    return slope(z_alpha(c, alpha))


def mu_tilt(c: ClassVector, alpha, beta, gamma) -> Slope:
    return slope(z_tilt(c, alpha, beta, gamma))


def phase_display(z: ComplexRational) -> float:
    """arg(Z)/pi in (0, 1]; for reports only, never for decisions."""
    if z.is_zero():
        raise StabError("phase of the zero charge is undefined")
    phi = math.atan2(float(z.im), float(z.re)) / math.pi
    if phi <= 0:
        phi += 2.0
    return phi


def im_tilt(c: ClassVector, alpha, beta) -> Fraction:
    """Im of the tilted charge; independent of gamma."""
    return c.d + Q(alpha) * c.k - Q(beta) * c.n


def cross_compare(z1: ComplexRational, z2: ComplexRational) -> int:
    """Compare slopes of two charges with Im >= 0 by cross-multiplication.

    Returns -1, 0, 1 like :func:`compare_slopes` on ``slope(z1)`` and
    ``slope(z2)``.
    """
    if z1.im < 0 or z2.im < 0:
        raise StabError("cross comparison needs Im >= 0")
    if z1.im == 0 or z2.im == 0:
        a = 1 if z1.im == 0 else 0
        b = 1 if z2.im == 0 else 0
        return (a > b) - (a < b)
    lhs = -z1.re * z2.im
    rhs = -z2.re * z1.im
    return (lhs > rhs) - (lhs < rhs)


# -- charge families ---------------------------------------------------------

STANDARD = "standard"
STANDARD_BETA = "standard_beta"
TILTED = "tilted"
DAGGER = "dagger"


@dataclass(frozen=True)
class ChargeFamily:
    """One member of a parameterized charge family.

    ``params`` by kind:
      standard: (alpha,)
      standard_beta: (alpha, beta)
      tilted: (alpha, beta, gamma)
      dagger: (alpha, beta, t, D, E, F) where (D, E, F) are the
        Delta_I coefficients; the charge is
        (n + t Delta_I) + i (d + alpha k - beta n).
    """

    kind: str
    params: tuple = field(default=())

    def __post_init__(self):
        arity = {STANDARD: 1, STANDARD_BETA: 2, TILTED: 3, DAGGER: 6}
        if self.kind not in arity:
            raise StabError(f"unknown charge family {self.kind!r}")
        params = tuple(Q(p) for p in self.params)
        if len(params) != arity[self.kind]:
            raise StabError(f"{self.kind} takes {arity[self.kind]} parameters")
        if params[0] < 0:
            raise StabError("alpha must be >= 0")
        object.__setattr__(self, "params", params)

    @classmethod
    def standard(cls, alpha) -> "ChargeFamily":
        return cls(STANDARD, (alpha,))

    @classmethod
    def standard_beta(cls, alpha, beta) -> "ChargeFamily":
        return cls(STANDARD_BETA, (alpha, beta))

    @classmethod
    def tilted(cls, alpha, beta, gamma) -> "ChargeFamily":
        return cls(TILTED, (alpha, beta, gamma))

    @classmethod
    def dagger(cls, alpha, beta, t, D, E, F) -> "ChargeFamily":
        return cls(DAGGER, (alpha, beta, t, D, E, F))

    def matrix(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """(Re row, Im row), each a coefficient triple on (n, d, k)."""
        p = self.params
        one = Fraction(1)
        if self.kind == STANDARD:
            (a,) = p
            return (Fraction(0), -one, -a), (one, Fraction(0), Fraction(0))
        if self.kind == STANDARD_BETA:
            a, b = p
            return (b, -one, -a), (one, Fraction(0), Fraction(0))
        if self.kind == TILTED:
            a, b, g = p
            return (g, one, -one), (-b, one, a)
        a, b, t, D, E, F = p
        return (1 + t * D, t * E, t * F), (-b, one, a)

    def __call__(self, c: ClassVector) -> ComplexRational:
        re_row, im_row = self.matrix()
        v = (c.n, c.d, c.k)
        return ComplexRational(
            sum(x * y for x, y in zip(re_row, v)),
            sum(x * y for x, y in zip(im_row, v)),
        )

    def label(self) -> str:
        return f"{self.kind}:" + ",".join(fmt_q(p) for p in self.params)

    @classmethod
    def parse(cls, text: str) -> "ChargeFamily":
        """Parse ``kind:p1,p2,...`` (``standard:1``, ``tilted:1,2,7``)."""
        if ":" not in text:
            raise StabError(f"charge family must look like kind:params, got {text!r}")
        kind, _, rest = text.partition(":")
        params = tuple(Q(x) for x in rest.split(",") if x.strip())
        return cls(kind.strip(), params)
