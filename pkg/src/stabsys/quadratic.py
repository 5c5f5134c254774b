"""Quadratic forms for the support property and the BG discriminant."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from ._parallel import ordered_map
from .bounds import admissible_raw
from .charges import z_alpha_beta
from .core import ClassVector, Q, StabError, fmt_q


@dataclass(frozen=True)
class LinearForm3:
    coeffs: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Q(x) for x in self.coeffs))

    def __call__(self, c: ClassVector) -> Fraction:
        a, b, e = self.coeffs
        return a * c.n + b * c.d + e * c.k

    def to_json(self) -> list[str]:
        return [fmt_q(x) for x in self.coeffs]


@dataclass(frozen=True)
class QuadraticForm3:
    """Symmetric form v^T M v on (n, d, k)."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(Q(x) for x in row) for row in self.matrix)
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise StabError("quadratic form needs a 3x3 matrix")
        for i in range(3):
            for j in range(i):
                if m[i][j] != m[j][i]:
                    raise StabError("matrix must be symmetric")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_monomials(cls, nn=0, dd=0, kk=0, nd=0, nk=0, dk=0) -> "QuadraticForm3":
        """Build from coefficients of n^2, d^2, k^2, nd, nk, dk."""
        nn, dd, kk, nd, nk, dk = (Q(x) for x in (nn, dd, kk, nd, nk, dk))
        return cls(((nn, nd / 2, nk / 2), (nd / 2, dd, dk / 2), (nk / 2, dk / 2, kk)))

    def __call__(self, c: ClassVector) -> Fraction:
        v = (c.n, c.d, c.k)
        m = self.matrix
        return sum(m[i][j] * v[i] * v[j] for i in range(3) for j in range(3))

    def monomials(self) -> tuple[Fraction, ...]:
        """Coefficients of n^2, d^2, k^2, nd, nk, dk."""
        m = self.matrix
        return (m[0][0], m[1][1], m[2][2], 2 * m[0][1], 2 * m[0][2], 2 * m[1][2])


def _check_pos_alpha(alpha) -> Fraction:
    alpha = Q(alpha)
    if alpha <= 0:
        raise StabError(f"alpha must be > 0, got {alpha}")
    return alpha


def q_alpha_form(alpha) -> QuadraticForm3:
    alpha = _check_pos_alpha(alpha)
    if alpha <= 1:
        a2 = alpha * alpha
        return QuadraticForm3.from_monomials(nn=(1 - a2) / a2, dd=(1 - a2) / a2, dk=2 / alpha)
    return QuadraticForm3.from_monomials(kk=alpha * alpha - 1, dk=2 * alpha)


def _q_alpha_scaled(n: int, d: int, k: int, a: int, b: int) -> int:
    """Integer multiple of Q_alpha at alpha = a/b with the same sign.

    alpha <= 1: a^2 Q = (b^2 - a^2)(n^2 + d^2) + 2ab dk.
    alpha >= 1: b^2 Q = (a^2 - b^2) k^2 + 2ab dk.
    """
    if a <= b:
        return (b * b - a * a) * (n * n + d * d) + 2 * a * b * d * k
    return (a * a - b * b) * k * k + 2 * a * b * d * k


def q_alpha(c: ClassVector, alpha) -> Fraction:
    """Two-branch support form; both branches give 2dk at alpha = 1."""
    alpha = _check_pos_alpha(alpha)
    a, b = alpha.numerator, alpha.denominator
    s = _q_alpha_scaled(c.n, c.d, c.k, a, b)
    return Fraction(s, a * a) if a <= b else Fraction(s, b * b)


def q_alpha_branches(c: ClassVector, alpha) -> tuple[Fraction, Fraction]:
    """Both branch formulas evaluated without regard to range."""
    alpha = _check_pos_alpha(alpha)
    n, d, k = c
    low = ((1 - alpha**2) * (n * n + d * d) + 2 * alpha * d * k) / alpha**2
    high = (alpha**2 - 1) * k * k + 2 * alpha * d * k
    return low, high


def delta(c: ClassVector, p, q, u) -> Fraction:
    """k(d + n - k) + p d^2 + q n^2 + u k^2."""
    p, q, u = Q(p), Q(q), Q(u)
    n, d, k = c
    return k * (d + n - k) + p * d * d + q * n * n + u * k * k


def delta_form(p, q, u) -> QuadraticForm3:
    p, q, u = Q(p), Q(q), Q(u)
    return QuadraticForm3.from_monomials(nn=q, dd=p, kk=u - 1, nk=1, dk=1)


def delta_forms(alpha, beta, p, q, u, A=0) -> tuple[LinearForm3, LinearForm3]:
    """(Delta_R, Delta_I) with Delta = Re(Z_alpha^beta) Delta_R + Im(Z_alpha^beta) Delta_I.

    ``A`` is the one free parameter of the solution family.
    """
    alpha, beta, p, q, u, A = (Q(x) for x in (alpha, beta, p, q, u, A))
    if alpha <= 0:
        raise StabError("alpha must be > 0")
    if p != (alpha + 1 - u) / alpha**2:
        raise StabError(
            f"no solution: p = {fmt_q(p)} but (alpha+1-u)/alpha^2 = {fmt_q((alpha + 1 - u) / alpha**2)}"
        )
    dr = LinearForm3((A, -p, p * alpha - 1))
    di = LinearForm3((q - A * beta, A + p * beta, 1 + A * alpha - (p * alpha - 1) * beta))
    return dr, di


def decomposition_residual(alpha, beta, p, q, u, A=0) -> tuple[Fraction, ...]:
    """Monomial coefficients of Re*Delta_R + Im*Delta_I - Delta (n^2, d^2, k^2, nd, nk, dk).

    Computed by expanding the product of linear forms symbolically; the
    zero tuple means the identity holds as polynomials.
    """
    alpha, beta = Q(alpha), Q(beta)
    dr, di = delta_forms(alpha, beta, p, q, u, A)
    # Re(Z_alpha^beta) = beta n - d - alpha k,  Im = n
    re = (beta, Fraction(-1), -alpha)
    im = (Fraction(1), Fraction(0), Fraction(0))
    prod = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            prod[i][j] += re[i] * dr.coeffs[j] + im[i] * di.coeffs[j]
    lhs = (
        prod[0][0],
        prod[1][1],
        prod[2][2],
        prod[0][1] + prod[1][0],
        prod[0][2] + prod[2][0],
        prod[1][2] + prod[2][1],
    )
    rhs = delta_form(p, q, u).monomials()
    return tuple(x - y for x, y in zip(lhs, rhs))


def decomposition_holds_at(c: ClassVector, alpha, beta, p, q, u, A=0) -> bool:
    dr, di = delta_forms(alpha, beta, p, q, u, A)
    z = z_alpha_beta(c, alpha, beta)
    return z.re * dr(c) + z.im * di(c) == delta(c, p, q, u)


def q_dagger(c: ClassVector, r, t, base: QuadraticForm3, disc: QuadraticForm3) -> Fraction:
    """r Q + t Delta."""
    r, t = Q(r), Q(t)
    if r <= 0 or t <= 0:
        raise StabError("q_dagger needs r > 0 and t > 0")
    return r * base(c) + t * disc(c)


# -- support certificate -----------------------------------------------------


@dataclass(frozen=True)
class SupportCertificate:
    alpha: Fraction
    beta: Fraction
    bound: int
    checked: int
    kernel_checked: int
    violations: tuple[tuple[str, tuple[int, int, int]], ...]
    ratio_min: Fraction | None
    ratio_witness: tuple[int, int, int] | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "alpha": fmt_q(self.alpha),
            "beta": fmt_q(self.beta),
            "bound": self.bound,
            "checked": self.checked,
            "kernel_checked": self.kernel_checked,
            "violations": [{"kind": k, "class": list(c)} for k, c in self.violations],
            "ratio_min": None if self.ratio_min is None else fmt_q(self.ratio_min),
            "ratio_witness": None if self.ratio_witness is None else list(self.ratio_witness),
            "passed": self.passed,
            "notes": list(self.notes),
        }


def _scan_slab(n: int, a: int, b: int, bound: int):
    """Scan all admissible (n, d, k) for one n. Integer arithmetic only.

    Returns (checked, violations, best ratio as (num, den), witness).
    """
    checked = 0
    bad: list[tuple[str, tuple[int, int, int]]] = []
    m2 = min(a * a, b * b)
    best = None
    witness = None
    for d in range(-bound, bound + 1):
        for k in range(0, bound + 1):
            if n == 0 and d == 0 and k == 0:
                continue
            if not admissible_raw(n, d, k):
                continue
            checked += 1
            if _q_alpha_scaled(n, d, k, a, b) < 0:
                bad.append(("q_alpha_negative", (n, d, k)))
            # |Z|^2 b^2 = (b d + a k)^2 + b^2 n^2 ; compare against min(a^2, b^2) |v|^2
            num = (b * d + a * k) ** 2 + b * b * n * n
            den = b * b * (n * n + d * d + k * k)
            if num * b * b < m2 * den:
                bad.append(("ratio_below_min", (n, d, k)))
            if best is None or num * best[1] < best[0] * den:
                best = (num, den)
                witness = (n, d, k)
    return checked, bad, best, witness


def support_certificate(alpha, beta=0, bound: int = 30, workers: int | None = None) -> SupportCertificate:
    """Check the support-property inequalities on a finite lattice box.

    (i) Q_alpha >= 0 on admissible classes, (ii) Q_alpha < 0 on nonzero
    kernel classes of Z_alpha, (iii) |Z_alpha|^2 >= min(alpha^2, 1) |v|^2 on
    admissible classes. ``beta`` only shears the real part and changes none
    of these.
    """
    alpha, beta = _check_pos_alpha(alpha), Q(beta)
    if bound < 1:
        raise StabError("bound must be >= 1")
    a, b = alpha.numerator, alpha.denominator
    slabs = ordered_map(partial(_scan_slab, a=a, b=b, bound=bound), range(0, bound + 1), workers)
    checked = 0
    violations: list[tuple[str, tuple[int, int, int]]] = []
    best = None
    witness = None
    for c, bad, br, w in slabs:
        checked += c
        violations.extend(bad)
        if br is not None and (best is None or br[0] * best[1] < best[0] * br[1]):
            best, witness = br, w
    kernel_checked = 0
    for m in range(-bound, bound + 1):
        if m == 0:
            continue
        n, d, k = 0, -a * m, b * m
        if abs(d) > bound or abs(k) > bound:
            continue
        kernel_checked += 1
        if _q_alpha_scaled(n, d, k, a, b) >= 0:
            violations.append(("kernel_nonnegative", (n, d, k)))
    violations.sort(key=lambda v: (v[1], v[0]))
    ratio_min = None if best is None else Fraction(best[0], best[1])
    return SupportCertificate(alpha, beta, bound, checked, kernel_checked, tuple(violations), ratio_min, witness)
