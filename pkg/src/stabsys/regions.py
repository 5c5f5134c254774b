"""Parameter regions, the Bogomolov-Gieseker coefficient solver and orbits.

The tilted charge with parameters (alpha, beta, gamma) is a stability
condition on the region S; membership in S is decided by the existence of
a t > 0 for which the dagger construction reproduces the tilted charge.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .charges import ChargeFamily
from .core import ClassVector, Q, StabError, fmt_q


@dataclass(frozen=True)
class ParamTriple:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, Q(getattr(self, name)))

    @property
    def ps(self) -> bool:
        return in_PS(self)

    @property
    def s(self) -> bool:
        return in_S(self)


def _triple(p, beta=None, gamma=None) -> ParamTriple:
    if isinstance(p, ParamTriple):
        return p
    if beta is None:
        p, beta, gamma = p
    return ParamTriple(p, beta, gamma)


def in_PS(p: ParamTriple | tuple) -> bool:
    p = _triple(p)
    return p.alpha >= 0 and p.beta >= 0 and p.gamma > 1


def s_threshold(alpha, beta) -> Fraction:
    """Lower bound on gamma for membership in S (beta not in {0, 1}).

    Non-strict for beta > 1, strict for beta < 1.
    """
    alpha, beta = Q(alpha), Q(beta)
    if alpha == 0:
        raise StabError("S threshold undefined for alpha = 0")
    if beta == 1:
        raise StabError("S threshold undefined for beta = 1")
    if beta > 1:
        return (beta**2 + 2 * alpha * beta - alpha) / (alpha * (beta - 1))
    return 1 + beta * (1 - alpha) / (2 * alpha)


def in_S(p: ParamTriple | tuple) -> bool:
    p = _triple(p)
    if not in_PS(p):
        return False
    if p.beta in (0, 1):
        return False
    if p.alpha == 0:
        raise StabError("S membership undefined for alpha = 0 with beta != 0")
    thr = s_threshold(p.alpha, p.beta)
    if p.beta > 1:
        return p.gamma >= thr
    return p.gamma > thr


def on_S_boundary(p: ParamTriple | tuple) -> bool:
    """True when gamma sits exactly on the S threshold."""
    p = _triple(p)
    if p.alpha <= 0 or p.beta in (0, 1):
        return False
    return p.gamma == s_threshold(p.alpha, p.beta)


@dataclass(frozen=True)
class BGCoefficients:
    """Solution of the dagger-charge matching problem at a given t.

    Delta = Re(Z_alpha^beta) (A n + B d + C k) + Im(Z_alpha^beta) (D n + E d + F k)
    with Delta = k(d + n - k) + p d^2 + q n^2 + u k^2.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    t: Fraction
    p: Fraction
    q: Fraction
    u: Fraction
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    E: Fraction
    F: Fraction

    @property
    def q_nonneg(self) -> bool:
        return self.q >= 0

    @property
    def u_ge_1(self) -> bool:
        return self.u >= 1

    @property
    def p_nonneg(self) -> bool:
        # equivalent to u <= alpha + 1
        return self.p >= 0

    @property
    def t_pos(self) -> bool:
        return self.t > 0

    @property
    def valid(self) -> bool:
        return self.q_nonneg and self.u_ge_1 and self.p_nonneg and self.t_pos

    def real_coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        """Coefficients on (n, d, k) of Re of the dagger charge."""
        t = self.t
        return (1 + t * self.D, t * self.E, t * self.F)

    def imag_coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (-self.beta, Fraction(1), self.alpha)

    def reconstructs_tilt(self) -> bool:
        """Re = gamma n + d - k and Im = d + alpha k - beta n, coefficient-wise."""
        return self.real_coefficients() == (self.gamma, 1, -1) and self.imag_coefficients() == (
            -self.beta,
            1,
            self.alpha,
        )

    def family(self) -> ChargeFamily:
        return ChargeFamily.dagger(self.alpha, self.beta, self.t, self.D, self.E, self.F)

    def flags(self) -> dict:
        return {
            "q_nonneg": self.q_nonneg,
            "u_ge_1": self.u_ge_1,
            "p_nonneg": self.p_nonneg,
            "t_pos": self.t_pos,
            "valid": self.valid,
            "reconstructs_tilt": self.reconstructs_tilt(),
        }

    def to_json(self) -> dict:
        out = {
            name: fmt_q(getattr(self, name))
            for name in ("alpha", "beta", "gamma", "t", "p", "q", "u", "A", "B", "C", "D", "E", "F")
        }
        out["flags"] = self.flags()
        return out


def bg_solve(alpha, beta, gamma, t) -> BGCoefficients:
    """Solve for (p, q, u, A, ..., F) making the dagger charge equal the tilted one."""
    alpha, beta, gamma, t = Q(alpha), Q(beta), Q(gamma), Q(t)
    if alpha <= 0 or beta <= 0 or t <= 0:
        raise StabError("bg_solve needs alpha > 0, beta > 0 and t > 0")
    u = (t * beta * (alpha + 2) - alpha * (alpha + t + 1)) / (2 * t * beta)
    p = (alpha - u + 1) / alpha**2
    A = (alpha - t * (beta + 1) - 1) / (2 * t * alpha)
    q = (2 * alpha * (gamma - 1) + beta * (alpha - t * (beta + 1) - 1)) / (2 * t * alpha)
    B = -p
    C = p * alpha - 1
    D = q - A * beta
    E = A + p * beta
    F = 1 + A * alpha - (p * alpha - 1) * beta
    return BGCoefficients(alpha, beta, gamma, t, p, q, u, A, B, C, D, E, F)


@dataclass(frozen=True)
class TWindow:
    """Interval of admissible t; endpoints exact, closedness explicit."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool
    notes: tuple[str, ...] = field(default=())

    def contains(self, t) -> bool:
        t = Q(t)
        lo_ok = t >= self.lo if self.lo_closed else t > self.lo
        hi_ok = t <= self.hi if self.hi_closed else t < self.hi
        return lo_ok and hi_ok

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def to_json(self) -> list[str]:
        return [fmt_q(self.lo), fmt_q(self.hi)]


BETA_LT_1_NOTE = (
    "beta < 1: window follows the printed bound t <= (alpha+1)/(1-beta); "
    "the condition t(beta-1) >= alpha+1 has no solution t > 0 here, so u >= 1 fails"
)


def q_upper_bound(alpha, beta, gamma) -> Fraction:
    """Largest t keeping q >= 0."""
    alpha, beta, gamma = Q(alpha), Q(beta), Q(gamma)
    return (2 * alpha * (gamma - 1) + beta * (alpha - 1)) / (beta * (beta + 1))


def t_window(alpha, beta, gamma) -> TWindow | None:
    """Admissible t for the given parameters, or None when empty."""
    alpha, beta, gamma = Q(alpha), Q(beta), Q(gamma)
    if alpha <= 0 or beta <= 0:
        raise StabError("t_window needs alpha > 0 and beta > 0")
    if beta == 1:
        raise StabError("beta = 1: no t satisfies t(beta-1) >= alpha+1")
    hi = q_upper_bound(alpha, beta, gamma)
    if beta > 1:
        lo = (alpha + 1) / (beta - 1)
        if lo > hi:
            return None
        return TWindow(lo, hi, True, True)
    if hi <= 0:
        return None
    hi = min(hi, (alpha + 1) / (1 - beta))
    return TWindow(Fraction(0), hi, False, True, (BETA_LT_1_NOTE,))


def region_report(alpha, beta, gamma) -> dict:
    p = ParamTriple(alpha, beta, gamma)
    notes: list[str] = []
    ps = in_PS(p)
    try:
        s = in_S(p)
    except StabError as exc:
        s = False
        notes.append(str(exc))
    if on_S_boundary(p):
        notes.append("gamma on the S threshold")
    window = None
    if p.alpha > 0 and p.beta > 0:
        try:
            w = t_window(p.alpha, p.beta, p.gamma)
        except StabError as exc:
            notes.append(str(exc))
        else:
            if w is not None:
                window = w.to_json()
                notes.extend(w.notes)
    return {"ps": ps, "s": s, "t_window": window, "notes": notes}


# -- discreteness ------------------------------------------------------------


class Irrational:
    """Marker for a non-rational parameter value (e.g. ``Irrational("sqrt2")``)."""

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return f"Irrational({self.name!r})"


def is_discrete_im(alpha, beta) -> bool:
    """Im of the tilted charge has discrete image iff alpha, beta are rational."""
    return not (isinstance(alpha, Irrational) or isinstance(beta, Irrational))


def min_positive_im(alpha, beta) -> Fraction:
    """Smallest positive value of d + alpha k - beta n over Z^3."""
    alpha, beta = Q(alpha), Q(beta)
    if alpha < 0:
        raise StabError("alpha must be >= 0")
    aa, ba = alpha.numerator, alpha.denominator
    ab, bb = beta.numerator, beta.denominator
    g = gcd(gcd(ba * bb, aa * bb), ab * ba)
    return Fraction(g, ba * bb)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a x + b y = g >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def min_positive_im_witness(alpha, beta) -> ClassVector:
    """A class (n, d, k) whose Im equals :func:`min_positive_im` (Bezout)."""
    alpha, beta = Q(alpha), Q(beta)
    if alpha < 0:
        raise StabError("alpha must be >= 0")
    aa, ba = alpha.numerator, alpha.denominator
    ab, bb = beta.numerator, beta.denominator
    # Im * ba*bb = (ba*bb) d + (aa*bb) k - (ab*ba) n
    g1, x1, y1 = _egcd(ba * bb, aa * bb)
    _, x2, z2 = _egcd(g1, ab * ba)
    return ClassVector(-z2, x2 * x1, x2 * y1)


# -- GL+(2, R) orbits --------------------------------------------------------


@dataclass(frozen=True)
class OrbitVerdict:
    equivalent: bool
    witness: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]] | None = None
    reason: str = ""

    def to_json(self) -> dict:
        w = None
        if self.witness is not None:
            w = [[fmt_q(x) for x in row] for row in self.witness]
        return {"equivalent": self.equivalent, "witness": w, "reason": self.reason}


def _det2(a, b, c, d):
    return a * d - b * c


def orbit_compare(source: ChargeFamily, target: ChargeFamily) -> OrbitVerdict:
    """Look for T in GL+(2) with T o Z_source = Z_target on Z^3."""
    (sr, si), (tr, ti) = source.matrix(), target.matrix()
    cols = None
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if _det2(sr[i], sr[j], si[i], si[j]) != 0:
            cols = (i, j)
            break
    if cols is None:
        return OrbitVerdict(False, None, "source charge has rank < 2")
    i, j = cols
    det = _det2(sr[i], sr[j], si[i], si[j])
    # inverse of [[sr_i, sr_j], [si_i, si_j]]
    inv = ((si[j] / det, -sr[j] / det), (-si[i] / det, sr[i] / det))

    def row(target_row):
        x, y = target_row[i], target_row[j]
        # target_row restricted = (T_row) @ S  =>  T_row = restricted @ S^-1
        return (x * inv[0][0] + y * inv[1][0], x * inv[0][1] + y * inv[1][1])

    T = (row(tr), row(ti))
    for col in range(3):
        if T[0][0] * sr[col] + T[0][1] * si[col] != tr[col]:
            return OrbitVerdict(False, None, "linear system inconsistent")
        if T[1][0] * sr[col] + T[1][1] * si[col] != ti[col]:
            return OrbitVerdict(False, None, "linear system inconsistent")
    if _det2(T[0][0], T[0][1], T[1][0], T[1][1]) <= 0:
        return OrbitVerdict(False, None, "unique solution has det <= 0")
    return OrbitVerdict(True, T, "")
