"""Walls and chambers in the gamma direction for the tilted charge."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from ._parallel import ordered_map
from .bounds import admissible_raw
from .charges import mu_alpha, z_tilt
from .core import INFINITY, ClassVector, Q, Slope, StabError, fmt_q, is_parallel
from .formal import OP, V1, FormalCategory, TiltedRep, destabilizer_constraints_minimal, hn_filtration
from .lattice import Box

INCREASING = "Increasing"
DECREASING = "Decreasing"
CONSTANT = "Constant"

NUMERICAL = "Numerical"
PSEUDO = "Pseudo"
ACTUAL_CANDIDATE = "ActualCandidate"

MINIMAL = "MinimalObject"
POINT_SYSTEM = "PointSystem"
SHIFTED = "ShiftedStable"

STABLE = "Stable"
UNSTABLE = "Unstable"


def _im(c: ClassVector, alpha: Fraction, beta: Fraction) -> Fraction:
    return c.d + alpha * c.k - beta * c.n


@dataclass(frozen=True)
class GammaLine:
    """f(gamma) = m gamma + b."""

    m: Fraction
    b: Fraction

    def __call__(self, gamma) -> Fraction:
        return self.m * Q(gamma) + self.b

    @property
    def monotonicity(self) -> str:
        if self.m > 0:
            return INCREASING
        if self.m < 0:
            return DECREASING
        return CONSTANT

    def root(self) -> Fraction | None:
        return None if self.m == 0 else -self.b / self.m


def slope_diff_fn(a: ClassVector, b: ClassVector, alpha, beta) -> GammaLine:
    """mu_tilt(a) - mu_tilt(b) as a linear function of gamma."""
    alpha, beta = Q(alpha), Q(beta)
    ia, ib = _im(a, alpha, beta), _im(b, alpha, beta)
    for c, i in ((a, ia), (b, ib)):
        if i == 0:
            raise StabError(f"class {c} has Im = 0: its tilted slope is infinite")
    # mu_tilt(c) = -(d - k + gamma n) / I
    m = Fraction(-a.n) / ia + Fraction(b.n) / ib
    bb = Fraction(-(a.d - a.k)) / ia + Fraction(b.d - b.k) / ib
    return GammaLine(m, bb)


def numerical_wall(a: ClassVector, b: ClassVector, alpha, beta) -> Fraction | None:
    """gamma at which a and b have equal tilted slope, if unique."""
    if is_parallel(a, b):
        raise StabError(f"{a} and {b} are parallel; walls need non-parallel classes")
    alpha, beta = Q(alpha), Q(beta)
    i, i2 = _im(a, alpha, beta), _im(b, alpha, beta)
    if i == 0 or i2 == 0:
        raise StabError("numerical wall needs both Im values nonzero")
    den = b.n * i - a.n * i2
    if den == 0:
        return None
    return ((a.d - a.k) * i2 - (b.d - b.k) * i) / den


def actual_wall_gamma0(c: ClassVector, alpha, beta) -> Fraction:
    """(beta n - d(alpha+1)) / (alpha n)."""
    alpha, beta = Q(alpha), Q(beta)
    if c.n <= 0:
        raise StabError("actual wall formula needs n > 0")
    if alpha <= 0:
        raise StabError("actual wall formula needs alpha > 0")
    return (beta * c.n - c.d * (alpha + 1)) / (alpha * c.n)


def large_gamma_limit(c: ClassVector, alpha, beta) -> Slope:
    """lim mu_tilt / gamma = -1/(mu_alpha - beta)."""
    alpha, beta = Q(alpha), Q(beta)
    if c.n == 0:
        raise StabError("large-gamma limit needs n != 0")
    mu = mu_alpha(c, alpha).value
    if mu == beta:
        raise StabError("mu_alpha = beta: the limit is infinite")
    return Slope(-1 / (mu - beta))


# -- destabilizer enumeration ------------------------------------------------


def _tilt_slope_ge(f: tuple[int, int, int], c: ClassVector, alpha, beta, gamma) -> bool:
    """mu_tilt(f) >= mu_tilt(c), both with Im > 0."""
    zf = z_tilt(ClassVector(*f), alpha, beta, gamma)
    zc = z_tilt(c, alpha, beta, gamma)
    return -zf.re * zc.im >= -zc.re * zf.im


def default_mode(c: ClassVector) -> str:
    if c in (ClassVector(0, 1, 0), ClassVector(0, 0, 1)):
        return MINIMAL
    if c == ClassVector(0, 1, 1):
        return POINT_SYSTEM
    if c.n < 0:
        return SHIFTED
    raise StabError(f"no destabilizer model for class {c}")


def minimal_candidates_via_system(kind: str, alpha, beta, gamma, bound: int, exclude_extremal: bool = False,
                                  weak: bool = True):
    """Second route for minimal objects: run the inequality system over a full cube."""
    system = destabilizer_constraints_minimal(kind, alpha, beta, gamma, stable=weak)
    out = []
    for pt in system.points(Box.cube(bound)):
        n, d, k = pt
        if exclude_extremal and k == d + n:
            continue
        out.append(pt)
    return out


def _minimal_shape(kind: str, alpha, beta, bound: int, exclude_extremal: bool):
    """Subobject shapes of a minimal object (gamma-free part of the system)."""
    out = []
    for n in range(1, bound + 1):
        for k in range(0, bound + 1):
            x = n * beta - alpha * k
            if kind == OP:
                lo = hi = (x.numerator // x.denominator) + 1
            else:
                # d + alpha(k-1) <= n beta < d + alpha k  ->  x < d <= x + alpha
                lo = (x.numerator // x.denominator) + 1
                y = x + alpha
                hi = y.numerator // y.denominator
            for d in range(max(lo, -bound), min(hi, bound) + 1):
                if not admissible_raw(n, d, k):
                    continue
                if exclude_extremal and k == d + n:
                    continue
                out.append((n, d, k))
    return out


def _point_system_shape(alpha, beta, bound: int, exclude_extremal: bool):
    """Subobjects of |O_P| = (0,1,1) in the tilted heart (numerical shape)."""
    out = [(0, 1, 0)]
    out.extend(_minimal_shape(OP, alpha, beta, bound, exclude_extremal))
    for n in range(1, bound + 1):
        for k in range(1, bound + 1):
            for d in range(-bound, bound + 1):
                if k > d + n:
                    continue
                if not (d + alpha * k > n * beta):
                    continue
                if not (d - 1 + alpha * (k - 1) <= n * beta):
                    continue
                out.append((n, d, k))
    return sorted(set(out))


def _shifted_shape_slab(kp: int, e: ClassVector, alpha, beta, bound: int, complete: bool):
    out = []
    for np_ in range(0, bound + 1):
        for dp in range(0, bound + 1):
            if np_ == 0 and dp == 0 and kp == 0:
                continue
            if dp + alpha * kp - beta * np_ <= 0:
                continue
            if (np_ > 0 or complete) and kp > dp + np_:
                continue
            tn, td, tk = e.n + np_, e.d + dp, e.k + kp
            if tn <= 0 or td + alpha * tk > beta * tn:
                continue
            out.append((np_, dp, kp))
    return out


def candidate_shapes(c: ClassVector, alpha, beta, bound: int, mode: str | None = None,
                     exclude_extremal: bool = False, complete: bool = False,
                     workers: int | None = None) -> list[tuple[int, int, int]]:
    """Classes of possible subobjects of an object of class ``c`` (gamma-free)."""
    alpha, beta = Q(alpha), Q(beta)
    mode = mode or default_mode(c)
    if mode == MINIMAL:
        kind = OP if c == ClassVector(0, 1, 0) else V1 if c == ClassVector(0, 0, 1) else None
        if kind is None:
            raise StabError(f"{c} is not a minimal class")
        return _minimal_shape(kind, alpha, beta, bound, exclude_extremal)
    if mode == POINT_SYSTEM:
        if c != ClassVector(0, 1, 1):
            raise StabError("point-system mode is for the class (0,1,1)")
        return _point_system_shape(alpha, beta, bound, exclude_extremal)
    if mode == SHIFTED:
        e = -c
        if e.n <= 0:
            raise StabError("shifted mode needs c = -E with rank(E) > 0")
        mu = mu_alpha(e, alpha).value
        if mu >= beta:
            raise StabError("shifted mode needs mu_alpha(E) < beta")
        slabs = ordered_map(
            partial(_shifted_shape_slab, e=e, alpha=alpha, beta=beta, bound=bound, complete=complete),
            range(0, bound + 1),
            workers,
        )
        return sorted(pt for slab in slabs for pt in slab)
    raise StabError(f"unknown scan mode {mode!r}")


def destabilizer_scan(c, alpha, beta, gamma, bound: int, mode: str | None = None,
                      exclude_extremal: bool = False, complete: bool = False,
                      workers: int | None = None) -> list[tuple[int, int, int]]:
    """Candidate subobject classes whose tilted slope weakly exceeds that of ``c``."""
    c = ClassVector.of(c)
    alpha, beta, gamma = Q(alpha), Q(beta), Q(gamma)
    if not (alpha >= 0 and beta >= 0 and gamma > 1):
        raise StabError("parameters must lie in PS")
    if bound < 1:
        raise StabError("bound must be >= 1")
    shapes = candidate_shapes(c, alpha, beta, bound, mode, exclude_extremal, complete, workers)
    return [f for f in shapes if _tilt_slope_ge(f, c, alpha, beta, gamma)]


# -- chambers ----------------------------------------------------------------


@dataclass(frozen=True)
class WallReport:
    gamma0: Fraction | None
    kind: str
    pair: tuple[ClassVector, ClassVector]
    in_range: bool
    monotonicity: str
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "gamma0": None if self.gamma0 is None else fmt_q(self.gamma0),
            "kind": self.kind,
            "pair": [self.pair[0].as_list(), self.pair[1].as_list()],
            "in_range": self.in_range,
            "monotonicity": self.monotonicity,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class Chamber:
    lo: Fraction
    hi: Fraction
    sample: Fraction
    verdict: str
    destabilizers: tuple[tuple[int, int, int], ...]

    def to_json(self) -> dict:
        return {
            "lo": fmt_q(self.lo),
            "hi": fmt_q(self.hi),
            "sample": fmt_q(self.sample),
            "verdict": self.verdict,
            "destabilizers": [list(x) for x in self.destabilizers],
        }


@dataclass(frozen=True)
class ChamberScan:
    cls: ClassVector
    alpha: Fraction
    beta: Fraction
    gamma_range: tuple[Fraction, Fraction]
    bound: int
    mode: str
    walls: tuple[WallReport, ...]
    chambers: tuple[Chamber, ...]
    monotone: bool

    def wall_values(self) -> list[Fraction]:
        return sorted({w.gamma0 for w in self.walls})

    def to_json(self) -> dict:
        return {
            "class": self.cls.as_list(),
            "alpha": fmt_q(self.alpha),
            "beta": fmt_q(self.beta),
            "gamma_range": [fmt_q(x) for x in self.gamma_range],
            "bound": self.bound,
            "mode": self.mode,
            "walls": [w.to_json() for w in self.walls],
            "chambers": [ch.to_json() for ch in self.chambers],
            "monotone": self.monotone,
        }


def _sample_point(lo: Fraction, hi: Fraction) -> Fraction:
    mid = (lo + hi) / 2
    s = mid.limit_denominator(10**6)
    return s if lo < s < hi else mid


def chamber_scan(c, alpha, beta, gamma_range, bound: int, mode: str | None = None,
                 exclude_extremal: bool = True, complete: bool = False,
                 workers: int | None = None) -> ChamberScan:
    """Walls of ``c`` inside the open gamma range and a verdict per chamber."""
    c = ClassVector.of(c)
    alpha, beta = Q(alpha), Q(beta)
    lo, hi = (Q(x) for x in gamma_range)
    if not lo < hi:
        raise StabError("empty gamma range")
    if lo < 1:
        raise StabError("gamma range must lie in (1, inf)")
    mode = mode or default_mode(c)
    shapes = candidate_shapes(c, alpha, beta, bound, mode, exclude_extremal, complete, workers)
    walls: dict[tuple, WallReport] = {}
    for f in shapes:
        fc = ClassVector(*f)
        if is_parallel(fc, c) or _im(fc, alpha, beta) == 0:
            continue
        g0 = numerical_wall(fc, c, alpha, beta)
        if g0 is None or not lo < g0 < hi:
            continue
        line = slope_diff_fn(fc, c, alpha, beta)
        walls[(g0, f)] = WallReport(g0, NUMERICAL, (fc, c), g0 > 1, line.monotonicity)
    ordered = [walls[key] for key in sorted(walls)]
    cuts = [lo] + sorted({w.gamma0 for w in ordered}) + [hi]
    chambers = []
    for a, b in zip(cuts, cuts[1:]):
        s = _sample_point(a, b)
        bad = tuple(f for f in shapes if _tilt_slope_ge(f, c, alpha, beta, s))
        chambers.append(Chamber(a, b, s, UNSTABLE if bad else STABLE, bad))
    return ChamberScan(c, alpha, beta, (lo, hi), bound, mode, tuple(ordered), tuple(chambers),
                       _downward_closed(chambers))


def _downward_closed(chambers: list[Chamber]) -> bool:
    """Each destabilizer's chamber set must be an initial segment (ordered by gamma)."""
    seen_gap: set = set()
    present_before: set = set()
    for ch in chambers:
        cur = set(ch.destabilizers)
        if cur & seen_gap:
            return False
        seen_gap |= present_before - cur
        present_before |= cur
    return True


def annotate_walls(scan: ChamberScan, cat: FormalCategory, oid: str) -> list[WallReport]:
    """Upgrade wall kinds using fixture metadata for the object E with c = -[E].

    Pseudo when the completion of E (an object containing E with quotient
    (0,0,m)) lies in F; ActualCandidate when the completion is additionally
    mu-stable and beta < delta (or n = 1).
    """
    e = cat[oid]
    if e.cls != -scan.cls:
        raise StabError(f"object {oid} has class {e.cls}, scan is for {scan.cls}")
    completion = None
    for o in cat.objects.values():
        if oid in o.subobject_ids:
            q = o.cls - e.cls
            if q.n == 0 and q.d == 0 and q.k > 0 and o.complete:
                completion = o
                break
    out = []
    for w in scan.walls:
        kind, notes = NUMERICAL, []
        if e.complete:
            notes.append("E complete: no wall expected")
        elif completion is None:
            notes.append("no completion recorded in fixture")
        elif w.pair[0] == completion.cls - e.cls and w.gamma0 == actual_wall_gamma0(e.cls, scan.alpha, scan.beta):
            hn = hn_filtration(cat, completion.id, scan.alpha)
            in_free = all(s.value is not None and s.value <= scan.beta for s in hn.slopes)
            if in_free:
                kind = PSEUDO
                if completion.mu_stable and (e.cls.n == 1 or (completion.delta is not None and scan.beta < completion.delta)):
                    kind = ACTUAL_CANDIDATE
                elif completion.delta is None and e.cls.n >= 2:
                    notes.append("delta unrecorded: actual-wall hypothesis unchecked")
        out.append(WallReport(w.gamma0, kind, w.pair, w.in_range, w.monotonicity, tuple(notes)))
    return out


# -- set B -------------------------------------------------------------------

SHIFT_OF_SEMISTABLE_FREE = "ShiftOfSemistableFree"
SEMISTABLE_TORSION_SIDE = "SemistableTorsionSide"
NOT_IN_B = "NotInB"


def b_classify(rep: TiltedRep, cat: FormalCategory, alpha, beta=None) -> str:
    """Membership in B: exactly one cohomology, and it is mu_alpha-semistable."""
    if rep.f_part is not None and rep.t_part is None:
        return SHIFT_OF_SEMISTABLE_FREE if len(hn_filtration(cat, rep.f_part, alpha)) == 1 else NOT_IN_B
    if rep.t_part is not None and rep.f_part is None:
        return SEMISTABLE_TORSION_SIDE if len(hn_filtration(cat, rep.t_part, alpha)) == 1 else NOT_IN_B
    return NOT_IN_B


__all__ = [
    "GammaLine", "WallReport", "Chamber", "ChamberScan", "slope_diff_fn", "numerical_wall",
    "actual_wall_gamma0", "large_gamma_limit", "destabilizer_scan", "candidate_shapes",
    "chamber_scan", "annotate_walls", "b_classify", "INFINITY",
]
