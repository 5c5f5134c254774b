"""Finite formal models of the category of coherent systems.

A fixture lists objects with their classes and their (transitively closed)
proper nonzero subobjects. Subobjects of a quotient X/S are read off the
lattice interval [S, X]. HN filtrations, torsion-pair cuts and tilted-heart
membership are computed on these finite lattices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .bounds import admissible_raw
from .charges import mu_alpha
from .core import INFINITY, ClassVector, Q, Slope, StabError, compare_slopes, fmt_q
from .lattice import ConstraintSystem, Ineq, le, lt


class FixtureError(StabError):
    """Malformed fixture: dangling ids, cycles, bad quotient classes."""


class Inconclusive(StabError):
    """A check whose hypotheses cannot be confirmed from the fixture."""


@dataclass(frozen=True)
class FormalObject:
    id: str
    cls: ClassVector
    subobject_ids: frozenset[str] = frozenset()
    base_points: frozenset[str] = frozenset()
    complete: bool = False
    injective: bool = True
    mu_stable: bool | None = None
    delta: Fraction | None = None


@dataclass(frozen=True)
class Elementary:
    source: str
    target: str
    along: ClassVector
    psi1_nonzero: bool | None


@dataclass
class FormalCategory:
    objects: dict[str, FormalObject]
    elementary: list[Elementary] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        self._validate()

    # -- construction --------------------------------------------------------

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "FormalCategory":
        objs: dict[str, FormalObject] = {}
        for raw in data.get("objects", []):
            oid = raw["id"]
            if oid in objs:
                raise FixtureError(f"duplicate object id {oid!r}")
            delta = raw.get("delta")
            objs[oid] = FormalObject(
                id=oid,
                cls=ClassVector.of(raw["class"]),
                subobject_ids=frozenset(raw.get("subobjects", [])),
                base_points=frozenset(raw.get("base_points", [])),
                complete=bool(raw.get("complete", False)),
                injective=bool(raw.get("injective", True)),
                mu_stable=raw.get("mu_stable"),
                delta=None if delta is None else Q(str(delta)),
            )
        elem = [
            Elementary(
                e["from"],
                e["to"],
                ClassVector.of(e["along"]),
                e.get("psi1_nonzero"),
            )
            for e in data.get("elementary", [])
        ]
        return cls(objs, elem, name=name or data.get("name", ""))

    @classmethod
    def load(cls, path: str | Path) -> "FormalCategory":
        path = Path(path)
        with path.open() as fh:
            return cls.from_json(json.load(fh), name=path.stem)

    def to_json(self) -> dict:
        objs = []
        for oid in sorted(self.objects):
            o = self.objects[oid]
            entry = {
                "id": o.id,
                "class": o.cls.as_list(),
                "subobjects": sorted(o.subobject_ids),
                "base_points": sorted(o.base_points),
                "complete": o.complete,
                "injective": o.injective,
            }
            if o.mu_stable is not None:
                entry["mu_stable"] = o.mu_stable
            if o.delta is not None:
                entry["delta"] = fmt_q(o.delta)
            objs.append(entry)
        elem = [
            {"from": e.source, "to": e.target, "along": e.along.as_list(), "psi1_nonzero": e.psi1_nonzero}
            for e in self.elementary
        ]
        return {"name": self.name, "objects": objs, "elementary": elem}

    # -- validation ----------------------------------------------------------

    def _validate(self) -> None:
        objs = self.objects
        for o in objs.values():
            if o.cls.n < 0 or o.cls.k < 0:
                raise FixtureError(f"{o.id}: class {o.cls} needs n, k >= 0")
            if o.cls.is_zero():
                raise FixtureError(f"{o.id}: zero class is reserved for the zero object")
            for s in o.subobject_ids:
                if s not in objs:
                    raise FixtureError(f"{o.id}: unknown subobject {s!r}")
                if s == o.id:
                    raise FixtureError(f"{o.id}: an object is not a proper subobject of itself")
        for o in objs.values():
            for s in o.subobject_ids:
                if o.id in objs[s].subobject_ids:
                    raise FixtureError(f"cycle between {o.id!r} and {s!r}")
                missing = objs[s].subobject_ids - o.subobject_ids
                if missing:
                    raise FixtureError(f"{o.id}: subobject relation not transitive via {s!r}: {sorted(missing)}")
                q = o.cls - objs[s].cls
                if q.is_zero() or q.n < 0 or q.k < 0 or (q.n == 0 and q.d < 0):
                    raise FixtureError(f"{o.id}/{s}: quotient class {q} is not a nonzero system class")
                if o.injective and not objs[s].injective:
                    self.warnings.append(f"{o.id}: injective object has non-injective subobject {s}")
        for e in self.elementary:
            for oid in (e.source, e.target):
                if oid not in objs:
                    raise FixtureError(f"elementary transformation references unknown object {oid!r}")
            if objs[e.source].cls - objs[e.target].cls != e.along:
                raise FixtureError(f"elementary {e.source}->{e.target}: classes do not differ by {e.along}")
            if e.target not in objs[e.source].subobject_ids:
                raise FixtureError(f"elementary {e.source}->{e.target}: target is not a subobject")

    # -- queries -------------------------------------------------------------

    def __getitem__(self, oid: str) -> FormalObject:
        try:
            return self.objects[oid]
        except KeyError:
            raise StabError(f"no object {oid!r} in fixture") from None

    def is_sub(self, s: str | None, x: str) -> bool:
        """s is a subobject of x (None is the zero object; x is a subobject of itself)."""
        return s is None or s == x or s in self.objects[x].subobject_ids

    def elementary_of(self, source: str, target: str) -> Elementary | None:
        for e in self.elementary:
            if e.source == source and e.target == target:
                return e
        return None


def bundled_fixture_names() -> list[str]:
    root = resources.files("stabsys") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_bundled(name: str) -> FormalCategory:
    root = resources.files("stabsys") / "fixtures"
    data = json.loads((root / f"{name}.json").read_text())
    return FormalCategory.from_json(data, name=name)


# -- HN filtrations ----------------------------------------------------------


@dataclass(frozen=True)
class HNFiltration:
    factors: tuple[ClassVector, ...]
    slopes: tuple[Slope, ...]
    steps: tuple[str, ...]  # ids of the filtration objects E_1 c E_2 c ... c E_l = X

    def __len__(self) -> int:
        return len(self.factors)

    def total(self) -> ClassVector:
        t = ClassVector(0, 0, 0)
        for f in self.factors:
            t = t + f
        return t

    def to_json(self) -> dict:
        return {
            "factors": [f.as_list() for f in self.factors],
            "slopes": [str(s) for s in self.slopes],
            "steps": list(self.steps),
        }


def _quotient_key(cls: ClassVector, alpha: Fraction):
    return mu_alpha(cls, alpha), cls.n, cls.d, cls.k


def hn_filtration(cat: FormalCategory, oid: str, alpha, order: list[str] | None = None) -> HNFiltration:
    """Greedy HN filtration of ``oid`` with respect to mu_alpha.

    At each step, among T with S < T <= X pick the quotient T/S of largest
    slope, then largest n, d, k, then smallest id. ``order`` only changes
    the iteration order of candidates (used to test tie-break determinism).
    """
    alpha = Q(alpha)
    x = cat[oid]
    pool = list(x.subobject_ids) + [oid]
    if order is not None:
        rank = {o: i for i, o in enumerate(order)}
        pool.sort(key=lambda o: rank.get(o, len(rank)))
    current: str | None = None
    cur_cls = ClassVector(0, 0, 0)
    factors: list[ClassVector] = []
    slopes: list[Slope] = []
    steps: list[str] = []
    while current != oid:
        best = None
        best_key = None
        for t in pool:
            if t == current or not cat.is_sub(current, t):
                continue
            q = cat.objects[t].cls - cur_cls
            key = _quotient_key(q, alpha)
            if best is None or _better(key, t, best_key, best):
                best, best_key = t, key
        if best is None:  # pragma: no cover - X itself is always a candidate
            raise FixtureError("HN construction stalled")
        factors.append(cat.objects[best].cls - cur_cls)
        slopes.append(best_key[0])
        steps.append(best)
        current, cur_cls = best, cat.objects[best].cls
    return HNFiltration(tuple(factors), tuple(slopes), tuple(steps))


def _better(key, tid, best_key, best_id) -> bool:
    c = compare_slopes(key[0], best_key[0])
    if c:
        return c > 0
    if key[1:] != best_key[1:]:
        return key[1:] > best_key[1:]
    return tid < best_id


def is_semistable(cat: FormalCategory, oid: str, alpha) -> bool:
    return len(hn_filtration(cat, oid, alpha)) == 1


# -- torsion pairs and the tilted heart --------------------------------------

TORSION = "Torsion"
FREE = "Free"
MIXED = "Mixed"


def tilt_classify(hn: HNFiltration | list[Slope], beta) -> str:
    """T if every factor slope exceeds beta, F if none does, else Mixed."""
    beta_s = Slope(Q(beta))
    slopes = hn.slopes if isinstance(hn, HNFiltration) else list(hn)
    if not slopes:
        raise StabError("empty filtration")
    above = [compare_slopes(s, beta_s) > 0 for s in slopes]
    if all(above):
        return TORSION
    if not any(above):
        return FREE
    return MIXED


def torsion_pair_split(cat: FormalCategory, oid: str, alpha, beta) -> tuple[ClassVector, ClassVector]:
    """Cut the HN filtration at beta: (class of the T-part, class of the F-part)."""
    hn = hn_filtration(cat, oid, alpha)
    beta_s = Slope(Q(beta))
    t = ClassVector(0, 0, 0)
    f = ClassVector(0, 0, 0)
    for cls, s in zip(hn.factors, hn.slopes):
        if compare_slopes(s, beta_s) > 0:
            t = t + cls
        else:
            f = f + cls
    return t, f


@dataclass(frozen=True)
class TiltedRep:
    """Two-term object: f_part sits in degree -1, t_part in degree 0."""

    f_part: str | None = None
    t_part: str | None = None

    def signed_class(self, cat: FormalCategory) -> ClassVector:
        t = cat[self.t_part].cls if self.t_part else ClassVector(0, 0, 0)
        f = cat[self.f_part].cls if self.f_part else ClassVector(0, 0, 0)
        return t - f


def heart_member(rep: TiltedRep, cat: FormalCategory, alpha, beta) -> bool:
    if rep.f_part is None and rep.t_part is None:
        raise StabError("empty representative")
    if rep.f_part is not None and tilt_classify(hn_filtration(cat, rep.f_part, alpha), beta) != FREE:
        return False
    if rep.t_part is not None and tilt_classify(hn_filtration(cat, rep.t_part, alpha), beta) != TORSION:
        return False
    return True


# -- minimal objects and elementary transformations --------------------------


@dataclass(frozen=True)
class MinimalPattern:
    cls: ClassVector
    label: str
    indexed_by: str


def minimal_objects() -> list[MinimalPattern]:
    return [
        MinimalPattern(ClassVector(0, 1, 0), "(O_P,0)", "point"),
        MinimalPattern(ClassVector(0, 0, 1), "(0,V_1)", "vector space"),
    ]


def elementary_transformations(cat: FormalCategory, oid: str) -> list[tuple[str, ClassVector]]:
    """Type I per base point (drop d), type II when k > 0 (drop k)."""
    o = cat[oid]
    out = [("I", o.cls - ClassVector(0, 1, 0)) for _ in sorted(o.base_points)]
    if o.cls.k > 0:
        out.append(("II", o.cls - ClassVector(0, 0, 1)))
    return out


def hn_transfer_check(cat: FormalCategory, x_id: str, x2_id: str, s_class, alpha) -> bool:
    """Compare the HN filtration of x with that of its elementary transformation x2.

    Expected shape: same length, first factor of x2 equals the first factor
    of x minus ``s_class``, all later factors identical.
    """
    s_class = ClassVector.of(s_class)
    e = cat.elementary_of(x_id, x2_id)
    if e is None or e.along != s_class:
        raise StabError(f"{x2_id} is not recorded as an elementary transformation of {x_id} along {s_class}")
    if e.psi1_nonzero is None:
        raise Inconclusive("fixture does not record whether psi_1 is nonzero")
    if not e.psi1_nonzero:
        raise Inconclusive("psi_1 = 0: the transfer statement does not apply")
    hx = hn_filtration(cat, x_id, alpha)
    if len(hx) == 1:
        raise StabError(f"{x_id} is semistable; the transfer statement needs an unstable object")
    hx2 = hn_filtration(cat, x2_id, alpha)
    if len(hx2) != len(hx):
        return False
    if hx2.factors[0] != hx.factors[0] - s_class:
        return False
    return hx2.factors[1:] == hx.factors[1:]


# -- destabilizer systems for minimal objects --------------------------------

OP = "OP"
V1 = "V1"


def destabilizer_constraints_minimal(kind: str, alpha, beta, gamma, stable: bool = False) -> ConstraintSystem:
    """Inequalities on the class (n, d, k) of a destabilizing subobject.

    With ``stable=False`` the slope inequality is strict (violating
    semistability); with ``stable=True`` it is weak (violating stability).
    The mu_alpha-semistability filter of the subobject is attached as the
    predicate.
    """
    alpha, beta, gamma = Q(alpha), Q(beta), Q(gamma)
    one = Fraction(1)
    z = Fraction(0)
    if kind == OP:
        shape = [
            le((0, 1, alpha, -1), (beta, 0, 0, 0), label="F' in F"),
            lt((beta, 0, 0, 0), (0, 1, alpha, 0), label="F in T"),
        ]
        # violates k(alpha+1) <= n(beta+gamma)
        slope_ineq = le((beta + gamma, 0, 0, 0), (0, 0, alpha + 1, 0), strict=not stable, label="destabilizes")
    elif kind == V1:
        shape = [
            le((0, 1, alpha, -alpha), (beta, 0, 0, 0), label="F' in F"),
            lt((beta, 0, 0, 0), (0, 1, alpha, 0), label="F in T"),
        ]
        # violates n(beta - alpha gamma) <= d(alpha+1)
        slope_ineq = le((0, alpha + 1, 0, 0), (beta - alpha * gamma, 0, 0, 0), strict=not stable, label="destabilizes")
    else:
        raise StabError(f"unknown minimal kind {kind!r}; use OP or V1")
    rank = Ineq(-one, z, z, one, label="n >= 1")
    return ConstraintSystem(
        tuple(shape + [slope_ineq, rank]),
        predicate=_admissible_pred,
        description=f"{kind} destabilizers at alpha={fmt_q(alpha)}, beta={fmt_q(beta)}, gamma={fmt_q(gamma)}",
        notes=("k >= 0", "mu_alpha-semistable filter: d >= 0 if k > 0; k <= d + n"),
    )


def _admissible_pred(n: int, d: int, k: int) -> bool:
    return k >= 0 and admissible_raw(n, d, k)


def minimal_slope(kind: str, alpha) -> Slope:
    """Tilted slope of the minimal object: -1 for (O_P,0), 1/alpha for (0,V_1)."""
    alpha = Q(alpha)
    if kind == OP:
        return Slope(Fraction(-1))
    if kind == V1:
        return INFINITY if alpha == 0 else Slope(1 / alpha)
    raise StabError(f"unknown minimal kind {kind!r}")
