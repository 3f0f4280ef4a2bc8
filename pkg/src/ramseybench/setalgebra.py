"""Decidable algebra of planar sets with finite/cofinite structure.

``FinCofin`` represents a subset of the naturals that is finite or
cofinite, carrying its character and finite support (the set itself, or
its complement).  The class is closed under complement, union, and
intersection, and membership is decidable.

``column_of`` reads exact vertical sections out of symbolic planar-set
expressions built from four leaf shapes (finite point sets, products of
FinCofin sets, the strict above-diagonal region, single columns) under
union, intersection, and complement.  Every expression has a tail form:
beyond a computable horizon N, the section at x is

    (upper minus [0, x]) union (lower intersect [0, x])

for fixed FinCofin coefficients (upper, lower).  The combinators act on
coefficients pointwise, so the form falls out by recursion.  All the
asymptotic verdicts ride on it: the eventual section character equals
upper's character, which decides membership in the twice-iterated
cofinite filter and the meets-everything property alike.

Filter stand-ins (the cofinite filter, principal ultrafilters) evaluate
indexed sums: the verdict set {n : section at n lies in V_n} is itself
FinCofin, computed explicitly below a cutoff and by the tail form above
it.  Note the cofinite filter is a filter, not an ultrafilter: a verdict
set that is neither cofinite nor avoided simply fails membership.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class FinCofin:
    """A finite or cofinite set of naturals.

    ``support`` is the set itself when finite, the complement when
    cofinite; the representation is canonical, so equality is structural.
    """

    cofinite: bool
    support: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(int(v) for v in self.support))
        if any(v < 0 for v in self.support):
            raise ValueError("support must contain naturals")

    @classmethod
    def finite(cls, values) -> "FinCofin":
        return cls(False, frozenset(values))

    @classmethod
    def cofinite_except(cls, values) -> "FinCofin":
        return cls(True, frozenset(values))

    @property
    def is_finite(self) -> bool:
        return not self.cofinite

    def contains(self, v: int) -> bool:
        return (v in self.support) != self.cofinite

    def complement(self) -> "FinCofin":
        return FinCofin(not self.cofinite, self.support)

    def union(self, other: "FinCofin") -> "FinCofin":
        if not self.cofinite and not other.cofinite:
            return FinCofin(False, self.support | other.support)
        if self.cofinite and other.cofinite:
            return FinCofin(True, self.support & other.support)
        cof, fin = (self, other) if self.cofinite else (other, self)
        return FinCofin(True, cof.support - fin.support)

    def intersection(self, other: "FinCofin") -> "FinCofin":
        return self.complement().union(other.complement()).complement()

    def members_below(self, bound: int) -> list[int]:
        return [v for v in range(bound) if self.contains(v)]

    def __str__(self) -> str:
        body = "{" + ",".join(map(str, sorted(self.support))) + "}"
        return f"co{body}" if self.cofinite else body


EMPTY = FinCofin.finite(())
FULL = FinCofin.cofinite_except(())


class PlanarSet:
    """Base class for symbolic planar-set expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class FinitePoints(PlanarSet):
    points: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(
            self, "points", frozenset((int(x), int(y)) for x, y in self.points)
        )


@dataclass(frozen=True)
class Rect(PlanarSet):
    xs: FinCofin
    ys: FinCofin


@dataclass(frozen=True)
class AboveDiag(PlanarSet):
    """All (x, y) with y > x."""


@dataclass(frozen=True)
class Column(PlanarSet):
    x: int
    content: FinCofin


@dataclass(frozen=True)
class Union(PlanarSet):
    args: tuple[PlanarSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if not self.args:
            raise ValueError("union needs at least one argument")


@dataclass(frozen=True)
class Intersection(PlanarSet):
    args: tuple[PlanarSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if not self.args:
            raise ValueError("intersection needs at least one argument")


@dataclass(frozen=True)
class Complement(PlanarSet):
    arg: PlanarSet


def column_of(expr: PlanarSet, x: int) -> FinCofin:
    """Exact vertical section {y : (x, y) in expr} as a FinCofin set."""
    if x < 0:
        raise ValueError(f"column index must be a natural, got {x}")
    if isinstance(expr, FinitePoints):
        return FinCofin.finite(y for (px, y) in expr.points if px == x)
    if isinstance(expr, Rect):
        return expr.ys if expr.xs.contains(x) else EMPTY
    if isinstance(expr, AboveDiag):
        return FinCofin.cofinite_except(range(x + 1))
    if isinstance(expr, Column):
        return expr.content if expr.x == x else EMPTY
    if isinstance(expr, Union):
        out = column_of(expr.args[0], x)
        for a in expr.args[1:]:
            out = out.union(column_of(a, x))
        return out
    if isinstance(expr, Intersection):
        out = column_of(expr.args[0], x)
        for a in expr.args[1:]:
            out = out.intersection(column_of(a, x))
        return out
    if isinstance(expr, Complement):
        return column_of(expr.arg, x).complement()
    raise TypeError(f"not a planar set expression: {expr!r}")


@dataclass(frozen=True)
class TailForm:
    """Sections beyond ``horizon``: (upper - [0,x]) | (lower & [0,x])."""

    horizon: int
    upper: FinCofin
    lower: FinCofin

    def section(self, x: int) -> FinCofin:
        if x < self.horizon:
            raise ValueError(f"tail form only applies from {self.horizon} on")
        cut = FinCofin.finite(range(x + 1))
        return self.upper.intersection(cut.complement()).union(
            self.lower.intersection(cut)
        )


def tail_analysis(expr: PlanarSet) -> TailForm:
    """Horizon and coefficients of the expression's eventual column shape."""
    if isinstance(expr, FinitePoints):
        xs = [x for (x, _) in expr.points]
        return TailForm(max(xs) + 1 if xs else 0, EMPTY, EMPTY)
    if isinstance(expr, Rect):
        horizon = max(expr.xs.support, default=-1) + 1
        coef = expr.ys if expr.xs.cofinite else EMPTY
        return TailForm(horizon, coef, coef)
    if isinstance(expr, AboveDiag):
        return TailForm(0, FULL, EMPTY)
    if isinstance(expr, Column):
        return TailForm(expr.x + 1, EMPTY, EMPTY)
    if isinstance(expr, Union):
        parts = [tail_analysis(a) for a in expr.args]
        upper, lower = parts[0].upper, parts[0].lower
        for p in parts[1:]:
            upper = upper.union(p.upper)
            lower = lower.union(p.lower)
        return TailForm(max(p.horizon for p in parts), upper, lower)
    if isinstance(expr, Intersection):
        parts = [tail_analysis(a) for a in expr.args]
        upper, lower = parts[0].upper, parts[0].lower
        for p in parts[1:]:
            upper = upper.intersection(p.upper)
            lower = lower.intersection(p.lower)
        return TailForm(max(p.horizon for p in parts), upper, lower)
    if isinstance(expr, Complement):
        inner = tail_analysis(expr.arg)
        return TailForm(inner.horizon, inner.upper.complement(),
                        inner.lower.complement())
    raise TypeError(f"not a planar set expression: {expr!r}")


def in_fr2(expr: PlanarSet) -> bool:
    """Cofinitely many sections cofinite?  Decided by the tail coefficient:
    beyond the horizon every section shares upper's character, and the
    finitely many sections below it cannot tip the verdict either way."""
    return tail_analysis(expr).upper.cofinite


def meets_all_fr2(expr: PlanarSet) -> bool:
    """Infinitely many sections infinite?  A FinCofin section is infinite
    exactly when cofinite, and past the horizon all sections share upper's
    character, so this too is upper's call."""
    return tail_analysis(expr).upper.cofinite


@dataclass(frozen=True)
class Frechet:
    """Stand-in for the cofinite filter."""

    def holds(self, s: FinCofin) -> bool:
        return s.cofinite

    def __str__(self) -> str:
        return "frechet"


@dataclass(frozen=True)
class Principal:
    """Stand-in for the principal ultrafilter at a point."""

    point: int

    def __post_init__(self):
        if self.point < 0:
            raise ValueError("principal point must be a natural")

    def holds(self, s: FinCofin) -> bool:
        return s.contains(self.point)

    def __str__(self) -> str:
        return f"principal({self.point})"


FilterStandIn = Frechet | Principal


@dataclass(frozen=True)
class StandInSequence:
    """An indexed family of stand-ins: a default plus finite exceptions."""

    default: FilterStandIn
    exceptions: tuple[tuple[int, FilterStandIn], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "exceptions",
            tuple(sorted(self.exceptions, key=lambda kv: kv[0])),
        )
        indices = [i for i, _ in self.exceptions]
        if any(i < 0 for i in indices):
            raise ValueError("exception indices must be naturals")
        if len(set(indices)) != len(indices):
            raise ValueError("exception indices must be distinct")

    def at(self, n: int) -> FilterStandIn:
        for i, standin in self.exceptions:
            if i == n:
                return standin
        return self.default


def _verdict_cutoff(form: TailForm, seq: StandInSequence) -> int:
    cutoff = form.horizon
    for i, _ in seq.exceptions:
        cutoff = max(cutoff, i + 1)
    standins = [seq.default] + [s for _, s in seq.exceptions]
    for s in standins:
        if isinstance(s, Principal):
            cutoff = max(cutoff, s.point + 1)
    return cutoff


def verdict_set(expr: PlanarSet, seq: StandInSequence) -> FinCofin:
    """The set {n : section of expr at n lies in seq's n-th stand-in}.

    Explicit evaluation below a cutoff covering the horizon, every
    exception index, and every principal point; beyond it the tail form
    makes the verdict constant.
    """
    form = tail_analysis(expr)
    cutoff = _verdict_cutoff(form, seq)
    if isinstance(seq.default, Frechet):
        tail_true = form.upper.cofinite
    else:
        tail_true = form.lower.contains(seq.default.point)
    flips = frozenset(
        n for n in range(cutoff)
        if seq.at(n).holds(column_of(expr, n)) != tail_true
    )
    return FinCofin(cofinite=tail_true, support=flips)


def sum_membership(expr: PlanarSet, u: FilterStandIn, seq: StandInSequence) -> bool:
    """Does expr belong to the u-indexed sum of the seq stand-ins?"""
    return u.holds(verdict_set(expr, seq))


def image_membership(b: FinCofin, u: FilterStandIn, seq: StandInSequence) -> bool:
    """Membership of b in the first-coordinate image of the sum.

    Computed as sum membership of the cylinder over b; it must agree
    with asking u about b directly, which tests pin down.
    """
    return sum_membership(Rect(b, FULL), u, seq)


def random_fincofin(rng: random.Random, bound: int = 12) -> FinCofin:
    size = rng.randint(0, min(5, bound))
    return FinCofin(
        cofinite=rng.random() < 0.5,
        support=frozenset(rng.sample(range(bound), size)),
    )


def random_planar_set(rng: random.Random, depth: int = 4, bound: int = 12) -> PlanarSet:
    """Seeded random expression of at most the given operator depth."""
    if depth <= 0 or rng.random() < 0.35:
        kind = rng.randrange(4)
        if kind == 0:
            pts = frozenset(
                (rng.randrange(bound), rng.randrange(bound))
                for _ in range(rng.randint(0, 6))
            )
            return FinitePoints(pts)
        if kind == 1:
            return Rect(random_fincofin(rng, bound), random_fincofin(rng, bound))
        if kind == 2:
            return AboveDiag()
        return Column(rng.randrange(bound), random_fincofin(rng, bound))
    op = rng.randrange(3)
    if op == 2:
        return Complement(random_planar_set(rng, depth - 1, bound))
    args = tuple(
        random_planar_set(rng, depth - 1, bound)
        for _ in range(rng.randint(2, 3))
    )
    return Union(args) if op == 0 else Intersection(args)


def fincofin_to_json(s: FinCofin) -> dict:
    key = "cofinite" if s.cofinite else "finite"
    return {key: sorted(s.support)}


def fincofin_from_json(doc: dict) -> FinCofin:
    if isinstance(doc, dict) and set(doc) == {"finite"}:
        return FinCofin.finite(doc["finite"])
    if isinstance(doc, dict) and set(doc) == {"cofinite"}:
        return FinCofin.cofinite_except(doc["cofinite"])
    raise ValueError(f"bad finite/cofinite document: {doc!r}")


def planar_set_to_json(expr: PlanarSet) -> dict:
    if isinstance(expr, FinitePoints):
        return {"points": [[x, y] for x, y in sorted(expr.points)]}
    if isinstance(expr, Rect):
        return {"rect": {"x": fincofin_to_json(expr.xs),
                         "y": fincofin_to_json(expr.ys)}}
    if isinstance(expr, AboveDiag):
        return {"aboveDiag": True}
    if isinstance(expr, Column):
        return {"column": {"x": expr.x, "content": fincofin_to_json(expr.content)}}
    if isinstance(expr, Union):
        return {"op": "union", "args": [planar_set_to_json(a) for a in expr.args]}
    if isinstance(expr, Intersection):
        return {"op": "intersection",
                "args": [planar_set_to_json(a) for a in expr.args]}
    if isinstance(expr, Complement):
        return {"op": "complement", "args": [planar_set_to_json(expr.arg)]}
    raise TypeError(f"not a planar set expression: {expr!r}")


def planar_set_from_json(doc: dict) -> PlanarSet:
    if not isinstance(doc, dict):
        raise ValueError(f"bad planar set document: {doc!r}")
    if "op" in doc:
        op = doc["op"]
        args = [planar_set_from_json(a) for a in doc.get("args", [])]
        if op == "union":
            return Union(tuple(args))
        if op == "intersection":
            return Intersection(tuple(args))
        if op == "complement":
            if len(args) != 1:
                raise ValueError("complement takes exactly one argument")
            return Complement(args[0])
        raise ValueError(f"unknown operator {op!r}")
    if "points" in doc:
        return FinitePoints(frozenset((x, y) for x, y in doc["points"]))
    if "rect" in doc:
        return Rect(fincofin_from_json(doc["rect"]["x"]),
                    fincofin_from_json(doc["rect"]["y"]))
    if "aboveDiag" in doc:
        return AboveDiag()
    if "column" in doc:
        return Column(int(doc["column"]["x"]),
                      fincofin_from_json(doc["column"]["content"]))
    raise ValueError(f"bad planar set document: {doc!r}")


def standin_from_json(doc: dict) -> FilterStandIn:
    if isinstance(doc, dict) and set(doc) == {"frechet"} and doc["frechet"]:
        return Frechet()
    if isinstance(doc, dict) and set(doc) == {"principal"}:
        return Principal(int(doc["principal"]))
    raise ValueError(f"bad stand-in document: {doc!r}")


def standin_to_json(s: FilterStandIn) -> dict:
    if isinstance(s, Frechet):
        return {"frechet": True}
    return {"principal": s.point}


def sequence_from_json(doc: dict) -> StandInSequence:
    if not isinstance(doc, dict) or "default" not in doc:
        raise ValueError("stand-in sequence document needs 'default'")
    exceptions = tuple(
        (int(k), standin_from_json(v))
        for k, v in doc.get("exceptions", {}).items()
    )
    return StandInSequence(standin_from_json(doc["default"]), exceptions)
