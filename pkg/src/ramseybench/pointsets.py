"""Finite planar conditions: point sets whose order patterns are read off.

A finite condition is a set of points (x, y) over the naturals with

* all y-coordinates pairwise distinct (sections are disjoint),
* x < y for every point (everything sits above the diagonal),
* no value is both an x-coordinate and a y-coordinate.

Every n-element subset of a condition realizes exactly one n-pattern:
sort by y, read the interleaving of the x's and y's.  This module checks
the clauses, reads off realized patterns, hunts realizers, grows a
condition until every pattern of a given size occurs, and classifies all
subsets by their pattern.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import NoRealizedTypeError
from .typecalc import MAX_N, NType, Symbol, enumerate_ntypes

CLAUSE_SECTIONS = "sections-disjoint"
CLAUSE_DIAGONAL = "above-diagonal"
CLAUSE_XY = "xy-disjoint"


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise ValueError(f"coordinates must be naturals, got {self}")

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class ClauseViolation:
    clause: str
    witness: tuple[Point, ...]

    def describe(self) -> str:
        pts = ", ".join(map(str, self.witness))
        return f"{self.clause}: {pts}"


@dataclass(frozen=True)
class ConditionReport:
    ok: bool
    violations: tuple[ClauseViolation, ...]


def check_condition(points) -> ConditionReport:
    """Report every clause violation in a raw point set; never raises."""
    pts = sorted({_as_point(p) for p in points})
    violations = []
    by_y: dict[int, Point] = {}
    for p in pts:
        if p.y in by_y and by_y[p.y] != p:
            violations.append(
                ClauseViolation(CLAUSE_SECTIONS, (by_y[p.y], p))
            )
        else:
            by_y[p.y] = p
    for p in pts:
        if p.x >= p.y:
            violations.append(ClauseViolation(CLAUSE_DIAGONAL, (p,)))
    xs = {p.x for p in pts}
    ys = {p.y for p in pts}
    for v in sorted(xs & ys):
        wx = next(p for p in pts if p.x == v)
        wy = next(p for p in pts if p.y == v)
        violations.append(ClauseViolation(CLAUSE_XY, (wx, wy)))
    return ConditionReport(not violations, tuple(violations))


def _as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(int(x), int(y))


@dataclass(frozen=True)
class FiniteCondition:
    """A validated finite condition.  Construction rejects bad point sets."""

    points: frozenset[Point]

    def __post_init__(self):
        points = frozenset(_as_point(p) for p in self.points)
        object.__setattr__(self, "points", points)
        report = check_condition(points)
        if not report.ok:
            msgs = "; ".join(v.describe() for v in report.violations)
            raise ValueError(f"invalid condition: {msgs}")

    @cached_property
    def sorted_points(self) -> tuple[Point, ...]:
        return tuple(sorted(self.points, key=lambda p: p.y))

    def columns(self) -> dict[int, list[int]]:
        """Map each x-coordinate to its ascending list of y's."""
        out: dict[int, list[int]] = {}
        for p in self.sorted_points:
            out.setdefault(p.x, []).append(p.y)
        return out

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.sorted_points)

    def __contains__(self, p) -> bool:
        return _as_point(p) in self.points

    def issubset(self, other: "FiniteCondition") -> bool:
        return self.points <= other.points

    def union(self, points) -> "FiniteCondition":
        return FiniteCondition(self.points | {_as_point(p) for p in points})


def realized_type(subset) -> NType:
    """The unique pattern realized by a point set, read off by y-order.

    Raises NoRealizedTypeError naming the first failed clause when the
    points do not form a valid condition.
    """
    report = check_condition(subset)
    if not report.ok:
        first = report.violations[0]
        raise NoRealizedTypeError(
            first.clause, "no type realized: " + first.describe()
        )
    pts = sorted({_as_point(p) for p in subset}, key=lambda p: p.y)
    if not pts:
        raise NoRealizedTypeError("empty", "no type realized: empty point set")
    values: dict[int, set[Symbol]] = {}
    for i, p in enumerate(pts, start=1):
        values.setdefault(p.x, set()).add(Symbol("x", i))
        values.setdefault(p.y, set()).add(Symbol("y", i))
    classes = tuple(frozenset(values[v]) for v in sorted(values))
    return NType(len(pts), classes)


def subset_realizes(subset, t: NType) -> bool:
    """Clause-level check that a point set realizes the given pattern.

    Interprets each symbol by its point's coordinate and compares every
    symbol pair against the pattern's order.  Kept free of the sorting
    shortcut in realized_type so the two act as cross-checks.
    """
    pts = sorted({_as_point(p) for p in subset}, key=lambda p: p.y)
    if len(pts) != t.n:
        return False
    if not check_condition(pts).ok:
        return False
    value = {}
    for i, p in enumerate(pts, start=1):
        value[Symbol("x", i)] = p.x
        value[Symbol("y", i)] = p.y
    syms = list(value)
    for a in syms:
        for b in syms:
            if (value[a] <= value[b]) != t.leq(a, b):
                return False
    return True


def _level_signature(pts) -> tuple:
    """Grouping of symbol ids (i for x_i, n+i for y_i) by coordinate level.

    For y-sorted points from a valid condition this names the same class
    tuple realized_type builds, as plain ints; the scan helpers compare
    signatures instead of constructing a validated pattern per subset.
    """
    values = sorted({v for p in pts for v in (p.x, p.y)})
    level = {v: k for k, v in enumerate(values)}
    n = len(pts)
    buckets: list[list[int]] = [[] for _ in values]
    for i, p in enumerate(pts, start=1):
        buckets[level[p.x]].append(i)
        buckets[level[p.y]].append(n + i)
    return tuple(tuple(sorted(b)) for b in buckets)


def _type_signature(t: NType) -> tuple:
    out = []
    for cls in t.classes:
        ids = sorted(s.index if s.kind == "x" else t.n + s.index for s in cls)
        out.append(tuple(ids))
    return tuple(out)


def find_realizer(cond: FiniteCondition, t: NType):
    """Least subset of cond realizing t, by lexicographic y-sequence.

    Returns a tuple of points sorted by y, or None when no subset
    realizes t (in particular when t.n exceeds the condition size).
    """
    if t.n > len(cond):
        return None
    target = _type_signature(t)
    for combo in combinations(cond.sorted_points, t.n):
        if _level_signature(combo) == target:
            return combo
    return None


def classify_subsets(cond: FiniteCondition, n: int) -> dict[NType, list[tuple[Point, ...]]]:
    """Index every n-subset of cond under the pattern it realizes.

    Only patterns that occur appear as keys; subsets are listed in
    lexicographic y-sequence order.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be between 1 and {MAX_N}, got {n}")
    index: dict[NType, list[tuple[Point, ...]]] = {}
    by_sig: dict[tuple, NType] = {}
    for combo in combinations(cond.sorted_points, n):
        sig = _level_signature(combo)
        t = by_sig.get(sig)
        if t is None:
            t = realized_type(combo)
            by_sig[sig] = t
        index.setdefault(t, []).append(combo)
    return index


def _fresh_realizer(t: NType, base: int) -> list[Point]:
    """Points realizing t using fresh values base, base+1, ..."""
    value: dict[Symbol, int] = {}
    for offset, cls in enumerate(t.classes):
        for sym in cls:
            value[sym] = base + offset
    return [
        Point(value[Symbol("x", i)], value[Symbol("y", i)])
        for i in range(1, t.n + 1)
    ]


def extend_with_realizers(cond: FiniteCondition, n: int) -> FiniteCondition:
    """Grow cond until every n-pattern has a realizer.

    Patterns are visited in enumeration order; a pattern already realized
    (possibly by points added for an earlier one) is skipped, otherwise a
    fresh batch of points is appended with all values strictly above
    everything used so far.  The input is never mutated.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be between 1 and {MAX_N}, got {n}")
    current = cond
    for t in enumerate_ntypes(n):
        if find_realizer(current, t) is not None:
            continue
        used = [p.x for p in current] + [p.y for p in current]
        base = max(used) + 1 if used else 0
        current = current.union(_fresh_realizer(t, base))
    return current


def random_condition(rng: random.Random, n_points: int, spread: int = 4) -> FiniteCondition:
    """A pseudo-random valid condition with n_points points.

    Columns are reused with probability ~1/2 so tied patterns occur.
    Deterministic for a fixed rng state.
    """
    points: list[Point] = []
    xs: list[int] = []
    used = set()
    top = 0
    for _ in range(n_points):
        if xs and rng.random() < 0.5:
            x = rng.choice(xs)
        else:
            x = top + rng.randrange(1, spread)
            while x in used:
                x += 1
            used.add(x)
            xs.append(x)
        y = max(x, top) + rng.randrange(1, spread)
        while y in used:
            y += 1
        used.add(y)
        top = max(top, x, y)
        points.append(Point(x, y))
    return FiniteCondition(frozenset(points))


def condition_to_json(cond: FiniteCondition) -> list[list[int]]:
    return [[p.x, p.y] for p in cond.sorted_points]


def points_from_json(doc) -> list[Point]:
    if not isinstance(doc, list):
        raise ValueError("condition document must be a list of [x, y] pairs")
    out = []
    for item in doc:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValueError(f"bad point entry: {item!r}")
        out.append(Point(int(item[0]), int(item[1])))
    return out


def condition_from_json(doc) -> FiniteCondition:
    return FiniteCondition(frozenset(points_from_json(doc)))
