"""Colorings of n-subsets, per-pattern homogeneity, and stabilization tools.

A coloring assigns an opaque color to n-subsets of a ground condition,
either through an explicit table or a lazily evaluated rule.  Colorings
may be domain-restricted (e.g. defined on tied pairs only); subsets
outside the domain are uncolored and skipped by the checks.

The second half of the module handles the order-theoretic bookkeeping
used by the falling-out demos: lexicographic stabilization of monotone
bit-vector sequences, and extraction of an eventually-stable binary
relation from a ternary one by reading trailing windows along columns.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .errors import LexOrderError, LimitError
from .pointsets import FiniteCondition, Point, classify_subsets, find_realizer, realized_type
from .typecalc import NType, count_ntypes, enumerate_ntypes, list_form

EXHAUSTIVE_SEARCH_BOUND = 16

STABLE_1 = "stable-1"
STABLE_0 = "stable-0"
UNSTABLE = "unstable"
NO_DATA = "insufficient-data"


@dataclass(frozen=True)
class Coloring:
    """A coloring of the n-subsets of a ground condition.

    ``rule`` receives the subset as a tuple sorted by y and returns a
    color, or None for subsets outside the coloring's domain.  Colors
    are opaque; no order among them is assumed.
    """

    ground: FiniteCondition
    n: int
    rule: object = field(compare=False)

    def color_of(self, subset):
        pts = tuple(sorted((p if isinstance(p, Point) else Point(*p) for p in subset),
                           key=lambda p: p.y))
        if len(set(pts)) != self.n:
            raise ValueError(f"expected a {self.n}-subset, got {pts}")
        for p in pts:
            if p not in self.ground:
                raise ValueError(f"{p} is not in the ground condition")
        return self.rule(pts)

    @classmethod
    def from_table(cls, ground: FiniteCondition, n: int, table: dict,
                   partial: bool = False) -> "Coloring":
        """Table-backed coloring; totality is validated unless partial."""
        keyed = {frozenset(k): v for k, v in table.items()}
        if not partial:
            for combo in combinations(ground.sorted_points, n):
                if frozenset(combo) not in keyed:
                    raise ValueError(
                        "coloring table is not total: no color for "
                        + ", ".join(map(str, combo))
                    )
        return cls(ground, n, lambda pts: keyed.get(frozenset(pts)))

    @classmethod
    def from_rule(cls, ground: FiniteCondition, n: int, fn) -> "Coloring":
        return cls(ground, n, fn)


def realized_type_coloring(cond: FiniteCondition, n: int) -> Coloring:
    """Color every n-subset by the list form of the pattern it realizes."""
    return Coloring.from_rule(cond, n, lambda pts: list_form(realized_type(pts)))


@dataclass(frozen=True)
class TauReport:
    homogeneous: bool
    color: object
    realizers: int
    vacuous: bool


def check_tau_homogeneous(subset, coloring: Coloring, tau: NType) -> TauReport:
    """Is the coloring constant on the tau-realizing n-subsets of subset?

    Vacuously homogeneous (flagged, color None) when subset carries no
    colored realizer of tau.
    """
    if tau.n != coloring.n:
        raise ValueError(
            f"pattern size {tau.n} does not match coloring arity {coloring.n}"
        )
    pts = _normalize_subset(subset, coloring.ground)
    realizers = 0
    colors = set()
    for combo in combinations(pts, tau.n):
        if realized_type(combo) != tau:
            continue
        realizers += 1
        c = coloring.color_of(combo)
        if c is not None:
            colors.add(c)
    return TauReport(
        homogeneous=len(colors) <= 1,
        color=next(iter(colors)) if len(colors) == 1 else None,
        realizers=realizers,
        vacuous=not colors,
    )


def _normalize_subset(subset, ground: FiniteCondition) -> tuple[Point, ...]:
    if isinstance(subset, FiniteCondition):
        pts = subset.sorted_points
    else:
        pts = tuple(sorted((p if isinstance(p, Point) else Point(*p) for p in subset),
                           key=lambda p: p.y))
    for p in pts:
        if p not in ground:
            raise ValueError(f"{p} is not in the ground condition")
    return pts


def count_classes_met(subset, coloring: Coloring) -> int:
    """Number of distinct colors over the colored n-subsets of subset."""
    pts = _normalize_subset(subset, coloring.ground)
    if len(pts) < coloring.n:
        return 0
    colors = set()
    for combo in combinations(pts, coloring.n):
        c = coloring.color_of(combo)
        if c is not None:
            colors.add(c)
    return len(colors)


@dataclass(frozen=True)
class SearchResult:
    points: tuple[Point, ...]
    color: object
    size: int
    met_min_size: bool
    exact: bool
    stats: dict = field(compare=False)


def search_homogeneous(coloring: Coloring, tau: NType, min_size: int = 0,
                       mode: str = "exact",
                       bound: int = EXHAUSTIVE_SEARCH_BOUND) -> SearchResult:
    """Find a large H in the ground with the tau-realizers monochromatic.

    Exact mode scans subsets by descending size and returns a maximum-size
    answer, ties broken by lexicographically least sorted point list; it
    refuses grounds larger than ``bound``.  Greedy mode removes the most
    conflicted point until homogeneous, re-adds what it can, and makes no
    optimality claim.
    """
    if mode not in ("exact", "greedy"):
        raise ValueError(f"mode must be 'exact' or 'greedy', got {mode!r}")
    ground_pts = tuple(sorted(coloring.ground.sorted_points))
    m = len(ground_pts)
    realizers = _tau_realizers(coloring, tau, ground_pts)

    if mode == "exact":
        if m > bound:
            raise LimitError(
                f"exhaustive search refused: ground has {m} points, bound is "
                f"{bound}; pass mode='greedy' or raise the bound"
            )
        checked = 0
        for size in range(m, -1, -1):
            for combo in combinations(range(m), size):
                checked += 1
                mask = _mask(combo)
                ok, color = _mono(realizers, mask)
                if ok:
                    pts = tuple(ground_pts[i] for i in combo)
                    return SearchResult(
                        points=tuple(sorted(pts, key=lambda p: p.y)),
                        color=color,
                        size=size,
                        met_min_size=size >= min_size,
                        exact=True,
                        stats={"mode": "exact", "subsets_checked": checked},
                    )
        raise AssertionError("unreachable: the empty subset is homogeneous")

    keep = set(range(m))
    removed: list[int] = []
    while True:
        mask = _mask(keep)
        ok, color = _mono(realizers, mask)
        if ok:
            break
        counts = _conflict_counts(realizers, mask, m)
        worst = max(keep, key=lambda i: (counts[i], -i))
        keep.discard(worst)
        removed.append(worst)
    for i in sorted(removed):
        trial = _mask(keep | {i})
        ok, color_try = _mono(realizers, trial)
        if ok:
            keep.add(i)
            color = color_try
    pts = tuple(sorted((ground_pts[i] for i in keep), key=lambda p: p.y))
    return SearchResult(
        points=pts,
        color=color,
        size=len(pts),
        met_min_size=len(pts) >= min_size,
        exact=False,
        stats={"mode": "greedy", "removed": len(removed)},
    )


def _tau_realizers(coloring: Coloring, tau: NType, ground_pts) -> list[tuple[int, object]]:
    out = []
    for combo in combinations(range(len(ground_pts)), tau.n):
        pts = tuple(ground_pts[i] for i in combo)
        if realized_type(pts) == tau:
            out.append((_mask(combo), coloring.color_of(pts)))
    return out


def _mask(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def _mono(realizers, mask: int):
    color = None
    for sub, c in realizers:
        if sub & mask == sub and c is not None:
            if color is None:
                color = c
            elif c != color:
                return False, None
    return True, color


def _conflict_counts(realizers, mask: int, m: int) -> list[int]:
    colors = Counter(
        c for sub, c in realizers if sub & mask == sub and c is not None
    )
    majority = colors.most_common(1)[0][0]
    counts = [0] * m
    for sub, c in realizers:
        if sub & mask == sub and c is not None and c != majority:
            for i in range(m):
                if sub >> i & 1:
                    counts[i] += 1
    return counts


@dataclass(frozen=True)
class FloorReport:
    classes_met: int
    t_n: int
    floor_holds: bool
    missing: tuple[str, ...]


def weak_ramsey_floor_demo(cond: FiniteCondition, n: int) -> FloorReport:
    """Count pattern classes met by cond's n-subsets against the full tally.

    The floor holds exactly when the pattern coloring meets all count_ntypes(n)
    classes; any pattern without a realizer (checked by find_realizer) is
    reported missing.
    """
    index = classify_subsets(cond, n)
    missing = tuple(
        list_form(t) for t in enumerate_ntypes(n)
        if find_realizer(cond, t) is None
    )
    classes_met = len(index)
    t_n = count_ntypes(n)
    return FloorReport(
        classes_met=classes_met,
        t_n=t_n,
        floor_holds=not missing and classes_met == t_n,
        missing=missing,
    )


@dataclass(frozen=True)
class StabilizeReport:
    stable: tuple[int, ...]
    positions: tuple[int, ...]


def stabilize_lex(rows, direction: str = "increasing") -> StabilizeReport:
    """Per-column stable values of a lexicographically monotone row sequence.

    Rows must be equal-width 0/1 vectors, lexicographically non-decreasing
    (non-increasing for direction="decreasing", handled as the bitwise
    mirror).  Returns the final stable vector and, per column, the least
    row index from which that column is constant to the end.
    """
    table = [tuple(int(b) for b in row) for row in rows]
    if not table:
        raise ValueError("need at least one row")
    width = len(table[0])
    for r in table:
        if len(r) != width:
            raise ValueError("rows must share a width")
        if any(b not in (0, 1) for b in r):
            raise ValueError("rows must be 0/1 vectors")
    if direction == "decreasing":
        for i in range(len(table) - 1):
            if table[i] < table[i + 1]:
                raise LexOrderError(i, table[i], table[i + 1])
        flipped = [tuple(1 - b for b in r) for r in table]
        inner = stabilize_lex(flipped, "increasing")
        return StabilizeReport(
            stable=tuple(1 - b for b in inner.stable),
            positions=inner.positions,
        )
    if direction != "increasing":
        raise ValueError(f"direction must be 'increasing' or 'decreasing', got {direction!r}")

    for i in range(len(table) - 1):
        if table[i] > table[i + 1]:
            raise LexOrderError(i, table[i], table[i + 1])
    if width and any(table[i][0] > table[i + 1][0] for i in range(len(table) - 1)):
        raise AssertionError("column 0 must be non-decreasing under lex order")

    stable = table[-1]
    positions = []
    for z in range(width):
        pos = len(table) - 1
        while pos > 0 and table[pos - 1][z] == stable[z]:
            pos -= 1
        positions.append(pos)
    return StabilizeReport(stable=stable, positions=tuple(positions))


@dataclass(frozen=True)
class TernaryRelationGrid:
    """Total 0/1 relation on [0,x_bound) x [0,y_bound) x [0,z_bound)."""

    x_bound: int
    y_bound: int
    z_bound: int
    triples: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        for (x, y, z) in self.triples:
            if not (0 <= x < self.x_bound and 0 <= y < self.y_bound
                    and 0 <= z < self.z_bound):
                raise ValueError(f"triple {(x, y, z)} outside grid bounds")

    def holds(self, x: int, y: int, z: int) -> bool:
        return (x, y, z) in self.triples

    @classmethod
    def from_function(cls, x_bound: int, y_bound: int, z_bound: int, fn) -> "TernaryRelationGrid":
        triples = frozenset(
            (x, y, z)
            for x in range(x_bound)
            for y in range(y_bound)
            for z in range(z_bound)
            if fn(x, y, z)
        )
        return cls(x_bound, y_bound, z_bound, triples)


def extract_S_from_R(grid: TernaryRelationGrid, cond: FiniteCondition,
                     window: int = 3) -> dict[tuple[int, int], str]:
    """Read an eventually-stable binary relation out of a ternary grid.

    For each x and z, look at R(x, y, z) along the last ``window`` y's of
    cond's column at x: constant windows give "stable-0"/"stable-1",
    mixed ones "unstable", short columns "insufficient-data".
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    columns = cond.columns()
    for x, ys in columns.items():
        if x >= grid.x_bound or any(y >= grid.y_bound for y in ys):
            raise ValueError(
                f"condition coordinates at column {x} fall outside grid bounds"
            )
    out: dict[tuple[int, int], str] = {}
    for x in range(grid.x_bound):
        ys = columns.get(x, [])
        for z in range(grid.z_bound):
            if len(ys) < window:
                out[(x, z)] = NO_DATA
                continue
            tail = [grid.holds(x, y, z) for y in ys[-window:]]
            if all(tail):
                out[(x, z)] = STABLE_1
            elif not any(tail):
                out[(x, z)] = STABLE_0
            else:
                out[(x, z)] = UNSTABLE
    return out


def coloring_from_json(doc: dict, ground: FiniteCondition | None = None,
                       partial: bool = False) -> Coloring:
    """Ingest {"n": ..., "entries": [{"subset": [[x,y],...], "color": ...}]}."""
    if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
        raise ValueError("coloring document needs 'n' and 'entries'")
    n = int(doc["n"])
    table = {}
    pts: set[Point] = set()
    for entry in doc["entries"]:
        subset = frozenset(Point(int(x), int(y)) for x, y in entry["subset"])
        if len(subset) != n:
            raise ValueError(f"entry subset is not a {n}-set: {entry['subset']}")
        table[subset] = entry["color"]
        pts |= subset
    if ground is None:
        ground = FiniteCondition(frozenset(pts))
    return Coloring.from_table(ground, n, table, partial=partial)


def coloring_from_csv(path: str, ground: FiniteCondition | None = None,
                      partial: bool = False) -> Coloring:
    """Ingest CSV rows x1,y1,...,xn,yn,color (no header)."""
    table = {}
    pts: set[Point] = set()
    n = None
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row:
                continue
            if len(row) % 2 != 1 or len(row) < 3:
                raise ValueError(f"bad coloring row (want 2n coords + color): {row}")
            coords = [int(v) for v in row[:-1]]
            if n is None:
                n = len(coords) // 2
            elif len(coords) != 2 * n:
                raise ValueError("coloring rows disagree on subset size")
            subset = frozenset(
                Point(coords[2 * i], coords[2 * i + 1]) for i in range(n)
            )
            table[subset] = row[-1]
            pts |= subset
    if n is None:
        raise ValueError("empty coloring file")
    if ground is None:
        ground = FiniteCondition(frozenset(pts))
    return Coloring.from_table(ground, n, table, partial=partial)


def grid_to_json(grid: TernaryRelationGrid) -> dict:
    return {
        "bounds": [grid.x_bound, grid.y_bound, grid.z_bound],
        "triples": sorted([x, y, z] for (x, y, z) in grid.triples),
    }


def grid_from_json(doc: dict) -> TernaryRelationGrid:
    """Ingest {"bounds": [bx, by, bz], "triples": [[x, y, z], ...]}."""
    if not isinstance(doc, dict) or "bounds" not in doc or "triples" not in doc:
        raise ValueError("grid document needs 'bounds' and 'triples'")
    bx, by, bz = (int(b) for b in doc["bounds"])
    triples = frozenset((int(x), int(y), int(z)) for x, y, z in doc["triples"])
    return TernaryRelationGrid(bx, by, bz, triples)
