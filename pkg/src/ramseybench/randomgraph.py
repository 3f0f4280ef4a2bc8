"""Deterministic finite engine for the countable universal graph.

A configuration is a list of distinct parameter vertices plus the set of
positions the demanded witness must be adjacent to; realizing one means
finding a vertex outside the parameters whose adjacency matches exactly.
The builder walks a fixed schedule of configurations, adding a fresh
witness whenever none exists, so the same step count always yields the
same graph.  The schedule sorts by (max parameter vertex, parameter
count, parameters lexicographically, target set as ascending bitmask);
the lone empty configuration comes first.

The same machinery runs with a color palette instead of an edge/no-edge
alternative: a palette configuration demands a witness whose edge to
each parameter carries a prescribed color.  Unspecified pairs default to
color 0, so palette size 2 reproduces the graph builder exactly.

Richness of a vertex set is approximated internally: a set is rich when
some subset satisfies the k-extension property using only witnesses
inside itself.  That check is exhaustive and bounded.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, islice, permutations

from .errors import LimitError
from .homogeneity import Coloring, check_tau_homogeneous
from .pointsets import FiniteCondition, Point
from .typecalc import NType, parse_list_form

RICH_SUBSET_BOUND = 12


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..vertex_count-1; edges as sorted pairs."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for (u, v) in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"bad edge {(u, v)} on {self.vertex_count} vertices")

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for (a, b) in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out


@dataclass(frozen=True)
class Configuration:
    """Parameters a_0..a_{l-1} plus the positions demanding adjacency."""

    params: tuple[int, ...]
    targets: frozenset[int]

    def __post_init__(self):
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"parameters must be distinct: {self.params}")
        if any(p < 0 for p in self.params):
            raise ValueError(f"parameters must be naturals: {self.params}")
        if not self.targets <= set(range(len(self.params))):
            raise ValueError(
                f"targets {sorted(self.targets)} are not positions into {self.params}"
            )


def configuration_schedule():
    """The canonical infinite configuration order; see the module doc."""
    yield Configuration((), frozenset())
    top = 0
    while True:
        for count in range(1, top + 2):
            for params in permutations(range(top + 1), count):
                if max(params) != top:
                    continue
                for bits in range(1 << count):
                    targets = frozenset(i for i in range(count) if bits >> i & 1)
                    yield Configuration(params, targets)
        top += 1


def realize_configuration(g: Graph, cfg: Configuration):
    """Least witness vertex for cfg in g, or None."""
    for p in cfg.params:
        if p >= g.vertex_count:
            raise ValueError(f"parameter {p} is not a vertex of the graph")
    for b in range(g.vertex_count):
        if b in cfg.params:
            continue
        if all(g.has_edge(b, a) == (i in cfg.targets)
               for i, a in enumerate(cfg.params)):
            return b
    return None


def _grow(edges: set[tuple[int, int]], count: int, cfg: Configuration) -> int:
    # The vertex pool is conceptually all naturals: a parameter the edge
    # history has not touched yet is simply an isolated vertex so far.
    if cfg.params:
        count = max(count, max(cfg.params) + 1)
    g = Graph(count, frozenset(edges))
    if realize_configuration(g, cfg) is not None:
        return count
    fresh = count
    for i in cfg.targets:
        a = cfg.params[i]
        edges.add((min(a, fresh), max(a, fresh)))
    return count + 1


def build_random_graph(steps: int) -> Graph:
    """Run the first ``steps`` schedule entries from the one-vertex seed."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    edges: set[tuple[int, int]] = set()
    count = 1
    for cfg in islice(configuration_schedule(), steps):
        count = _grow(edges, count, cfg)
    return Graph(count, frozenset(edges))


def build_graph_covering(max_vertex: int, max_params: int) -> Graph:
    """Process every configuration with params inside [0, max_vertex) and
    at most max_params parameters, in schedule order."""
    if max_vertex < 0 or max_params < 0:
        raise ValueError("bounds must be naturals")
    edges: set[tuple[int, int]] = set()
    count = 1
    for cfg in configuration_schedule():
        if cfg.params and max(cfg.params) >= max_vertex:
            break
        if len(cfg.params) > max_params:
            continue
        count = _grow(edges, count, cfg)
    return Graph(count, frozenset(edges))


def check_extension_property(g: Graph, k: int, m: int) -> list[Configuration]:
    """All configurations with <= k params among the first m vertices that
    lack a witness anywhere in g.  Empty list == property holds for (k, m)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if not 0 <= m <= g.vertex_count:
        raise ValueError(f"m must be between 0 and {g.vertex_count}, got {m}")
    unsatisfied = []
    for count in range(0, k + 1):
        for params in permutations(range(m), count):
            for bits in range(1 << count):
                targets = frozenset(i for i in range(count) if bits >> i & 1)
                cfg = Configuration(params, targets)
                if realize_configuration(g, cfg) is None:
                    unsatisfied.append(cfg)
    return unsatisfied


def _internally_extends(g: Graph, inner: tuple[int, ...], k: int) -> bool:
    if not inner:
        return False
    pool = set(inner)
    for count in range(0, k + 1):
        for params in permutations(inner, count):
            for bits in range(1 << count):
                targets = {i for i in range(count) if bits >> i & 1}
                if not any(
                    b not in params
                    and all(g.has_edge(b, a) == (i in targets)
                            for i, a in enumerate(params))
                    for b in pool
                ):
                    return False
    return True


def check_rich(subset, g: Graph, k: int = 1,
               bound: int = RICH_SUBSET_BOUND) -> bool:
    """Does some subset of ``subset`` satisfy the k-extension property with
    all witnesses inside itself?  Exhaustive; refuses sets above ``bound``."""
    vertices = tuple(sorted(set(subset)))
    for v in vertices:
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"{v} is not a vertex of the graph")
    if len(vertices) > bound:
        raise LimitError(
            f"rich check refused: {len(vertices)} vertices exceeds the "
            f"exhaustive bound {bound}"
        )
    for size in range(1, len(vertices) + 1):
        for inner in combinations(vertices, size):
            if _internally_extends(g, inner, k):
                return True
    return False


VERTICAL_PAIR = "x1=x2<y1<y2"


def color_vertical_pairs(cond: FiniteCondition, g: Graph) -> Coloring:
    """Color tied pairs of cond by whether their y's are adjacent in g.

    Pairs from different columns stay uncolored.  Every y-coordinate of
    cond must be a vertex of g.
    """
    for p in cond:
        if p.y >= g.vertex_count:
            raise ValueError(f"y-coordinate {p.y} is not a vertex of the graph")

    def rule(pts):
        a, b = pts
        if a.x != b.x:
            return None
        return 1 if g.has_edge(a.y, b.y) else 0

    return Coloring.from_rule(cond, 2, rule)


@dataclass(frozen=True)
class EdgeColoring:
    """Total symmetric edge coloring; unrecorded pairs carry color 0.

    ``palette`` is the palette size, or None for an unbounded palette.
    """

    vertex_count: int
    palette: int | None
    table: dict = field(compare=False)

    def __post_init__(self):
        for (u, v), c in self.table.items():
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"bad pair {(u, v)}")
            if c < 0 or (self.palette is not None and c >= self.palette):
                raise ValueError(f"color {c} outside palette")

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("no color on a loop")
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            raise ValueError(f"pair {(u, v)} outside the vertex range")
        return self.table.get((min(u, v), max(u, v)), 0)


@dataclass(frozen=True)
class ColorConfiguration:
    """Parameters plus the prescribed color of the witness edge to each."""

    params: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"parameters must be distinct: {self.params}")
        if len(self.colors) != len(self.params):
            raise ValueError("one color per parameter")


def color_schedule(palette: int):
    """Canonical palette-configuration order; colors ascend little-endian
    so palette 2 coincides with the graph schedule's bitmask order."""
    yield ColorConfiguration((), ())
    top = 0
    while True:
        for count in range(1, top + 2):
            for params in permutations(range(top + 1), count):
                if max(params) != top:
                    continue
                for value in range(palette ** count):
                    colors = tuple(
                        (value // palette ** i) % palette for i in range(count)
                    )
                    yield ColorConfiguration(params, colors)
        top += 1


def realize_color_configuration(ec: EdgeColoring, cfg: ColorConfiguration):
    """Least witness whose edges to the parameters carry the given colors."""
    for p in cfg.params:
        if p >= ec.vertex_count:
            raise ValueError(f"parameter {p} is not a vertex")
    for b in range(ec.vertex_count):
        if b in cfg.params:
            continue
        if all(ec.color(b, a) == c for a, c in zip(cfg.params, cfg.colors)):
            return b
    return None


def _grow_colors(table: dict, count: int, palette: int,
                 cfg: ColorConfiguration) -> int:
    if cfg.params:
        count = max(count, max(cfg.params) + 1)
    ec = EdgeColoring(count, palette, dict(table))
    if realize_color_configuration(ec, cfg) is not None:
        return count
    fresh = count
    for a, c in zip(cfg.params, cfg.colors):
        table[(min(a, fresh), max(a, fresh))] = c
    return count + 1


def build_random_coloring(palette: int, steps: int) -> EdgeColoring:
    """Run the first ``steps`` palette-schedule entries from one vertex."""
    if palette < 2:
        raise ValueError(f"palette must have >= 2 colors, got {palette}")
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    table: dict = {}
    count = 1
    for cfg in islice(color_schedule(palette), steps):
        count = _grow_colors(table, count, palette, cfg)
    return EdgeColoring(count, palette, table)


def build_coloring_covering(palette: int, max_vertex: int,
                            max_params: int) -> EdgeColoring:
    if palette < 2:
        raise ValueError(f"palette must have >= 2 colors, got {palette}")
    table: dict = {}
    count = 1
    for cfg in color_schedule(palette):
        if cfg.params and max(cfg.params) >= max_vertex:
            break
        if len(cfg.params) > max_params:
            continue
        count = _grow_colors(table, count, palette, cfg)
    return EdgeColoring(count, palette, table)


def color_vertical_pairs_palette(cond: FiniteCondition, ec: EdgeColoring) -> Coloring:
    """Palette analogue of color_vertical_pairs."""
    for p in cond:
        if p.y >= ec.vertex_count:
            raise ValueError(f"y-coordinate {p.y} is not a vertex")

    def rule(pts):
        a, b = pts
        if a.x != b.x:
            return None
        return ec.color(a.y, b.y)

    return Coloring.from_rule(cond, 2, rule)


@dataclass(frozen=True)
class ColumnVerdict:
    column: int
    points: int
    homogeneous: bool
    realizers: int


@dataclass(frozen=True)
class NoReverseReport:
    conditions: int
    columns_checked: int
    all_nonhomogeneous: bool
    failures: tuple[ColumnVerdict, ...]


def noreverse_demo(count: int = 50, seed: int = 0, column_low: int = 5,
                   column_high: int = 8, max_columns: int = 2) -> NoReverseReport:
    """Adjacency coloring is never constant on a rich column.

    Builds the schedule graph, draws ``count`` conditions whose columns
    are rich vertex sets (k = 1, verified by check_rich), colors tied
    pairs by adjacency, and checks each column for homogeneity.  All of
    them must fail.  Candidate columns are seeded with two disjoint
    edges so the rich check rarely rejects; the check still decides.
    """
    g = build_graph_covering(6, 2)
    rng = random.Random(seed)
    tau = parse_list_form(VERTICAL_PAIR)
    pool = list(range(3, g.vertex_count))
    edge_pool = [(u, v) for (u, v) in sorted(g.edges) if u >= 3 and v >= 3]
    verdicts: list[ColumnVerdict] = []
    conditions = 0
    while conditions < count:
        n_cols = rng.randint(1, max_columns)
        taken: set[int] = set()
        column_sets: list[list[int]] = []
        for _ in range(n_cols):
            free = [v for v in pool if v not in taken]
            pairs = [e for e in edge_pool if not (set(e) & taken)]
            for _ in range(200):
                size = rng.randint(column_low, column_high)
                disjoint = [
                    (e1, e2) for e1 in pairs for e2 in pairs
                    if not set(e1) & set(e2)
                ]
                if not disjoint or len(free) < size:
                    break
                e1, e2 = rng.choice(disjoint)
                core = set(e1) | set(e2)
                extras = [v for v in free if v not in core]
                if len(extras) < size - 4:
                    continue
                ys = core | set(rng.sample(extras, size - 4))
                if check_rich(ys, g, 1):
                    column_sets.append(sorted(ys))
                    taken |= ys
                    break
        if not column_sets:
            continue
        points = set()
        for x, ys in enumerate(column_sets):
            points |= {Point(x, y) for y in ys}
        cond = FiniteCondition(frozenset(points))
        coloring = color_vertical_pairs(cond, g)
        for x, ys in enumerate(column_sets):
            col_pts = [Point(x, y) for y in ys]
            report = check_tau_homogeneous(col_pts, coloring, tau)
            verdicts.append(ColumnVerdict(
                column=x,
                points=len(col_pts),
                homogeneous=report.homogeneous,
                realizers=report.realizers,
            ))
        conditions += 1
    failures = tuple(v for v in verdicts if v.homogeneous)
    return NoReverseReport(
        conditions=conditions,
        columns_checked=len(verdicts),
        all_nonhomogeneous=not failures,
        failures=failures,
    )


@dataclass(frozen=True)
class PaletteDemoReport:
    palette: int
    classes_met: int
    all_colors: bool


def coloring_demo(palette: int, max_vertex: int = 4) -> PaletteDemoReport:
    """One column over the palette engine's vertices meets every color."""
    from .homogeneity import count_classes_met

    ec = build_coloring_covering(palette, max_vertex, 1)
    cond = FiniteCondition(frozenset(
        Point(0, v) for v in range(1, ec.vertex_count)
    ))
    coloring = color_vertical_pairs_palette(cond, ec)
    met = count_classes_met(cond, coloring)
    return PaletteDemoReport(
        palette=palette, classes_met=met, all_colors=met == palette
    )


def graph_to_json(g: Graph) -> dict:
    return {
        "vertices": g.vertex_count,
        "edges": [[u, v] for (u, v) in sorted(g.edges)],
    }


def graph_from_json(doc: dict) -> Graph:
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise ValueError("graph document needs 'vertices' and 'edges'")
    edges = frozenset(
        (min(int(u), int(v)), max(int(u), int(v))) for u, v in doc["edges"]
    )
    return Graph(int(doc["vertices"]), edges)
