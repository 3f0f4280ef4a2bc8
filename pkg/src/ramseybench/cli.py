"""Command-line front end: every module behind one binary.

Layout is two-level: an area (types, cond, homog, graph, sets, omega)
followed by an action.  Every action accepts ``--format json|table``
and ``--out <path>``; file inputs arrive via ``--in <path>`` (with
``--cond`` as an alias wherever the input is a planar condition).

Output discipline: stdout carries the payload, one JSON document or its
table flattening; diagnostics go to stderr; the exit code is 0 for a
completed command, 1 for a domain error (bad data, refused search,
missing label), 2 for a usage error (argparse).  ``--out`` persists the
payload, except for the artifact producers ``cond grow`` and ``graph
build`` which persist the bare condition/graph document so the file can
be fed back through ``--in``.

Search bounds are configured only through the environment variable
``NBT_WORKBENCH_LIMITS``, a JSON object such as
``{"search": 18, "rich": 14}``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import homogeneity, omegatypes, pointsets, randomgraph, setalgebra, typecalc
from .errors import WorkbenchError

LIMITS_ENV = "NBT_WORKBENCH_LIMITS"
_LIMIT_KEYS = {
    "search": homogeneity.EXHAUSTIVE_SEARCH_BOUND,
    "rich": randomgraph.RICH_SUBSET_BOUND,
}


@dataclass
class CommandResult:
    status: str
    payload: dict
    diagnostics: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "ok" else 1


def _limits() -> dict:
    raw = os.environ.get(LIMITS_ENV)
    limits = dict(_LIMIT_KEYS)
    if not raw:
        return limits
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{LIMITS_ENV} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError(f"{LIMITS_ENV} must be a JSON object")
    for key, value in doc.items():
        if key not in limits:
            raise ValueError(
                f"{LIMITS_ENV}: unknown key {key!r} (known: {sorted(limits)})"
            )
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"{LIMITS_ENV}: {key} must be a natural number")
        limits[key] = value
    return limits


def _read_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _load_condition(path: str) -> pointsets.FiniteCondition:
    doc = _read_json(path)
    if isinstance(doc, dict) and "points" in doc:
        doc = doc["points"]
    return pointsets.condition_from_json(doc)


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def _points_json(points) -> list:
    return [[p.x, p.y] for p in sorted(points, key=lambda p: (p.y, p.x))]


# ---------------------------------------------------------------- flattening

def _flatten(value, path=""):
    """Depth-first (path, leaf) rows; containers recurse, empties are leaves."""
    if isinstance(value, dict) and value:
        rows = []
        for k, v in value.items():
            rows.extend(_flatten(v, f"{path}.{k}" if path else str(k)))
        return rows
    if isinstance(value, (list, tuple)) and value:
        rows = []
        for i, v in enumerate(value):
            rows.extend(_flatten(v, f"{path}.{i}" if path else str(i)))
        return rows
    return [(path or ".", value)]


def render_table(payload: dict) -> str:
    rows = _flatten(payload)
    width = max(len(p) for p, _ in rows)
    return "\n".join(f"{p.ljust(width)}  {json.dumps(v)}" for p, v in rows)


# ---------------------------------------------------------------- handlers
# each returns (payload, diagnostics, artifact-or-None)

def _cmd_types_enum(args, limits):
    types = typecalc.enumerate_ntypes(args.n)
    forms = [typecalc.list_form(t) for t in types]
    return {"n": args.n, "count": len(forms), "types": forms}, [], None


def _cmd_types_count(args, limits):
    return {"t": typecalc.count_ntypes(args.n)}, [], None


def _load_ntype(args) -> typecalc.NType:
    if args.type is not None:
        return typecalc.parse_list_form(args.type)
    if args.infile is not None:
        return typecalc.ntype_from_json(_read_json(args.infile))
    raise ValueError("need a pattern: pass --type or --in")


def _cmd_types_extend(args, limits):
    tau = _load_ntype(args)
    out = typecalc.append_extension(tau)
    return {
        "input": typecalc.list_form(tau),
        "output": typecalc.list_form(out),
        "n": out.n,
    }, [], None


def _cmd_types_insert(args, limits):
    tau = _load_ntype(args)
    out = typecalc.insert_extension(tau)
    return {
        "input": typecalc.list_form(tau),
        "output": typecalc.list_form(out),
        "n": out.n,
    }, [], None


def _cmd_cond_check(args, limits):
    doc = _read_json(args.infile)
    if isinstance(doc, dict) and "points" in doc:
        doc = doc["points"]
    report = pointsets.check_condition(pointsets.points_from_json(doc))
    payload = {
        "ok": report.ok,
        "violations": [
            {"clause": v.clause, "witness": v.describe()} for v in report.violations
        ],
    }
    return payload, [], None


def _cmd_cond_realize(args, limits):
    cond = _load_condition(args.infile)
    tau = typecalc.parse_list_form(args.type)
    found = pointsets.find_realizer(cond, tau)
    return {
        "type": typecalc.list_form(tau),
        "found": found is not None,
        "realizer": _points_json(found) if found is not None else None,
    }, [], None


def _cmd_cond_classify(args, limits):
    cond = _load_condition(args.infile)
    index = pointsets.classify_subsets(cond, args.n)
    by_type = {
        form: len(subs)
        for form, subs in sorted(
            (typecalc.list_form(t), subs) for t, subs in index.items()
        )
    }
    return {
        "n": args.n,
        "subsets": sum(by_type.values()),
        "classes_met": len(by_type),
        "t_n": typecalc.count_ntypes(args.n),
        "by_type": by_type,
    }, [], None


def _cmd_cond_grow(args, limits):
    base = (
        _load_condition(args.infile)
        if args.infile
        else pointsets.FiniteCondition(frozenset())
    )
    grown = pointsets.extend_with_realizers(base, args.n)
    artifact = pointsets.condition_to_json(grown)
    payload = {
        "n": args.n,
        "before": len(base),
        "after": len(grown),
        "added": len(grown) - len(base),
        "condition": artifact,
    }
    return payload, [], artifact


def _load_coloring(args) -> homogeneity.Coloring:
    ground = _load_condition(args.cond) if getattr(args, "cond", None) else None
    if args.csv:
        return homogeneity.coloring_from_csv(args.csv, ground, partial=args.partial)
    if args.infile:
        return homogeneity.coloring_from_json(
            _read_json(args.infile), ground, partial=args.partial
        )
    raise ValueError("need a coloring: pass --in or --csv")


def _cmd_homog_check(args, limits):
    coloring = _load_coloring(args)
    subset = (
        _load_condition(args.cond) if args.cond else coloring.ground
    )
    tau = typecalc.parse_list_form(args.type)
    report = homogeneity.check_tau_homogeneous(subset, coloring, tau)
    return {
        "type": typecalc.list_form(tau),
        "homogeneous": report.homogeneous,
        "color": report.color,
        "realizers": report.realizers,
        "vacuous": report.vacuous,
    }, [], None


def _cmd_homog_search(args, limits):
    coloring = _load_coloring(args)
    tau = typecalc.parse_list_form(args.type)
    result = homogeneity.search_homogeneous(
        coloring, tau, min_size=args.min_size, mode=args.mode,
        bound=limits["search"],
    )
    return {
        "mode": args.mode,
        "size": result.size,
        "met_min_size": result.met_min_size,
        "exact": result.exact,
        "color": result.color,
        "subset": _points_json(result.points),
        "stats": dict(result.stats),
    }, [], None


def _cmd_homog_floor(args, limits):
    cond = _load_condition(args.infile)
    report = homogeneity.weak_ramsey_floor_demo(cond, args.n)
    diagnostics = [f"no realizer for {form}" for form in report.missing]
    return {
        "classes_met": report.classes_met,
        "t_n": report.t_n,
        "floor_holds": report.floor_holds,
    }, diagnostics, None


def _cmd_homog_stabilize(args, limits):
    doc = _read_json(args.infile)
    if not isinstance(doc, list):
        raise ValueError("rows document must be a JSON list of 0/1 rows")
    report = homogeneity.stabilize_lex(doc, direction=args.direction)
    return {
        "stable": list(report.stable),
        "positions": list(report.positions),
    }, [], None


def _cmd_homog_extract_s(args, limits):
    grid = homogeneity.grid_from_json(_read_json(args.infile))
    cond = _load_condition(args.cond)
    statuses = homogeneity.extract_S_from_R(grid, cond, window=args.window)
    rows = [
        {"x": x, "z": z, "status": status}
        for (x, z), status in sorted(statuses.items())
    ]
    return {"window": args.window, "statuses": rows}, [], None


def _cmd_graph_build(args, limits):
    if args.steps is not None and args.cover_vertices is not None:
        raise ValueError("pass either --steps or --cover-vertices, not both")
    if args.steps is not None:
        g = randomgraph.build_random_graph(args.steps)
    elif args.cover_vertices is not None:
        g = randomgraph.build_graph_covering(args.cover_vertices, args.cover_params)
    else:
        raise ValueError("need --steps or --cover-vertices")
    artifact = randomgraph.graph_to_json(g)
    payload = {
        "vertices": g.vertex_count,
        "edge_count": len(g.edges),
        "edges": [list(e) for e in sorted(g.edges)],
    }
    return payload, [], artifact


def _cmd_graph_check(args, limits):
    g = randomgraph.graph_from_json(_read_json(args.infile))
    unsatisfied = randomgraph.check_extension_property(g, args.k, args.m)
    return {
        "k": args.k,
        "m": args.m,
        "satisfied": not unsatisfied,
        "unsatisfied": [
            {"params": list(cfg.params), "targets": sorted(cfg.targets)}
            for cfg in unsatisfied
        ],
    }, [], None


def _cmd_graph_rich(args, limits):
    g = randomgraph.graph_from_json(_read_json(args.infile))
    vertices = _int_list(args.vertices)
    rich = randomgraph.check_rich(vertices, g, k=args.k, bound=limits["rich"])
    return {"vertices": sorted(set(vertices)), "k": args.k, "rich": rich}, [], None


def _cmd_graph_demo_noreverse(args, limits):
    report = randomgraph.noreverse_demo(count=args.count, seed=args.seed)
    payload = {
        "conditions": report.conditions,
        "columns_checked": report.columns_checked,
        "all_nonhomogeneous": report.all_nonhomogeneous,
        "failures": [
            {"column": v.column, "points": v.points, "realizers": v.realizers}
            for v in report.failures
        ],
    }
    return payload, [], None


def _cmd_graph_demo_coloring(args, limits):
    report = randomgraph.coloring_demo(args.palette, max_vertex=args.max_vertex)
    return {
        "palette": report.palette,
        "classes_met": report.classes_met,
        "all_colors": report.all_colors,
    }, [], None


def _load_expr(args) -> setalgebra.PlanarSet:
    return setalgebra.planar_set_from_json(_read_json(args.infile))


def _cmd_sets_column(args, limits):
    section = setalgebra.column_of(_load_expr(args), args.x)
    return {"x": args.x, "column": setalgebra.fincofin_to_json(section)}, [], None


def _cmd_sets_tail(args, limits):
    tail = setalgebra.tail_analysis(_load_expr(args))
    return {
        "horizon": tail.horizon,
        "upper": setalgebra.fincofin_to_json(tail.upper),
        "lower": setalgebra.fincofin_to_json(tail.lower),
    }, [], None


def _cmd_sets_fr2(args, limits):
    return {"in_fr2": setalgebra.in_fr2(_load_expr(args))}, [], None


def _cmd_sets_meets(args, limits):
    return {"meets_all_fr2": setalgebra.meets_all_fr2(_load_expr(args))}, [], None


def _cmd_sets_sum(args, limits):
    expr = _load_expr(args)
    u = setalgebra.standin_from_json(_read_json(args.u))
    seq = setalgebra.sequence_from_json(_read_json(args.seq))
    verdicts = setalgebra.verdict_set(expr, seq)
    return {
        "member": u.holds(verdicts),
        "verdict_set": setalgebra.fincofin_to_json(verdicts),
    }, [], None


def _cmd_sets_image(args, limits):
    b = setalgebra.fincofin_from_json(_read_json(args.infile))
    u = setalgebra.standin_from_json(_read_json(args.u))
    seq = setalgebra.sequence_from_json(_read_json(args.seq))
    return {"member": setalgebra.image_membership(b, u, seq)}, [], None


def _load_prefix(args) -> omegatypes.OmegaTypePrefix:
    return omegatypes.prefix_from_json(_read_json(args.infile))


def _cmd_omega_validate(args, limits):
    doc = _read_json(args.infile)
    classes = doc.get("classes") if isinstance(doc, dict) else doc
    report = omegatypes.validate_prefix(classes if classes is not None else doc)
    return {
        "ok": report.ok,
        "malformed": list(report.malformed),
        "violations": list(report.violations),
        "assumed": list(report.assumed),
    }, [], None


def _cmd_omega_phi(args, limits):
    cond = omegatypes.phi_prefix(_load_prefix(args), _int_list(args.z))
    return {"points": pointsets.condition_to_json(cond)}, [], None


def _cmd_omega_assignd(args, limits):
    label = omegatypes.assign_D(_load_prefix(args), _int_list(args.s))
    return {"label": label}, [], None


def _cmd_omega_zchain(args, limits):
    prefix = _load_prefix(args)
    za = omegatypes.zassignment_from_json(_read_json(args.za))
    report = omegatypes.zchain_check(prefix, _int_list(args.z), za)
    return {"ok": report.ok, "failed_at": report.failed_at}, [], None


def _cmd_omega_hmember(args, limits):
    za = omegatypes.zassignment_from_json(_read_json(args.za))
    x, y = _int_list(args.point)
    member = omegatypes.h_set_member(pointsets.Point(x, y), za)
    return {"member": member}, [], None


# ---------------------------------------------------------------- parser

def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=("json", "table"), default="json",
                        help="payload rendering (default json)")
    parser.add_argument("--out", metavar="PATH", default=None,
                        help="persist the result to a JSON file")


def _add_in(parser, required=True, cond_alias=False, help="input JSON file"):
    parser.add_argument("--in", dest="infile", metavar="PATH",
                        required=False, help=help)
    if cond_alias:
        parser.add_argument("--cond", dest="infile", metavar="PATH",
                            help="alias of --in")
    parser.set_defaults(_in_required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramseybench",
        description="workbench for finite pattern combinatorics on the plane",
    )
    areas = parser.add_subparsers(dest="area", required=True, metavar="AREA")

    # ---- types
    types = areas.add_parser("types", help="pattern enumeration and extension")
    tsub = types.add_subparsers(dest="action", required=True, metavar="ACTION")

    p = tsub.add_parser("enum", help="list all patterns of a size")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_types_enum)

    p = tsub.add_parser("count", help="number of patterns of a size")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_types_count)

    for name, fn, hlp in (
        ("extend", _cmd_types_extend, "append a new pair strictly last"),
        ("insert", _cmd_types_insert, "tie a new pair into a 2-pattern"),
    ):
        p = tsub.add_parser(name, help=hlp)
        p.add_argument("--type", default=None,
                       help="pattern in list form, e.g. 'x1<y1<x2<y2'")
        _add_in(p, required=False, help="pattern JSON file")
        _add_common(p)
        p.set_defaults(func=fn)

    # ---- cond
    cond = areas.add_parser("cond", help="finite planar conditions")
    csub = cond.add_subparsers(dest="action", required=True, metavar="ACTION")

    p = csub.add_parser("check", help="validate the three condition clauses")
    _add_in(p, cond_alias=True, help="condition JSON file ([[x,y],...])")
    _add_common(p)
    p.set_defaults(func=_cmd_cond_check)

    p = csub.add_parser("realize", help="least subset realizing a pattern")
    _add_in(p, cond_alias=True, help="condition JSON file")
    p.add_argument("--type", required=True, help="pattern in list form")
    _add_common(p)
    p.set_defaults(func=_cmd_cond_realize)

    p = csub.add_parser("classify", help="tally n-subsets by realized pattern")
    _add_in(p, cond_alias=True, help="condition JSON file")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_cond_classify)

    p = csub.add_parser("grow", help="extend until every n-pattern is realized")
    _add_in(p, required=False, cond_alias=True,
            help="starting condition (default empty)")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_cond_grow)

    # ---- homog
    homog = areas.add_parser("homog", help="colorings and homogeneity")
    hsub = homog.add_subparsers(dest="action", required=True, metavar="ACTION")

    p = hsub.add_parser("check", help="is a set homogeneous for one pattern")
    _add_in(p, required=False, help="coloring JSON file")
    p.add_argument("--csv", default=None, help="coloring CSV file")
    p.add_argument("--cond", default=None,
                   help="condition JSON file (default: the coloring's ground)")
    p.add_argument("--type", required=True, help="pattern in list form")
    p.add_argument("--partial", action="store_true",
                   help="accept colorings that skip some subsets")
    _add_common(p)
    p.set_defaults(func=_cmd_homog_check, _in_required=False)

    p = hsub.add_parser("search", help="find a homogeneous subset")
    _add_in(p, required=False, help="coloring JSON file")
    p.add_argument("--csv", default=None, help="coloring CSV file")
    p.add_argument("--cond", default=None,
                   help="ground condition JSON file (optional)")
    p.add_argument("--type", required=True, help="pattern in list form")
    p.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    p.add_argument("--min-size", type=int, default=0)
    p.add_argument("--partial", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_homog_search, _in_required=False)

    p = hsub.add_parser("floor", help="pattern classes met vs the full tally")
    _add_in(p, cond_alias=True, help="condition JSON file")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_homog_floor)

    p = hsub.add_parser("stabilize", help="stable bits of lex-monotone rows")
    _add_in(p, help="JSON list of equal-width 0/1 rows")
    p.add_argument("--direction", choices=("increasing", "decreasing"),
                   default="increasing")
    _add_common(p)
    p.set_defaults(func=_cmd_homog_stabilize)

    p = hsub.add_parser("extract-s", help="stable binary relation from a grid")
    _add_in(p, help="ternary grid JSON file")
    p.add_argument("--cond", required=True, help="condition JSON file")
    p.add_argument("--window", type=int, default=3)
    _add_common(p)
    p.set_defaults(func=_cmd_homog_extract_s)

    # ---- graph
    graph = areas.add_parser("graph", help="deterministic extension-rich graphs")
    gsub = graph.add_subparsers(dest="action", required=True, metavar="ACTION")

    p = gsub.add_parser("build", help="run the construction schedule")
    p.add_argument("--steps", type=int, default=None,
                   help="number of schedule entries to process")
    p.add_argument("--cover-vertices", type=int, default=None,
                   help="process all configurations inside this many vertices")
    p.add_argument("--cover-params", type=int, default=2,
                   help="parameter-count cap for --cover-vertices (default 2)")
    _add_common(p)
    p.set_defaults(func=_cmd_graph_build, _in_required=False)

    p = gsub.add_parser("check", help="verify the extension property")
    _add_in(p, help="graph JSON file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_graph_check)

    p = gsub.add_parser("rich", help="does a vertex set contain a rich core")
    _add_in(p, help="graph JSON file")
    p.add_argument("--vertices", required=True,
                   help="comma-separated vertex list, e.g. 0,2,5")
    p.add_argument("--k", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=_cmd_graph_rich)

    p = gsub.add_parser("demo-noreverse",
                        help="adjacency coloring is never constant on rich columns")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=_cmd_graph_demo_noreverse, _in_required=False)

    p = gsub.add_parser("demo-coloring",
                        help="one column meets every color of a palette")
    p.add_argument("--palette", type=int, required=True)
    p.add_argument("--max-vertex", type=int, default=4)
    _add_common(p)
    p.set_defaults(func=_cmd_graph_demo_coloring, _in_required=False)

    # ---- sets
    sets_p = areas.add_parser("sets", help="planar set algebra and filter sums")
    ssub = sets_p.add_subparsers(dest="action", required=True, metavar="ACTION")

    p = ssub.add_parser("column", help="exact vertical section")
    _add_in(p, help="planar set expression JSON file")
    p.add_argument("--x", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_sets_column)

    for name, fn, hlp in (
        ("tail", _cmd_sets_tail, "horizon and eventual section shape"),
        ("fr2", _cmd_sets_fr2, "cofinitely many cofinite sections?"),
        ("meets", _cmd_sets_meets, "infinitely many infinite sections?"),
    ):
        p = ssub.add_parser(name, help=hlp)
        _add_in(p, help="planar set expression JSON file")
        _add_common(p)
        p.set_defaults(func=fn)

    p = ssub.add_parser("sum", help="membership in an indexed filter sum")
    _add_in(p, help="planar set expression JSON file")
    p.add_argument("--u", required=True, help="index stand-in JSON file")
    p.add_argument("--seq", required=True, help="stand-in sequence JSON file")
    _add_common(p)
    p.set_defaults(func=_cmd_sets_sum)

    p = ssub.add_parser("image", help="membership in the sum's first projection")
    _add_in(p, help="finite/cofinite set JSON file")
    p.add_argument("--u", required=True, help="index stand-in JSON file")
    p.add_argument("--seq", required=True, help="stand-in sequence JSON file")
    _add_common(p)
    p.set_defaults(func=_cmd_sets_image)

    # ---- omega
    omega = areas.add_parser("omega", help="prefixes of infinite patterns")
    osub = omega.add_subparsers(dest="action", required=True, metavar="ACTION")

    p = osub.add_parser("validate", help="judge a candidate prefix")
    _add_in(p, help="prefix JSON file")
    _add_common(p)
    p.set_defaults(func=_cmd_omega_validate)

    p = osub.add_parser("phi", help="realize a prefix as a condition")
    _add_in(p, help="prefix JSON file")
    p.add_argument("--z", required=True, help="comma-separated increasing values")
    _add_common(p)
    p.set_defaults(func=_cmd_omega_phi)

    p = osub.add_parser("assignd", help="label demanded after a chain fragment")
    _add_in(p, help="prefix JSON file")
    p.add_argument("--s", default="", help="comma-separated values so far")
    _add_common(p)
    p.set_defaults(func=_cmd_omega_assignd)

    p = osub.add_parser("zchain", help="walk a chain through its demanded sets")
    _add_in(p, help="prefix JSON file")
    p.add_argument("--z", required=True, help="comma-separated increasing values")
    p.add_argument("--za", required=True, help="label assignment JSON file")
    _add_common(p)
    p.set_defaults(func=_cmd_omega_zchain)

    p = osub.add_parser("hmember", help="point membership in the carved set")
    p.add_argument("--za", required=True, help="label assignment JSON file")
    p.add_argument("--point", required=True, help="x,y")
    _add_common(p)
    p.set_defaults(func=_cmd_omega_hmember, _in_required=False)

    return parser


def run(argv, stdout=None, stderr=None) -> CommandResult:
    """Parse, dispatch, print.  Raises SystemExit(2) on usage errors."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)

    if getattr(args, "_in_required", False) and not getattr(args, "infile", None):
        parser.error(f"{args.area} {args.action}: --in is required")

    try:
        limits = _limits()
        payload, diagnostics, artifact = args.func(args, limits)
        result = CommandResult("ok", payload, diagnostics)
    except (WorkbenchError, ValueError, OSError, KeyError) as exc:
        message = str(exc) or type(exc).__name__
        if isinstance(exc, KeyError):
            message = f"missing key {message} in input document"
        result = CommandResult(
            "error",
            {"error": message, "kind": type(exc).__name__},
            [],
        )
        artifact = None

    for line in result.diagnostics:
        print(line, file=stderr)
    if result.status == "ok":
        if args.format == "table":
            print(render_table(result.payload), file=stdout)
        else:
            print(json.dumps(result.payload, indent=2), file=stdout)
        if args.out:
            doc = artifact if artifact is not None else result.payload
            with open(args.out, "w") as fh:
                json.dump(doc, fh, indent=2)
                fh.write("\n")
    else:
        print(json.dumps(result.payload, indent=2), file=stderr)
    return result


def main() -> None:
    sys.exit(run(sys.argv[1:]).exit_code)


if __name__ == "__main__":
    main()
