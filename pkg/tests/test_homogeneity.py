import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramseybench.errors import LexOrderError, LimitError
from ramseybench.homogeneity import (
    NO_DATA,
    STABLE_0,
    STABLE_1,
    UNSTABLE,
    Coloring,
    TernaryRelationGrid,
    check_tau_homogeneous,
    coloring_from_json,
    count_classes_met,
    extract_S_from_R,
    grid_from_json,
    grid_to_json,
    realized_type_coloring,
    search_homogeneous,
    stabilize_lex,
    weak_ramsey_floor_demo,
)
from ramseybench.pointsets import (
    FiniteCondition,
    Point,
    extend_with_realizers,
    random_condition,
)
from ramseybench.typecalc import count_ntypes, enumerate_ntypes, list_form, parse_list_form

EMPTY = FiniteCondition(frozenset())


def cond(*pairs):
    return FiniteCondition(frozenset(Point(x, y) for x, y in pairs))


GROUND = cond((0, 1), (0, 2), (3, 5), (4, 6))
TIED = parse_list_form("x1=x2<y1<y2")
SPLIT = parse_list_form("x1<x2<y1<y2")


def test_coloring_from_rule_and_table_agree():
    rule = Coloring.from_rule(GROUND, 2, lambda pts: len({p.x for p in pts}) % 2)
    table = {
        frozenset(sub): rule.color_of(sub)
        for sub in map(frozenset, __import__("itertools").combinations(GROUND.points, 2))
    }
    explicit = Coloring.from_table(GROUND, 2, table)
    for sub in table:
        assert explicit.color_of(sub) == rule.color_of(sub)


def test_coloring_totality_enforced_unless_partial():
    sub = frozenset({Point(0, 1), Point(0, 2)})
    with pytest.raises(ValueError):
        Coloring.from_table(GROUND, 2, {sub: "red"})
    partial = Coloring.from_table(GROUND, 2, {sub: "red"}, partial=True)
    assert partial.color_of(sub) == "red"
    assert partial.color_of(frozenset({Point(0, 1), Point(3, 5)})) is None


def test_color_of_outside_ground_or_wrong_size():
    c = realized_type_coloring(GROUND, 2)
    with pytest.raises(ValueError):
        c.color_of([Point(0, 1), Point(99, 100)])
    with pytest.raises(ValueError):
        c.color_of([Point(0, 1)])
    # None is reserved for in-ground subsets outside a restricted domain
    tied_only = Coloring.from_rule(
        GROUND, 2,
        lambda pts: "t" if len({p.x for p in pts}) == 1 else None,
    )
    assert tied_only.color_of([Point(0, 1), Point(3, 5)]) is None
    assert tied_only.color_of([Point(0, 1), Point(0, 2)]) == "t"


def test_check_tau_homogeneous_happy_and_vacuous():
    coloring = Coloring.from_rule(GROUND, 2, lambda pts: "c")
    report = check_tau_homogeneous(GROUND, coloring, TIED)
    assert report.homogeneous and report.color == "c" and not report.vacuous
    assert report.realizers == 1

    # no x2<x1<y1<y2 realizer in GROUND: vacuous
    report = check_tau_homogeneous(GROUND, coloring, parse_list_form("x2<x1<y1<y2"))
    assert report.homogeneous and report.vacuous and report.color is None


def test_check_tau_homogeneous_detects_split_colors():
    coloring = Coloring.from_rule(GROUND, 2, lambda pts: min(p.y for p in pts))
    report = check_tau_homogeneous(GROUND, coloring, parse_list_form("x1<y1<x2<y2"))
    assert not report.homogeneous
    assert report.color is None
    assert report.realizers >= 2


def test_check_tau_homogeneous_arity_mismatch():
    coloring = realized_type_coloring(GROUND, 2)
    with pytest.raises(ValueError):
        check_tau_homogeneous(GROUND, coloring, parse_list_form("x1<y1"))


def test_count_classes_met_on_pattern_coloring():
    grown = extend_with_realizers(EMPTY, 2)
    coloring = realized_type_coloring(grown, 2)
    assert count_classes_met(grown, coloring) == 4
    assert count_classes_met([], coloring) == 0


def test_search_exact_finds_maximum_and_is_lex_least():
    # tied pairs colored by least y parity; only one 4-subset avoids a clash
    ground = cond((0, 1), (0, 2), (3, 4), (3, 5), (3, 6))
    coloring = Coloring.from_rule(
        ground, 2,
        lambda pts: min(p.y for p in pts) % 2 if len({p.x for p in pts}) == 1 else None,
    )
    result = search_homogeneous(coloring, TIED, mode="exact")
    assert result.exact
    assert result.size == 4
    assert result.points == (Point(0, 1), Point(0, 2), Point(3, 5), Point(3, 6))


def test_search_exact_respects_min_size_flag():
    ground = cond((0, 1), (0, 2), (3, 4), (3, 5), (3, 6))
    coloring = Coloring.from_rule(
        ground, 2,
        lambda pts: min(p.y for p in pts) % 2 if len({p.x for p in pts}) == 1 else None,
    )
    result = search_homogeneous(coloring, TIED, min_size=5, mode="exact")
    assert result.size == 4 and not result.met_min_size


def test_search_exact_refuses_large_ground():
    rng = random.Random(0)
    big = random_condition(rng, 17)
    coloring = realized_type_coloring(big, 2)
    with pytest.raises(LimitError):
        search_homogeneous(coloring, TIED, mode="exact")
    # explicit bound raise lets it through
    search_homogeneous(coloring, TIED, mode="exact", bound=17)


def test_search_greedy_always_returns_homogeneous_subset():
    rng = random.Random(42)
    for _ in range(20):
        ground = random_condition(rng, rng.randint(4, 12))
        coloring = Coloring.from_rule(
            ground, 2, lambda pts: (min(p.y for p in pts) + max(p.x for p in pts)) % 3
        )
        result = search_homogeneous(coloring, SPLIT, mode="greedy")
        assert not result.exact
        report = check_tau_homogeneous(result.points, coloring, SPLIT)
        assert report.homogeneous
        assert "removed" in result.stats


def test_search_greedy_agrees_with_exact_often_enough_to_matter():
    # not an optimality claim, just a sanity check that greedy is not trivial
    ground = cond((0, 1), (0, 2), (3, 4), (3, 5))
    coloring = Coloring.from_rule(
        ground, 2,
        lambda pts: min(p.y for p in pts) % 2 if len({p.x for p in pts}) == 1 else None,
    )
    exact = search_homogeneous(coloring, TIED, mode="exact")
    greedy = search_homogeneous(coloring, TIED, mode="greedy")
    assert len(greedy.points) >= 3
    assert check_tau_homogeneous(greedy.points, coloring, TIED).homogeneous
    assert exact.size >= greedy.size


def test_floor_demo_exact_counts():
    for n in (2, 3):
        grown = extend_with_realizers(EMPTY, n)
        report = weak_ramsey_floor_demo(grown, n)
        assert report.classes_met == count_ntypes(n)
        assert report.t_n == count_ntypes(n)
        assert report.floor_holds
        assert report.missing == ()


def test_floor_demo_reports_missing_patterns():
    report = weak_ramsey_floor_demo(GROUND, 2)
    assert not report.floor_holds
    assert "x2<x1<y1<y2" in report.missing
    assert report.classes_met == 3


def test_stabilize_lex_basic():
    rows = [[0, 0, 1], [0, 1, 0], [0, 1, 1]]
    report = stabilize_lex(rows)
    assert report.stable == (0, 1, 1)
    assert report.positions == (0, 1, 2)


def test_stabilize_lex_column_zero_never_moves():
    rows = [[0, 1], [1, 0], [1, 1]]
    report = stabilize_lex(rows)
    assert report.stable == (1, 1)
    assert report.positions[0] == 1


def test_stabilize_lex_rejects_disorder():
    with pytest.raises(LexOrderError) as err:
        stabilize_lex([[0, 1], [0, 0]])
    assert err.value.index == 0
    assert err.value.witness == ((0, 1), (0, 0))


def test_stabilize_lex_rejects_ragged_and_nonbinary():
    with pytest.raises(ValueError):
        stabilize_lex([[0, 1], [0]])
    with pytest.raises(ValueError):
        stabilize_lex([[0, 2]])
    with pytest.raises(ValueError):
        stabilize_lex([])


def test_stabilize_decreasing_is_bitwise_mirror():
    rows = [[1, 1, 0], [1, 0, 1], [1, 0, 0]]
    report = stabilize_lex(rows, direction="decreasing")
    mirrored = stabilize_lex([[1 - b for b in row] for row in rows])
    assert report.stable == tuple(1 - b for b in mirrored.stable)
    assert report.positions == mirrored.positions


def test_stabilize_decreasing_flags_disorder_on_original_rows():
    with pytest.raises(LexOrderError) as err:
        stabilize_lex([[0, 0], [0, 1]], direction="decreasing")
    assert err.value.witness == ((0, 0), (0, 1))


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=10_000))
def test_stabilize_lex_property(width, seed):
    rng = random.Random(seed)
    rows = sorted(
        {tuple(rng.randint(0, 1) for _ in range(width)) for _ in range(rng.randint(1, 12))}
    )
    report = stabilize_lex(rows)
    assert len(report.stable) == width
    assert len(report.positions) == width
    # each column really is constant from its reported position on
    for j, pos in enumerate(report.positions):
        tail = {row[j] for row in rows[pos:]}
        assert tail == {report.stable[j]}
        if pos > 0:
            assert rows[pos - 1][j] != report.stable[j]


def grid_cond():
    return cond((0, 4), (0, 5), (0, 8), (1, 3), (1, 6), (2, 10))


def test_extract_s_statuses():
    grid = TernaryRelationGrid.from_function(
        3, 12, 2, lambda x, y, z: (y + z) % 2 == 0 if x < 2 else y < 3
    )
    statuses = extract_S_from_R(grid, grid_cond(), window=3)
    assert statuses[(0, 0)] == UNSTABLE
    assert statuses[(0, 1)] == UNSTABLE
    assert statuses[(1, 0)] == NO_DATA
    assert statuses[(2, 1)] == NO_DATA

    flat = TernaryRelationGrid.from_function(3, 12, 2, lambda x, y, z: z == 1)
    statuses = extract_S_from_R(flat, grid_cond(), window=1)
    assert statuses[(0, 0)] == STABLE_0
    assert statuses[(0, 1)] == STABLE_1
    assert statuses[(1, 1)] == STABLE_1


def test_extract_s_window_and_bounds_checks():
    grid = TernaryRelationGrid.from_function(1, 2, 1, lambda x, y, z: True)
    with pytest.raises(ValueError):
        extract_S_from_R(grid, grid_cond(), window=0)
    with pytest.raises(ValueError):
        extract_S_from_R(grid, cond((5, 9)), window=1)  # x=5 outside grid


def test_grid_json_round_trip():
    grid = TernaryRelationGrid.from_function(2, 3, 2, lambda x, y, z: (x + y + z) % 2 == 0)
    assert grid_from_json(grid_to_json(grid)) == grid
    with pytest.raises(ValueError):
        grid_from_json({"triples": []})


def test_coloring_json_round_trip_and_validation():
    doc = {
        "n": 2,
        "entries": [
            {"subset": [[0, 1], [0, 2]], "color": "red"},
            {"subset": [[0, 1], [3, 5]], "color": 7},
            {"subset": [[0, 2], [3, 5]], "color": 7},
        ],
    }
    coloring = coloring_from_json(doc)
    assert coloring.n == 2
    assert coloring.color_of([Point(0, 1), Point(0, 2)]) == "red"
    bad = {"n": 2, "entries": [{"subset": [[0, 1]], "color": 1}]}
    with pytest.raises(ValueError):
        coloring_from_json(bad)


def test_coloring_csv_ingestion(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text("0,1,0,2,red\n0,1,3,5,blue\n0,2,3,5,blue\n")
    from ramseybench.homogeneity import coloring_from_csv

    coloring = coloring_from_csv(str(path))
    assert coloring.color_of([Point(0, 1), Point(0, 2)]) == "red"
    assert coloring.color_of([Point(0, 2), Point(3, 5)]) == "blue"
