import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramseybench.errors import NoRealizedTypeError
from ramseybench.pointsets import (
    CLAUSE_DIAGONAL,
    CLAUSE_SECTIONS,
    CLAUSE_XY,
    FiniteCondition,
    Point,
    check_condition,
    classify_subsets,
    condition_from_json,
    condition_to_json,
    extend_with_realizers,
    find_realizer,
    random_condition,
    realized_type,
    subset_realizes,
)
from ramseybench.typecalc import count_ntypes, enumerate_ntypes, list_form, parse_list_form

EMPTY = FiniteCondition(frozenset())


def cond(*pairs):
    return FiniteCondition(frozenset(Point(x, y) for x, y in pairs))


def test_point_rejects_negative():
    with pytest.raises(ValueError):
        Point(-1, 2)


def test_check_condition_accepts_good_sets():
    assert check_condition([]).ok
    assert check_condition([(0, 1)]).ok
    assert check_condition([(0, 1), (0, 2), (3, 5)]).ok


def test_check_condition_flags_shared_section_value():
    report = check_condition([(0, 3), (1, 3)])
    assert not report.ok
    assert {v.clause for v in report.violations} == {CLAUSE_SECTIONS}


def test_check_condition_flags_on_or_below_diagonal():
    report = check_condition([(2, 2)])
    assert {v.clause for v in report.violations} == {CLAUSE_XY, CLAUSE_DIAGONAL}
    report = check_condition([(5, 3)])
    assert CLAUSE_DIAGONAL in {v.clause for v in report.violations}


def test_check_condition_flags_x_meeting_y():
    report = check_condition([(0, 2), (2, 5)])
    assert not report.ok
    assert {v.clause for v in report.violations} == {CLAUSE_XY}


def test_violation_witnesses_are_reported():
    report = check_condition([(0, 3), (1, 3)])
    (violation,) = report.violations
    assert set(violation.witness) == {Point(0, 3), Point(1, 3)}
    assert "sections-disjoint" in violation.describe()


def test_finite_condition_rejects_invalid_input():
    with pytest.raises(ValueError):
        cond((0, 3), (1, 3))


def test_columns_and_ordering():
    c = cond((0, 1), (0, 4), (3, 5))
    assert c.columns() == {0: [1, 4], 3: [5]}
    assert [p.y for p in c.sorted_points] == [1, 4, 5]
    assert len(c) == 3
    assert Point(0, 4) in c


def test_realized_type_tied_and_split():
    assert list_form(realized_type([(0, 1), (0, 2)])) == "x1=x2<y1<y2"
    assert list_form(realized_type([(0, 2), (1, 3)])) == "x1<x2<y1<y2"
    assert list_form(realized_type([(1, 2), (0, 3)])) == "x2<x1<y1<y2"
    assert list_form(realized_type([(0, 1), (2, 3)])) == "x1<y1<x2<y2"


def test_realized_type_single_point():
    assert list_form(realized_type([(4, 9)])) == "x1<y1"


def test_realized_type_raises_with_clause():
    with pytest.raises(NoRealizedTypeError) as err:
        realized_type([(0, 3), (1, 3)])
    assert err.value.clause == CLAUSE_SECTIONS
    with pytest.raises(NoRealizedTypeError):
        realized_type([(0, 2), (2, 4)])


def test_subset_realizes_agrees_with_realized_type():
    c = cond((0, 1), (0, 2), (3, 5), (4, 6), (8, 9), (7, 10))
    for n in (1, 2, 3):
        all_types = enumerate_ntypes(n)
        for combo in combinations(c.sorted_points, n):
            t = realized_type(combo)
            assert subset_realizes(combo, t)
            for other in all_types:
                if other != t:
                    assert not subset_realizes(combo, other)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=2, max_value=8))
def test_random_conditions_realize_exactly_one_type(seed, n_points):
    rng = random.Random(seed)
    c = random_condition(rng, n_points)
    assert len(c) == n_points
    assert check_condition(c.points).ok
    n = 2 if n_points < 6 else 3
    all_types = enumerate_ntypes(n)
    for combo in combinations(c.sorted_points, n):
        t = realized_type(combo)
        matches = [u for u in all_types if subset_realizes(combo, u)]
        assert matches == [t]


def test_find_realizer_prefers_least_y_sequence():
    c = cond((0, 1), (0, 2), (3, 5), (4, 6))
    got = find_realizer(c, parse_list_form("x1=x2<y1<y2"))
    assert got == (Point(0, 1), Point(0, 2))
    got = find_realizer(c, parse_list_form("x1<x2<y1<y2"))
    assert got == (Point(3, 5), Point(4, 6))
    assert find_realizer(c, parse_list_form("x2<x1<y1<y2")) is None


def test_find_realizer_empty_and_too_small():
    assert find_realizer(EMPTY, parse_list_form("x1<y1")) is None
    assert find_realizer(cond((0, 1)), parse_list_form("x1<y1<x2<y2")) is None


def test_classify_subsets_partitions_everything():
    c = cond((0, 1), (0, 2), (3, 5), (4, 6), (8, 9), (7, 10))
    for n in (1, 2, 3):
        index = classify_subsets(c, n)
        total = sum(len(subs) for subs in index.values())
        from math import comb

        assert total == comb(len(c), n)
        for t, subs in index.items():
            for sub in subs:
                assert realized_type(sub) == t


def test_extend_from_empty_covers_all_two_types():
    grown = extend_with_realizers(EMPTY, 2)
    assert check_condition(grown.points).ok
    assert len(grown) <= 7  # documented bound: at most 7 points suffice
    for t in enumerate_ntypes(2):
        assert find_realizer(grown, t) is not None


def test_extend_from_empty_covers_all_three_types():
    grown = extend_with_realizers(EMPTY, 3)
    assert check_condition(grown.points).ok
    for t in enumerate_ntypes(3):
        assert find_realizer(grown, t) is not None
    assert len(classify_subsets(grown, 3)) == count_ntypes(3)


def test_extend_is_monotone_and_idempotent():
    base = cond((0, 1), (2, 4))
    grown = extend_with_realizers(base, 2)
    assert base.issubset(grown)
    again = extend_with_realizers(grown, 2)
    assert again == grown  # nothing missing, nothing added


def test_extend_keeps_fresh_values_above_input():
    base = cond((0, 1), (2, 4))
    grown = extend_with_realizers(base, 2)
    new_points = set(grown.points) - set(base.points)
    top = 4
    assert all(p.x > top and p.y > top for p in new_points)


def test_json_round_trip():
    c = cond((0, 1), (0, 2), (3, 5))
    doc = condition_to_json(c)
    assert doc == [[0, 1], [0, 2], [3, 5]]
    assert condition_from_json(doc) == c
    assert condition_from_json([]) == EMPTY


def test_json_rejects_bad_documents():
    for bad in ({"pts": []}, [[1]], [[1, 2, 3]], "nope"):
        with pytest.raises(ValueError):
            condition_from_json(bad)


def test_level_signature_agrees_with_realized_type():
    # the scan helpers compare signatures; hold them to the real thing
    from ramseybench.pointsets import _level_signature, _type_signature

    rng = random.Random(5)
    for _ in range(60):
        c = random_condition(rng, rng.randint(2, 7))
        for n in (1, 2, 3):
            for combo in combinations(c.sorted_points, n):
                t = realized_type(combo)
                assert _level_signature(combo) == _type_signature(t)


def test_union_checks_validity():
    c = cond((0, 1))
    with pytest.raises(ValueError):
        c.union([Point(2, 1)])  # reuses section value 1
    bigger = c.union([Point(2, 3)])
    assert len(bigger) == 2
