import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramseybench.setalgebra import (
    EMPTY,
    FULL,
    AboveDiag,
    Column,
    Complement,
    FinCofin,
    FinitePoints,
    Frechet,
    Intersection,
    Principal,
    Rect,
    StandInSequence,
    Union,
    column_of,
    fincofin_from_json,
    fincofin_to_json,
    image_membership,
    in_fr2,
    meets_all_fr2,
    planar_set_from_json,
    planar_set_to_json,
    random_fincofin,
    random_planar_set,
    sequence_from_json,
    standin_from_json,
    standin_to_json,
    sum_membership,
    tail_analysis,
    verdict_set,
)

from oracles import point_in


# ---------------------------------------------------------------- FinCofin

def test_fincofin_membership_and_str():
    f = FinCofin.finite({1, 4})
    c = FinCofin.cofinite_except({0, 2})
    assert f.contains(1) and not f.contains(2)
    assert c.contains(1) and not c.contains(2)
    assert not f.cofinite and c.cofinite
    assert EMPTY == FinCofin.finite(()) and FULL == FinCofin.cofinite_except(())


def test_fincofin_algebra_cases():
    a = FinCofin.finite({0, 1, 5})
    b = FinCofin.finite({1, 2})
    ca = FinCofin.cofinite_except({0, 1, 5})
    cb = FinCofin.cofinite_except({1, 2})

    assert a.union(b) == FinCofin.finite({0, 1, 2, 5})
    assert a.intersection(b) == FinCofin.finite({1})
    assert ca.union(cb) == FinCofin.cofinite_except({1})
    assert ca.intersection(cb) == FinCofin.cofinite_except({0, 1, 2, 5})
    assert a.union(cb) == FinCofin.cofinite_except({2})
    assert a.intersection(cb) == FinCofin.finite({0, 5})
    assert a.complement() == ca
    assert ca.complement() == a


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_fincofin_algebra_pointwise(seed):
    rng = random.Random(seed)
    a = random_fincofin(rng)
    b = random_fincofin(rng)
    probe = list(range(0, 30))
    for v in probe:
        assert a.union(b).contains(v) == (a.contains(v) or b.contains(v))
        assert a.intersection(b).contains(v) == (a.contains(v) and b.contains(v))
        assert a.complement().contains(v) != a.contains(v)


def test_members_below():
    c = FinCofin.cofinite_except({0, 2})
    assert c.members_below(5) == [1, 3, 4]
    f = FinCofin.finite({1, 9})
    assert f.members_below(5) == [1]


# ---------------------------------------------------------------- sections

def test_column_of_each_leaf():
    pts = FinitePoints(frozenset({(0, 3), (0, 5), (2, 4)}))
    assert column_of(pts, 0) == FinCofin.finite({3, 5})
    assert column_of(pts, 1) == EMPTY

    rect = Rect(FinCofin.finite({1, 2}), FinCofin.cofinite_except({7}))
    assert column_of(rect, 1) == FinCofin.cofinite_except({7})
    assert column_of(rect, 3) == EMPTY

    assert column_of(AboveDiag(), 4) == FinCofin.cofinite_except(range(5))

    col = Column(6, FinCofin.finite({1}))
    assert column_of(col, 6) == FinCofin.finite({1})
    assert column_of(col, 5) == EMPTY

    with pytest.raises(ValueError):
        column_of(pts, -1)


def test_column_of_composites():
    e = Union((AboveDiag(), Column(0, FinCofin.finite({0}))))
    assert column_of(e, 0) == FULL
    e = Complement(AboveDiag())
    assert column_of(e, 3) == FinCofin.finite({0, 1, 2, 3})
    e = Intersection((AboveDiag(), Rect(FULL, FinCofin.finite({2, 9}))))
    assert column_of(e, 5) == FinCofin.finite({9})


@settings(max_examples=120, deadline=None)
@given(st.integers(min_value=0, max_value=100_000))
def test_column_of_matches_point_oracle(seed):
    rng = random.Random(seed)
    expr = random_planar_set(rng)
    for x in range(0, 18, 3):
        section = column_of(expr, x)
        for y in range(0, 20, 2):
            assert section.contains(y) == point_in(expr, x, y)


# ---------------------------------------------------------------- tail form

@settings(max_examples=120, deadline=None)
@given(st.integers(min_value=0, max_value=100_000))
def test_tail_form_reproduces_far_sections(seed):
    rng = random.Random(seed)
    expr = random_planar_set(rng)
    form = tail_analysis(expr)
    for dx in (0, 3, 10):
        x = form.horizon + dx
        assert form.section(x) == column_of(expr, x)


def test_tail_form_rejects_early_columns():
    form = tail_analysis(Column(4, FinCofin.finite({1})))
    assert form.horizon == 5
    with pytest.raises(ValueError):
        form.section(2)


def test_tail_examples():
    assert tail_analysis(AboveDiag()) == __import__(
        "ramseybench"
    ).TailForm(0, FULL, EMPTY)
    band = Rect(FULL, FinCofin.finite({3, 4}))
    form = tail_analysis(band)
    assert form.upper == FinCofin.finite({3, 4}) == form.lower


def test_fr2_and_meets_examples():
    assert in_fr2(AboveDiag())
    assert not in_fr2(Complement(AboveDiag()))
    assert not in_fr2(Rect(FULL, FinCofin.finite({3})))
    assert in_fr2(Rect(FinCofin.cofinite_except({0}), FULL))
    assert meets_all_fr2(AboveDiag())
    assert not meets_all_fr2(FinitePoints(frozenset({(0, 1)})))


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=100_000))
def test_fr2_equals_frechet_frechet_sum(seed):
    rng = random.Random(seed)
    expr = random_planar_set(rng)
    seq = StandInSequence(Frechet())
    assert in_fr2(expr) == sum_membership(expr, Frechet(), seq)
    assert meets_all_fr2(expr) == in_fr2(expr)


# ---------------------------------------------------------------- sums

def test_verdict_set_mixes_explicit_and_tail():
    # sections of AboveDiag are always cofinite: Frechet says yes
    seq = StandInSequence(Frechet(), ((2, Principal(1)),))
    verdicts = verdict_set(AboveDiag(), seq)
    # at n=2 the principal stand-in asks: is 1 > 2?  no
    assert not verdicts.contains(2)
    assert verdicts.contains(0) and verdicts.contains(3) and verdicts.cofinite


def test_principal_sum_unfolds_to_point_membership():
    # U principal at a, sequence principal at b everywhere: expr in sum
    # iff (a, b) in expr
    for a in (0, 2, 5):
        for b in (0, 1, 7):
            seq = StandInSequence(Principal(b))
            u = Principal(a)
            expr = AboveDiag()
            assert sum_membership(expr, u, seq) == point_in(expr, a, b)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=100_000))
def test_principal_sum_unfolds_on_random_expressions(seed):
    rng = random.Random(seed)
    expr = random_planar_set(rng)
    a, b = rng.randrange(10), rng.randrange(10)
    got = sum_membership(expr, Principal(a), StandInSequence(Principal(b)))
    assert got == point_in(expr, a, b)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=100_000))
def test_image_membership_agrees_with_direct(seed):
    rng = random.Random(seed)
    b = random_fincofin(rng)
    u = Principal(rng.randrange(8)) if rng.random() < 0.5 else Frechet()
    default = Principal(rng.randrange(8)) if rng.random() < 0.5 else Frechet()
    exceptions = tuple(
        (i, Principal(rng.randrange(8)) if rng.random() < 0.5 else Frechet())
        for i in rng.sample(range(12), rng.randrange(3))
    )
    seq = StandInSequence(default, exceptions)
    assert image_membership(b, u, seq) == u.holds(b)


def test_standin_sequence_exceptions():
    seq = StandInSequence(Frechet(), ((3, Principal(2)), (1, Principal(0))))
    assert seq.at(3) == Principal(2)
    assert seq.at(1) == Principal(0)
    assert seq.at(0) == Frechet()
    with pytest.raises(ValueError):
        StandInSequence(Frechet(), ((1, Frechet()), (1, Principal(0))))


# ---------------------------------------------------------------- json

def test_fincofin_json_round_trip():
    for s in (FinCofin.finite({1, 2}), FinCofin.cofinite_except({0}), EMPTY, FULL):
        assert fincofin_from_json(fincofin_to_json(s)) == s
    assert fincofin_to_json(FinCofin.finite({2, 1})) == {"finite": [1, 2]}
    with pytest.raises(ValueError):
        fincofin_from_json({"finite": [1], "cofinite": [2]})


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=100_000))
def test_planar_set_json_round_trip(seed):
    rng = random.Random(seed)
    expr = random_planar_set(rng)
    doc = planar_set_to_json(expr)
    back = planar_set_from_json(doc)
    # structural round trip
    assert planar_set_to_json(back) == doc
    # and semantic agreement on a probe grid
    for x in range(0, 12, 4):
        assert column_of(back, x) == column_of(expr, x)


def test_standin_and_sequence_json():
    assert standin_from_json({"frechet": True}) == Frechet()
    assert standin_from_json({"principal": 5}) == Principal(5)
    assert standin_to_json(Principal(5)) == {"principal": 5}
    seq = sequence_from_json(
        {"default": {"frechet": True}, "exceptions": {"3": {"principal": 1}}}
    )
    assert seq.at(3) == Principal(1) and seq.at(0) == Frechet()
    with pytest.raises(ValueError):
        standin_from_json({"frechet": False})
    with pytest.raises(ValueError):
        sequence_from_json({"exceptions": {}})
