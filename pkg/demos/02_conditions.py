"""Finite planar conditions and the patterns their subsets realize.

A condition is a finite set of integer points whose columns are
pairwise disjoint, sit above the diagonal, and keep x-coordinates
away from y-coordinates.  Every n-subset then realizes exactly one
n-pattern, and small conditions realizing every pattern at once can
be grown mechanically.
"""

import random

from ramseybench import (
    FiniteCondition,
    Point,
    check_condition,
    classify_subsets,
    count_ntypes,
    extend_with_realizers,
    find_realizer,
    list_form,
    parse_list_form,
    random_condition,
    realized_type,
)

# hand-made condition: two points in column 0, two single columns
cond = FiniteCondition(frozenset(
    {Point(0, 1), Point(0, 2), Point(3, 5), Point(4, 6)}
))
print("condition:", sorted((p.x, p.y) for p in cond))
print("clauses ok:", check_condition(cond.points).ok)

# a violating variant, for contrast: y=2 collides with x=2
bad = [Point(0, 1), Point(0, 2), Point(2, 5)]
report = check_condition(bad)
print("bad variant ok:", report.ok,
      "| first violation:", report.violations[0].clause)

# every pair of points realizes exactly one 2-pattern
print("\npairs and their patterns:")
index = classify_subsets(cond, 2)
for t, subsets in sorted(index.items(), key=lambda kv: list_form(kv[0])):
    print(f"    {list_form(t):14}  x{len(subsets)}")

one_pair = (Point(0, 1), Point(0, 2))
print("tied pair realizes:", list_form(realized_type(one_pair)))

# hunting a realizer for a specific pattern
target = parse_list_form("x1<y1<x2<y2")
print("witness for", list_form(target), "->",
      [(p.x, p.y) for p in find_realizer(cond, target)])

# grow from nothing until every 2-pattern appears
grown = extend_with_realizers(FiniteCondition(frozenset()), 2)
met = len(classify_subsets(grown, 2))
print(f"\ngrown condition: {len(grown)} points,"
      f" {met}/{count_ntypes(2)} patterns realized")

# random conditions are valid by construction
rng = random.Random(7)
for _ in range(3):
    c = random_condition(rng, 6)
    assert check_condition(c.points).ok
print("three random 6-point conditions: all clauses hold")
