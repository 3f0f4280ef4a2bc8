"""Symbolic planar sets, their columns, and filter-sum membership.

Planar sets are built from finite point lists, rectangles with
finite-or-cofinite sides, the above-diagonal wedge, and single
columns, closed under union, intersection, complement.  Every column
of such an expression is finite or cofinite, and the eventual column
shape decides membership in the cofinite-by-cofinite sum.
"""

from ramseybench import (
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
    image_membership,
    in_fr2,
    sum_membership,
    tail_analysis,
    verdict_set,
)

FULL = FinCofin.cofinite_except(())

# everything above the diagonal, minus column 3, plus two stray points
expr = Union((
    Complement(Column(3, FULL)),
    FinitePoints(((3, 10), (3, 11))),
))

for x in (0, 3, 7):
    print(f"column {x}:", column_of(expr, x))

# the tail form: from some horizon on, every column looks the same
tail = tail_analysis(expr)
print(f"\nhorizon {tail.horizon}; beyond it columns equal {tail.upper}")

# membership in the sum of cofinite filters: cofinitely many
# cofinite columns
print("lies in the double-cofinite sum:", in_fr2(expr))

# the same verdict through the stand-in machinery: each column's
# filter votes, the index filter aggregates
frechet_votes = StandInSequence(Frechet(), ())
print("stand-in sum agrees:",
      sum_membership(expr, Frechet(), frechet_votes) == in_fr2(expr))

# a contrasting expression with a thin tail: the wedge above the
# diagonal cut down to a finite band of rows has only finite columns
band = Intersection((AboveDiag(), Rect(FULL, FinCofin.finite(range(20)))))
eventually = "cofinite" if tail_analysis(band).upper.cofinite else "finite"
print(f"wedge-in-band columns are eventually {eventually};"
      f" in the sum: {in_fr2(band)}")

# make column 2's vote principal at 9: the verdict set flips there
seq = StandInSequence(Frechet(), ((2, Principal(9)),))
print("verdict set with a principal vote at column 2:",
      verdict_set(expr, seq))

# first-projection membership reduces to the index stand-in alone
b = FinCofin.cofinite_except({0, 1})
u = Principal(5)
print("image membership:", image_membership(b, u, seq),
      "| direct:", u.holds(b))
