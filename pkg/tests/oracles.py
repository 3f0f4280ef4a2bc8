"""Independent brute-force reference implementations used by the tests.

Nothing here imports the enumeration, counting, or tail machinery it
checks: patterns are rebuilt from raw rank vectors filtered by the
defining clauses, and planar membership is evaluated point by point.
Slow on purpose; keep n and expression depth small.
"""

from itertools import product

from ramseybench.setalgebra import (
    AboveDiag,
    Column,
    Complement,
    FinitePoints,
    Intersection,
    Rect,
    Union,
)
from ramseybench.typecalc import NType, Symbol


def brute_force_ntypes(n: int) -> set[NType]:
    """Every n-pattern, by filtering all rank vectors on the 2n symbols.

    A rank vector assigns each symbol a level; normalization (levels form
    an initial segment) makes vectors correspond one-to-one with weak
    orders.  The defining clauses are then checked literally: y-levels
    strictly increasing, each x strictly below its y, and no y sharing a
    level with anything else.
    """
    syms = [Symbol("x", i) for i in range(1, n + 1)] + [
        Symbol("y", i) for i in range(1, n + 1)
    ]
    found = set()
    for vec in product(range(2 * n), repeat=2 * n):
        levels = sorted(set(vec))
        if levels != list(range(len(levels))):
            continue
        rank = dict(zip(syms, vec))
        if any(
            rank[Symbol("y", i)] >= rank[Symbol("y", i + 1)] for i in range(1, n)
        ):
            continue
        if any(rank[Symbol("x", i)] >= rank[Symbol("y", i)] for i in range(1, n + 1)):
            continue
        ok = True
        for i in range(1, n + 1):
            yi = Symbol("y", i)
            if any(s != yi and rank[s] == rank[yi] for s in syms):
                ok = False
                break
        if not ok:
            continue
        classes = []
        for level in range(len(levels)):
            classes.append(frozenset(s for s in syms if rank[s] == level))
        found.add(NType(n, tuple(classes)))
    return found


def point_in(expr, x: int, y: int) -> bool:
    """Direct membership of (x, y) in a planar expression, no sections."""
    if isinstance(expr, FinitePoints):
        return any(px == x and py == y for (px, py) in expr.points)
    if isinstance(expr, Rect):
        return expr.xs.contains(x) and expr.ys.contains(y)
    if isinstance(expr, AboveDiag):
        return y > x
    if isinstance(expr, Column):
        return x == expr.x and expr.content.contains(y)
    if isinstance(expr, Union):
        return any(point_in(a, x, y) for a in expr.args)
    if isinstance(expr, Intersection):
        return all(point_in(a, x, y) for a in expr.args)
    if isinstance(expr, Complement):
        return not point_in(expr.arg, x, y)
    raise TypeError(f"unknown expression node: {expr!r}")


def weak_order_count(k: int) -> int:
    """Number of weak orders on k labeled items, counted by brute force."""
    total = 0
    for vec in product(range(k), repeat=k):
        levels = sorted(set(vec))
        if levels == list(range(len(levels))):
            total += 1
    return total if k else 1
