"""Prefixes of infinite patterns and the chains that realize them.

An infinite pattern interleaves tie-classes of x's with single y's.
Finite prefixes of such patterns validate structurally; an increasing
value chain realizes a prefix as a planar condition, and a table of
finite/cofinite sets per label decides which chains are accepted.
Accepted chains always land inside the set the table carves out.
"""

from ramseybench import (
    FinCofin,
    OmegaTypePrefix,
    XClass,
    YClass,
    ZAssignment,
    assign_D,
    check_condition,
    grid_prefix,
    h_set_member,
    phi_prefix,
    validate_prefix,
    zchain_check,
)

# a three-class prefix: x1 and x2 tied, then y1, then y2
prefix = OmegaTypePrefix((XClass(frozenset({1, 2})), YClass(1), YClass(2)))
report = validate_prefix(prefix.classes)
print("prefix valid:", report.ok, "| assumptions:", len(report.assumed))

# a broken candidate: y2 arrives before y1
broken = validate_prefix([{"x": [1, 2]}, {"y": 2}, {"y": 1}])
print("out-of-order y's:", broken.violations[0])

# realize the prefix with the chain 0 < 1 < 2
cond = phi_prefix(prefix, (0, 1, 2))
print("\nrealized points:", sorted((p.x, p.y) for p in cond))
print("condition clauses hold:", check_condition(cond.points).ok)

# which label is consulted as a chain grows?
for s in ((), (7,), (7, 9)):
    print(f"after {s}: consult", assign_D(prefix, s))

# a label table; labels not mentioned are simply never demanded
table = ZAssignment({
    "U": FinCofin.cofinite_except(range(5)),
    "V_7": FinCofin.cofinite_except({8}),
})
for chain in ((7, 9, 12), (7, 8, 12), (2, 9, 12)):
    walk = zchain_check(prefix, chain, table)
    verdict = "accepted" if walk.ok else f"rejected at step {walk.failed_at}"
    print(f"chain {chain}: {verdict}")

# the accepted chain's points lie in the carved planar set
accepted = phi_prefix(prefix, (7, 9, 12))
print("all points inside the carved set:",
      all(h_set_member(p, table) for p in accepted))

# the diagonal grid pattern: its prefix for six points
g = grid_prefix(6)
pts = phi_prefix(g, tuple(range(len(g))))
print("\ngrid prefix classes:", len(g.classes),
      "| grid points:", sorted((p.x, p.y) for p in pts))
