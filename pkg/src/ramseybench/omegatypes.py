"""Finite prefixes of infinite order patterns and their chain discipline.

A prefix is an ordered sequence of classes: each class houses either a
single y-index or a nonempty finite set of x-indices.  Valid prefixes
have strictly increasing y-indices, and every y-index's x must already
sit in an earlier x-class.  The genuinely infinitary clauses (x-classes
are infinite, there are infinitely many of them, the class order has
type omega) cannot be judged on a prefix; validation records them as
assumed and flags every x-class as a stub.  Deliberately, nothing more
is enforced: in particular y-indices need not be consecutive, although
prefixes cut from full patterns would have them so.

``phi_prefix`` realizes a prefix as a planar condition by assigning one
strictly increasing value per class; each index j with both x_j and y_j
valued contributes the point (value of x_j, value of y_j).

``assign_D`` names the set a chain must enter next: position k of the
prefix demands the x-pool label "U" when class k is an x-class, and the
column label "V_v" when class k is the y of an index whose x got chain
value v.  ``zchain_check`` walks a chain through those demands, and
``h_set_member`` tests points against the resulting label assignment.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import MissingLabelError
from .pointsets import FiniteCondition, Point
from .setalgebra import FinCofin, fincofin_from_json, fincofin_to_json


@dataclass(frozen=True)
class YClass:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"y-index must be >= 1, got {self.index}")


@dataclass(frozen=True)
class XClass:
    indices: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(int(i) for i in self.indices))
        if not self.indices:
            raise ValueError("x-class must be nonempty")
        if any(i < 1 for i in self.indices):
            raise ValueError(f"x-indices must be >= 1, got {sorted(self.indices)}")


@dataclass(frozen=True)
class PrefixReport:
    ok: bool
    malformed: tuple[str, ...]
    violations: tuple[str, ...]
    assumed: tuple[str, ...]


ASSUMED_CLAUSES = (
    "every x-class is a finite stub of an infinite class",
    "infinitely many x-classes follow",
    "the class order continues with type omega",
)


def _coerce_classes(classes):
    out = []
    for cls in classes:
        if isinstance(cls, (YClass, XClass)):
            out.append(cls)
        elif isinstance(cls, dict) and set(cls) == {"y"}:
            out.append(YClass(int(cls["y"])))
        elif isinstance(cls, dict) and set(cls) == {"x"}:
            out.append(XClass(frozenset(int(i) for i in cls["x"])))
        else:
            raise ValueError(f"bad class entry: {cls!r}")
    return tuple(out)


def validate_prefix(classes) -> PrefixReport:
    """Judge a candidate class sequence; never raises on content problems."""
    try:
        seq = _coerce_classes(classes)
    except (ValueError, TypeError) as exc:
        return PrefixReport(False, (str(exc),), (), ())

    malformed: list[str] = []
    seen_x: set[int] = set()
    seen_y: set[int] = set()
    for cls in seq:
        if isinstance(cls, XClass):
            dup = cls.indices & seen_x
            if dup:
                malformed.append(
                    "x-indices repeated across classes: "
                    + ", ".join(map(str, sorted(dup)))
                )
            seen_x |= cls.indices
        else:
            if cls.index in seen_y:
                malformed.append(f"y-index repeated: {cls.index}")
            seen_y.add(cls.index)
    if malformed:
        return PrefixReport(False, tuple(malformed), (), ())

    violations: list[str] = []
    housed: set[int] = set()
    last_y = 0
    for cls in seq:
        if isinstance(cls, XClass):
            housed |= cls.indices
            continue
        if cls.index <= last_y:
            violations.append(
                f"y-indices must increase strictly: y{cls.index} after y{last_y}"
            )
        if cls.index not in housed:
            violations.append(
                f"y{cls.index} present without x{cls.index} in an earlier class"
            )
        last_y = max(last_y, cls.index)
    assumed = ASSUMED_CLAUSES if any(isinstance(c, XClass) for c in seq) else ASSUMED_CLAUSES[1:]
    return PrefixReport(not violations, (), tuple(violations), assumed)


@dataclass(frozen=True)
class OmegaTypePrefix:
    """A validated prefix.  Construction rejects malformed or out-of-order
    class sequences; the infinitary clauses stay assumptions."""

    classes: tuple

    def __post_init__(self):
        seq = _coerce_classes(self.classes)
        object.__setattr__(self, "classes", seq)
        report = validate_prefix(seq)
        if not report.ok:
            raise ValueError(
                "invalid prefix: " + "; ".join(report.malformed + report.violations)
            )

    def __len__(self) -> int:
        return len(self.classes)

    def position_of_x(self, index: int):
        for pos, cls in enumerate(self.classes):
            if isinstance(cls, XClass) and index in cls.indices:
                return pos
        return None

    def position_of_y(self, index: int):
        for pos, cls in enumerate(self.classes):
            if isinstance(cls, YClass) and cls.index == index:
                return pos
        return None


def _check_chain(z) -> tuple[int, ...]:
    vals = tuple(int(v) for v in z)
    if any(v < 0 for v in vals):
        raise ValueError("chain values must be naturals")
    if any(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
        raise ValueError(f"chain values must increase strictly: {vals}")
    return vals


def phi_prefix(prefix: OmegaTypePrefix, z) -> FiniteCondition:
    """Realize a prefix as the condition its class values spell out.

    ``z`` assigns one value per class, strictly increasing.  Every index
    with both its x-class and y-class inside the prefix contributes the
    point (x-class value, y-class value).
    """
    vals = _check_chain(z)
    if len(vals) != len(prefix):
        raise ValueError(
            f"need one value per class: {len(prefix)} classes, {len(vals)} values"
        )
    points = []
    for pos, cls in enumerate(prefix.classes):
        if not isinstance(cls, YClass):
            continue
        xpos = prefix.position_of_x(cls.index)
        if xpos is None:
            continue
        points.append(Point(vals[xpos], vals[pos]))
    return FiniteCondition(frozenset(points))


def assign_D(prefix: OmegaTypePrefix, s) -> str:
    """Label of the set the chain must enter after the values in s.

    With k = len(s), class k of the prefix answers: an x-class demands
    the pool label "U"; the y-class of index j demands "V_v" where v is
    the value s gave to x_j's class.
    """
    vals = _check_chain(s)
    k = len(vals)
    if k >= len(prefix):
        raise ValueError(
            f"prefix has {len(prefix)} classes; no class at position {k}"
        )
    cls = prefix.classes[k]
    if isinstance(cls, XClass):
        return "U"
    xpos = prefix.position_of_x(cls.index)
    if xpos is None or xpos >= k:
        raise ValueError(
            f"x{cls.index} has no valued class before position {k}"
        )
    return f"V_{vals[xpos]}"


class ZAssignment:
    """Finite table from labels ("U", "V_3", ...) to FinCofin sets."""

    def __init__(self, table: dict):
        self._table = dict(table)
        for label, s in self._table.items():
            if not isinstance(s, FinCofin):
                raise ValueError(f"label {label!r} must map to a FinCofin set")

    def lookup(self, label: str) -> FinCofin:
        if label not in self._table:
            raise MissingLabelError(label)
        return self._table[label]

    def labels(self) -> list[str]:
        return sorted(self._table)

    def __eq__(self, other):
        return isinstance(other, ZAssignment) and self._table == other._table


@dataclass(frozen=True)
class ChainReport:
    ok: bool
    failed_at: int | None


def zchain_check(prefix: OmegaTypePrefix, z, za: ZAssignment) -> ChainReport:
    """Walk the chain through the sets its own prefix demands.

    Step n requires z_n to lie in the set labeled by assign_D over the
    first n values.  Returns the least failing index, or a clean pass.
    A label absent from the assignment raises MissingLabelError.
    """
    vals = _check_chain(z)
    if len(vals) > len(prefix):
        raise ValueError(
            f"chain of length {len(vals)} exceeds the {len(prefix)}-class prefix"
        )
    for n in range(len(vals)):
        label = assign_D(prefix, vals[:n])
        if not za.lookup(label).contains(vals[n]):
            return ChainReport(False, n)
    return ChainReport(True, None)


def h_set_member(point, za: ZAssignment) -> bool:
    """Is the point in the planar set the assignment carves out?

    Requires the x to lie in the pool set "U" and the y to lie in the
    column set "V_x"; both labels must be assigned.
    """
    p = point if isinstance(point, Point) else Point(*point)
    return za.lookup("U").contains(p.x) and za.lookup(f"V_{p.x}").contains(p.y)


def grid_prefix(n_points: int) -> OmegaTypePrefix:
    """Prefix of the pattern cut from a diagonally enumerated grid.

    Walk grid slots (column, slot) by ascending diagonal sum, columns
    first within a diagonal.  A column's first visit allocates its
    x-value; every visit allocates the next y-value.  The class sequence
    in value order is the prefix; x-classes hold the point indices (in
    y-order) their column received so far.
    """
    if n_points < 1:
        raise ValueError(f"need at least one point, got {n_points}")
    slots = []
    d = 0
    while len(slots) < n_points:
        for col in range(d + 1):
            slots.append(col)
            if len(slots) == n_points:
                break
        d += 1
    classes: list = []
    column_class: dict[int, int] = {}
    for j, col in enumerate(slots, start=1):
        if col not in column_class:
            column_class[col] = len(classes)
            classes.append(XClass(frozenset({j})))
        else:
            pos = column_class[col]
            classes[pos] = XClass(classes[pos].indices | {j})
        classes.append(YClass(j))
    return OmegaTypePrefix(tuple(classes))


def random_prefix(rng: random.Random, n_classes: int) -> OmegaTypePrefix:
    """Seeded valid prefix with the given class count."""
    if n_classes < 1:
        raise ValueError("need at least one class")
    classes: list = []
    next_x = 1
    housed: list[int] = []
    last_y = 0
    for _ in range(n_classes):
        ready = [j for j in housed if j > last_y]
        if ready and rng.random() < 0.55:
            j = rng.choice(ready)
            classes.append(YClass(j))
            last_y = j
        else:
            size = rng.randint(1, 3)
            indices = frozenset(range(next_x, next_x + size))
            next_x += size
            housed.extend(sorted(indices))
            classes.append(XClass(indices))
    return OmegaTypePrefix(tuple(classes))


def prefix_to_json(prefix: OmegaTypePrefix) -> dict:
    classes = []
    for cls in prefix.classes:
        if isinstance(cls, XClass):
            classes.append({"x": sorted(cls.indices)})
        else:
            classes.append({"y": cls.index})
    return {"classes": classes}


def prefix_from_json(doc: dict) -> OmegaTypePrefix:
    if not isinstance(doc, dict) or "classes" not in doc:
        raise ValueError("prefix document needs 'classes'")
    return OmegaTypePrefix(_coerce_classes(doc["classes"]))


def zassignment_from_json(doc: dict) -> ZAssignment:
    if not isinstance(doc, dict):
        raise ValueError("assignment document must be an object")
    return ZAssignment({k: fincofin_from_json(v) for k, v in doc.items()})


def zassignment_to_json(za: ZAssignment) -> dict:
    return {label: fincofin_to_json(za.lookup(label)) for label in za.labels()}
