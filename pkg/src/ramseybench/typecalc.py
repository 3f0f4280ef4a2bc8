"""Order patterns on pair symbols: validation, enumeration, counting, transforms.

An n-pattern (``NType``) is a linear pre-order on the 2n formal symbols
x1..xn, y1..yn subject to three clauses:

* the y's increase strictly: y1 < y2 < ... < yn;
* each xi sits strictly before its partner yi;
* only x-symbols may tie (every equivalence class is a single y or a
  nonempty set of x's).

Canonical form is the ordered tuple of equivalence classes.  Enumeration
walks gap assignments: the n y's cut the line into n + 1 gaps, gap g
being the stretch just before y_{g+1}; each xi must land in a gap g < i,
and the x's sharing a gap carry a weak order (an ordered set partition).
Weak orders are emitted in lexicographic order of their rank vectors,
so the whole enumeration is lexicographic in (gap vector, rank vectors).
Summing products of per-gap weak-order counts gives an enumeration-free
count of the same patterns, used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import comb

MAX_N = 6  # enumeration is exhaustive; counts explode well before this hurts


@dataclass(frozen=True, order=True)
class Symbol:
    """One formal symbol, e.g. x3 or y1.  kind is "x" or "y", index >= 1."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("x", "y"):
            raise ValueError(f"symbol kind must be 'x' or 'y', got {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"symbol index must be >= 1, got {self.index}")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Symbol":
        text = text.strip()
        if len(text) < 2 or text[0] not in ("x", "y") or not text[1:].isdigit():
            raise ValueError(f"cannot parse symbol {text!r}")
        return cls(text[0], int(text[1:]))


def _expected_symbols(n: int) -> frozenset[Symbol]:
    return frozenset(
        Symbol(kind, i) for kind in ("x", "y") for i in range(1, n + 1)
    )


def _class_problems(n: int, classes) -> tuple[list[str], list[str]]:
    """Check a candidate class sequence.  Returns (malformed, violations)."""
    malformed: list[str] = []
    seen: list[Symbol] = []
    for cls in classes:
        if not cls:
            malformed.append("empty equivalence class")
            continue
        for sym in cls:
            if not isinstance(sym, Symbol):
                malformed.append(f"not a symbol: {sym!r}")
            else:
                seen.append(sym)
    expected = _expected_symbols(n)
    if len(seen) != len(set(seen)):
        dupes = sorted({s for s in seen if seen.count(s) > 1})
        malformed.append("symbols repeated: " + ", ".join(map(str, dupes)))
    stray = set(seen) - expected
    if stray:
        malformed.append("dangling indices: " + ", ".join(map(str, sorted(stray))))
    missing = expected - set(seen)
    if missing and not malformed:
        malformed.append("symbols missing: " + ", ".join(map(str, sorted(missing))))
    if malformed:
        return malformed, []

    violations: list[str] = []
    position = {}
    for pos, cls in enumerate(classes):
        for sym in cls:
            position[sym] = pos
        kinds = {sym.kind for sym in cls}
        if "y" in kinds and len(cls) > 1:
            violations.append(
                "equivalent symbols must both be x's: "
                + "=".join(map(str, sorted(cls)))
            )
    for i in range(1, n):
        if position[Symbol("y", i)] >= position[Symbol("y", i + 1)]:
            violations.append(f"y symbols must increase strictly: y{i} vs y{i + 1}")
    for i in range(1, n + 1):
        if position[Symbol("x", i)] >= position[Symbol("y", i)]:
            violations.append(f"x{i} must sit strictly before y{i}")
    return [], violations


@dataclass(frozen=True)
class NType:
    """A validated n-pattern in canonical class-sequence form.

    ``classes`` is the ordered tuple of equivalence classes, least first;
    each class is a frozenset of Symbols.  Construction validates, so an
    NType in hand is always well formed.
    """

    n: int
    classes: tuple[frozenset[Symbol], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        classes = tuple(frozenset(c) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        malformed, violations = _class_problems(self.n, classes)
        if malformed or violations:
            raise ValueError("invalid pattern: " + "; ".join(malformed + violations))

    @cached_property
    def rank(self) -> dict[Symbol, int]:
        return {sym: pos for pos, cls in enumerate(self.classes) for sym in cls}

    def leq(self, a: Symbol, b: Symbol) -> bool:
        return self.rank[a] <= self.rank[b]

    def equivalent(self, a: Symbol, b: Symbol) -> bool:
        return self.rank[a] == self.rank[b]

    def __str__(self) -> str:
        return list_form(self)


@dataclass(frozen=True)
class TypeValidation:
    """Outcome of validate_ntype: ok, or malformed input, or clause breaks."""

    ok: bool
    malformed: tuple[str, ...]
    violations: tuple[str, ...]


def _as_pair_set(relation) -> set[tuple[Symbol, Symbol]]:
    pairs = set()
    for item in relation:
        a, b = item
        if isinstance(a, str):
            a = Symbol.parse(a)
        if isinstance(b, str):
            b = Symbol.parse(b)
        pairs.add((a, b))
    return pairs


def validate_ntype(n: int, relation) -> TypeValidation:
    """Check a binary relation (pairs (a, b) meaning a <= b) against the clauses.

    Malformed input (wrong symbol population) is reported separately from
    clause violations; in the malformed case no clause is judged.
    """
    if n < 1:
        return TypeValidation(False, ("n must be >= 1",), ())
    try:
        pairs = _as_pair_set(relation)
    except (ValueError, TypeError) as exc:
        return TypeValidation(False, (str(exc),), ())

    mentioned = {s for p in pairs for s in p}
    expected = _expected_symbols(n)
    malformed = []
    stray = mentioned - expected
    if stray:
        malformed.append("dangling indices: " + ", ".join(map(str, sorted(stray))))
    missing = expected - mentioned
    if missing:
        malformed.append(
            f"symbol count != {2 * n}: missing "
            + ", ".join(map(str, sorted(missing)))
        )
    if malformed:
        return TypeValidation(False, tuple(malformed), ())

    syms = sorted(expected)
    violations = []
    for s in syms:
        if (s, s) not in pairs:
            violations.append(f"not reflexive at {s}")
    for a in syms:
        for b in syms:
            if a < b and (a, b) not in pairs and (b, a) not in pairs:
                violations.append(f"not total: {a} vs {b} incomparable")
    for a, b in pairs:
        for c in syms:
            if (b, c) in pairs and (a, c) not in pairs:
                violations.append(f"not transitive: {a}<={b}<={c} but not {a}<={c}")
                break
    for a in syms:
        for b in syms:
            if a < b and (a, b) in pairs and (b, a) in pairs:
                if a.kind == "y" or b.kind == "y":
                    violations.append(
                        f"equivalent symbols must both be x's: {a}={b}"
                    )
    for i in range(1, n):
        lo, hi = Symbol("y", i), Symbol("y", i + 1)
        if (lo, hi) not in pairs or (hi, lo) in pairs:
            violations.append(f"y symbols must increase strictly: y{i} vs y{i + 1}")
    for i in range(1, n + 1):
        xi, yi = Symbol("x", i), Symbol("y", i)
        if (xi, yi) not in pairs or (yi, xi) in pairs:
            violations.append(f"x{i} must sit strictly before y{i}")
    return TypeValidation(not violations, (), tuple(violations))


def ntype_from_relation(n: int, relation) -> NType:
    """Build the canonical NType from a valid pre-order relation."""
    report = validate_ntype(n, relation)
    if not report.ok:
        raise ValueError(
            "invalid pattern: " + "; ".join(report.malformed + report.violations)
        )
    pairs = _as_pair_set(relation)
    syms = sorted(_expected_symbols(n))
    below = {s: sum(1 for t in syms if (t, s) in pairs and (s, t) not in pairs)
             for s in syms}
    classes: dict[int, set[Symbol]] = {}
    for s in syms:
        classes.setdefault(below[s], set()).add(s)
    ordered = tuple(frozenset(classes[k]) for k in sorted(classes))
    return NType(n, ordered)


def _check_n(n: int):
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be between 1 and {MAX_N}, got {n}")


@lru_cache(maxsize=None)
def fubini(k: int) -> int:
    """Number of weak orders (ordered set partitions) on k labeled items."""
    if k == 0:
        return 1
    return sum(comb(k, j) * fubini(k - j) for j in range(1, k + 1))


@lru_cache(maxsize=None)
def _rank_vectors(k: int) -> tuple[tuple[int, ...], ...]:
    """All rank vectors of weak orders on k positions, lexicographically.

    A rank vector maps position -> block index; value sets are initial
    segments {0..m-1}, so vectors and weak orders correspond one-to-one.
    """
    out = []
    for vec in product(range(max(k, 1)), repeat=k):
        values = set(vec)
        if values == set(range(len(values))):
            out.append(vec)
    return tuple(out)


def iter_weak_orders(items):
    """Yield ordered set partitions of items in rank-vector lex order."""
    items = tuple(items)
    for vec in _rank_vectors(len(items)):
        blocks = len(set(vec))
        yield tuple(
            frozenset(items[i] for i in range(len(items)) if vec[i] == r)
            for r in range(blocks)
        )


def _gap_assignments(n: int):
    # component i (1-based) is the gap of xi; legal gaps are 0..i-1
    return product(*(range(i) for i in range(1, n + 1)))


def enumerate_ntypes(n: int) -> list[NType]:
    """All n-patterns, lexicographic in (gap vector, per-gap rank vectors)."""
    _check_n(n)
    out = []
    for assign in _gap_assignments(n):
        gaps: list[list[int]] = [[] for _ in range(n + 1)]
        for i, g in enumerate(assign, start=1):
            gaps[g].append(i)
        per_gap = [list(iter_weak_orders(idx)) for idx in gaps]
        for choice in product(*per_gap):
            classes: list[frozenset[Symbol]] = []
            for g in range(n + 1):
                for block in choice[g]:
                    classes.append(frozenset(Symbol("x", i) for i in block))
                if g < n:
                    classes.append(frozenset({Symbol("y", g + 1)}))
            out.append(NType(n, tuple(classes)))
    return out


def count_ntypes(n: int) -> int:
    """Pattern count by the gap formula; no enumeration involved.

    Sum over legal gap assignments of the product, per gap, of the Fubini
    number of the x's landing there.  Must agree with
    len(enumerate_ntypes(n)); tests hold the two routes together.
    """
    _check_n(n)
    total = 0
    for assign in _gap_assignments(n):
        sizes = [0] * (n + 1)
        for g in assign:
            sizes[g] += 1
        term = 1
        for size in sizes:
            term *= fubini(size)
        total += term
    return total


def list_form(t: NType) -> str:
    """Render canonical list form, e.g. "x1=x2<y1<y2".

    Ties are joined by '=', consecutive classes by '<'; within a tied
    class the x's appear in ascending index order.
    """
    parts = []
    for cls in t.classes:
        parts.append("=".join(str(s) for s in sorted(cls)))
    return "<".join(parts)


def parse_list_form(text: str) -> NType:
    """Parse a list form back into a validated NType."""
    segments = [seg for seg in text.strip().split("<")]
    if any(not seg.strip() for seg in segments):
        raise ValueError(f"malformed list form {text!r}: empty class")
    classes = []
    count = 0
    for seg in segments:
        names = [name for name in seg.split("=")]
        syms = frozenset(Symbol.parse(name) for name in names)
        if len(syms) != len(names):
            raise ValueError(f"malformed list form {text!r}: repeated symbol in class")
        if len(syms) > 1 and any(s.kind == "y" for s in syms):
            raise ValueError(
                f"malformed list form {text!r}: '=' may only join x symbols"
            )
        classes.append(syms)
        count += len(syms)
    if count % 2:
        raise ValueError(f"malformed list form {text!r}: odd symbol count")
    return NType(count // 2, tuple(classes))


def append_extension(t: NType) -> NType:
    """Extend by a fresh strictly-last pair: ... < x_{n+1} < y_{n+1}."""
    m = t.n + 1
    return NType(
        m,
        t.classes
        + (frozenset({Symbol("x", m)}), frozenset({Symbol("y", m)})),
    )


def insert_extension(t: NType) -> NType:
    """Turn a 2-pattern into a 3-pattern by the relabel-and-wedge recipe.

    Relabel index 2 to 3 throughout, tie a new x2 to x1's class, and slot
    y2 immediately after y1.  Defined for 2-patterns only.
    """
    if t.n != 2:
        raise ValueError(f"insert_extension takes a 2-pattern, got n={t.n}")

    def relabel(s: Symbol) -> Symbol:
        return Symbol(s.kind, 3) if s.index == 2 else s

    classes = [frozenset(relabel(s) for s in cls) for cls in t.classes]
    out: list[frozenset[Symbol]] = []
    for cls in classes:
        if Symbol("x", 1) in cls:
            cls = cls | {Symbol("x", 2)}
        out.append(cls)
        if Symbol("y", 1) in cls:
            out.append(frozenset({Symbol("y", 2)}))
    return NType(3, tuple(out))


def restrict_to_initial(t: NType, n: int) -> NType:
    """Induced pattern on the first n symbol pairs."""
    if not 1 <= n <= t.n:
        raise ValueError(f"cannot restrict an n={t.n} pattern to n={n}")
    classes = []
    for cls in t.classes:
        kept = frozenset(s for s in cls if s.index <= n)
        if kept:
            classes.append(kept)
    return NType(n, tuple(classes))


def ntype_to_json(t: NType) -> dict:
    return {
        "n": t.n,
        "classes": [[str(s) for s in sorted(cls)] for cls in t.classes],
    }


def ntype_from_json(doc: dict) -> NType:
    if not isinstance(doc, dict) or "n" not in doc or "classes" not in doc:
        raise ValueError("pattern document needs 'n' and 'classes'")
    classes = tuple(
        frozenset(Symbol.parse(name) for name in cls) for cls in doc["classes"]
    )
    return NType(int(doc["n"]), classes)
