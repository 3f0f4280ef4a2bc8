"""Order patterns of paired points: enumeration, counting, extension.

An n-pattern records how n points' x- and y-coordinates interleave:
y's strictly increase, every x sits strictly before its own y, and
only x's may tie.  This walk shows the full catalogue for small n and
the two ways a 2-pattern grows into a 3-pattern.
"""

from ramseybench import (
    append_extension,
    count_ntypes,
    enumerate_ntypes,
    fubini,
    insert_extension,
    list_form,
    parse_list_form,
)

# the four 2-patterns, in the library's canonical order
print("2-patterns:")
for t in enumerate_ntypes(2):
    print("   ", list_form(t))

# counting without enumerating: a sum of Fubini-number products over
# the ways of parking x's in the gaps below their y's
print("\ncounts, formula vs enumeration:")
for n in range(1, 6):
    formula = count_ntypes(n)
    listed = len(enumerate_ntypes(n))
    print(f"    T({n}) = {formula}  (enumerated: {listed})")

print("\nFubini numbers feeding the formula:", [fubini(k) for k in range(6)])

# growing a pattern: "append" adds a fresh point strictly after
# everything, "insert" tucks the new x into x1's tie class instead
tau = parse_list_form("x1<y1<x2<y2")
print("\nstart from           ", list_form(tau))
print("append a point:      ", list_form(append_extension(tau)))
print("insert beside x1:    ", list_form(insert_extension(tau)))

# insert applied across the whole 2-pattern catalogue
print("\nall four insert rewrites:")
for t in enumerate_ntypes(2):
    print(f"    {list_form(t):18} -> {list_form(insert_extension(t))}")
