"""A deterministic stand-in for the random graph, and what it breaks.

The construction schedule walks extension demands in a canonical
order: each demand names parameter vertices and the subset of them
the new vertex must be adjacent to.  Processing every demand over a
small vertex window yields a graph whose adjacency relation defeats
pattern-homogeneity on rich columns.
"""

from itertools import islice

from ramseybench import (
    build_graph_covering,
    check_extension_property,
    check_rich,
    coloring_demo,
    configuration_schedule,
    noreverse_demo,
)

# the first few schedule entries: (params; S) pairs, empty demand first
print("schedule head:")
for cfg in islice(configuration_schedule(), 8):
    adjacent_to = sorted(cfg.params[i] for i in cfg.targets)
    print(f"    params {list(cfg.params)!s:10} adjacent-to {adjacent_to}")

# cover every demand with parameters among vertices 0..2, arity <= 2
g = build_graph_covering(3, 2)
print(f"\ncovering graph: {g.vertex_count} vertices, {len(g.edges)} edges")

unsatisfied = check_extension_property(g, 2, 3)
print("unsatisfied (k<=2, m=3) demands:", len(unsatisfied))

# richness of a small vertex set is decided exhaustively
sample = [0, 1, 2, 3]
print("sample vertex set rich (k=1):", check_rich(sample, g, k=1))

# adjacency as a 2-coloring of tied pairs is never homogeneous on a
# rich column: reversed inclusions would need a constant color
report = noreverse_demo(count=20, seed=5)
print(f"\n{report.conditions} conditions,"
      f" {report.columns_checked} rich columns checked,"
      f" all non-homogeneous: {report.all_nonhomogeneous}")

# the multi-color variant fills the whole palette on one column
for palette in (3, 4, 5):
    demo = coloring_demo(palette)
    print(f"palette {palette}: column meets {demo.classes_met} colors"
          f" (all: {demo.all_colors})")
