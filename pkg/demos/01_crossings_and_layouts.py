"""Crossings in circular layouts, and what routing edges outside buys.

A circular layout places every vertex on a circle and draws edges as
straight chords; two chords cross exactly when their endpoints alternate
around the circle.  This script counts crossings for a small complete graph,
moves a few edges to the exterior, and renders both drawings as SVG.
"""

import pathlib

from twosided import (
    LayoutInstance,
    TwoSidedAssignment,
    count_crossings,
    layout_stats,
    render_layout,
)

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# K6 in convex position: every 4-tuple of vertices contributes one crossing.
n = 6
k6 = LayoutInstance.build(
    range(1, n + 1),
    [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)],
)
all_interior = TwoSidedAssignment.from_exterior(k6, ())
interior, exterior = count_crossings(k6, all_interior)
print(f"K{n} drawn one-sided: {interior} crossings (C({n},4) = {interior})")

# Route the three long diagonals outside instead.
diagonals = [eid for eid, (u, v) in enumerate(k6.edges) if (v - u) % n == 3]
two_sided = TwoSidedAssignment.from_exterior(k6, diagonals)
stats = layout_stats(k6, two_sided)
print(
    f"with {stats.n_exterior} diagonals outside: "
    f"{stats.interior_crossings} interior + {stats.exterior_crossings} exterior "
    f"crossings, at most {stats.max_exterior_crossings} per exterior edge"
)

for name, assignment in (("k6_one_sided", all_interior), ("k6_two_sided", two_sided)):
    path = OUT / f"{name}.svg"
    path.write_text(render_layout(k6, assignment, labels=True))
    print(f"wrote {path}")
