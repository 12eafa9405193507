"""
A tour of the bundled counterexample drawings
=============================================

Two hand-built anchored drawings ship with the package.  The first has
20 vertices and shows that a drawing can keep every crossing pair legal
at level 2 while still forcing two edges that share a vertex to cross.
The second is a parametric family member doing the same one level up.
This script walks through both and prints what the validators see.
"""

from minkplanar import (
    build_G2,
    build_Gk,
    crossing_profile,
    is_min_k_planar,
    is_simple,
    validate,
)
from minkplanar.drawings import adjacent_crossing_pairs

# ---------------------------------------------------------------- G_2

bundle = build_G2()
g = bundle.anchored_graph
d = bundle.drawing

print("the 20-vertex instance")
print("  vertices:", g.graph.n)
print("  edges:   ", g.graph.m)
print("  anchors: ", len(g.anchors))

# an empty problem list means the drawing is structurally sound
print("  validator problems:", validate(d))

# every crossing pair must keep one side light (at most 2 crossings)
ok, witness = is_min_k_planar(d, 2)
print("  min-2-planar:", ok)

# simplicity fails, and the validator names the exact pair
ok, witness = is_simple(d)
pair, reason = witness
names = {v: k for k, v in bundle.edge_names.items()}
print("  simple:", ok, "because", names[pair[0]], "x", names[pair[1]],
      "(" + reason + ")")

prof = crossing_profile(d)
print("  crossings total:", prof.total)
print("  heaviest edges:", {names[e]: c for e, c in prof.per_edge.items()
                            if c == max(prof.per_edge.values())})

# ---------------------------------------------------------------- G_k

# the family member for k = 4; its side matchings grow with k but the
# three-crossing bound on each deep edge does not
bundle4 = build_Gk(4)
d4 = bundle4.drawing

print()
print("the k = 4 family member")
print("  edges:", bundle4.anchored_graph.graph.m)
ok, _ = is_min_k_planar(d4, 3)
print("  min-3-planar:", ok)

# here no two edges sharing a vertex cross anywhere, which is the point:
# the obstruction of the 20-vertex instance is not the only shape trouble
# can take
print("  adjacent pairs that cross:", adjacent_crossing_pairs(d4))

simple4, wit4 = is_simple(d4)
print("  simple:", simple4, "->", wit4[1])
