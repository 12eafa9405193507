"""
Deciding whether an anchored drawing exists
===========================================

Vertices pinned to a circle in a fixed clockwise order, edges drawn
inside the disk: for small instances the package decides exactly whether
a drawing with the requested properties exists.  The incremental search
inserts one edge at a time into the evolving arrangement; a separate
brute-force oracle grinds through abstract crossing patterns instead.
They must always agree on the verdict, and we check that here too.
"""

import random

from minkplanar import (
    AnchoredGraph,
    Graph,
    Status,
    build_G2,
    search_anchored,
    verify_certificate,
)
from minkplanar.oracle import brute_oracle
from minkplanar.sampling import random_anchored_graph

# two chords whose endpoints interleave around the circle have to cross
g = AnchoredGraph(Graph((0, 1, 2, 3), ((0, 2), (1, 3))), (0, 1, 2, 3))

out = search_anchored(g, k=0)
print("interleaved chords, zero crossings allowed:", out.status.value)

out = search_anchored(g, k=1)
print("interleaved chords, one crossing allowed:  ", out.status.value,
      "with", len(out.certificate.crossings), "crossing")
print("certificate verifies:", verify_certificate(out, g, 1, False))

# ------------------------------------------------- the negative result

# the 20-vertex instance has min-2 drawings, but never a simple one; the
# search exhausts the whole routing space to say so
g2 = build_G2().anchored_graph

out = search_anchored(g2, k=2, require_simple=True)
print("\n20-vertex instance, simple drawings at level 2:", out.status.value)
print("  nodes explored:", out.stats.nodes, " routes tried:", out.stats.routes)

out = search_anchored(g2, k=2, require_simple=False)
print("20-vertex instance, simplicity waived:          ", out.status.value)

# -------------------------------------------------- engine vs. oracle

rng = random.Random(99)
agree = 0
for _ in range(60):
    ag = random_anchored_graph(rng, n_edges=4)
    for k, simple in [(0, False), (1, True), (1, False)]:
        a = search_anchored(ag, k, require_simple=simple).status
        b = brute_oracle(ag, k, require_simple=simple).status
        assert a is b, (ag.graph.edges, k, simple)
        agree += 1
print(f"\nsearch and oracle agreed on {agree}/{agree} random queries")
