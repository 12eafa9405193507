"""Generators for the bundled disk counterexamples and the crossing gadget.

Each generator lays out an explicit scene (vertex coordinates plus one
polyline route per edge), converts it into a combinatorial drawing, and
re-checks the properties the construction is supposed to have.  A failed
check raises instead of returning, so a bundle in hand is already
certified.  All coordinates are fixed tables, making the output
deterministic byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drawings import (
    Drawing,
    adjacent_crossing_pairs,
    crossing_profile,
    is_min_k_planar,
    is_simple,
)
from .errors import InputError, MinkplanarError
from .geometry import Point, Scene, on_circle, scene_to_drawing
from .graphs import AnchoredGraph, EdgeClassMap, Graph, t_amplify

DISK_RADIUS = 2.1


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise MinkplanarError("construction self-check failed: " + what)


# ------------------------------------------------------------------ bundles


@dataclass(frozen=True)
class CounterexampleBundle:
    """An anchored graph with a certified drawing.

    ``vertex_names`` and ``edge_names`` map human-readable labels (``a1``,
    ``c1c2``, ``m1_0``, ...) to the numeric ids used in the graph, so
    callers never depend on the id assignment.  ``positions`` and
    ``crossing_points`` hold the scene coordinates the drawing was derived
    from; renderers may reuse them.
    """

    anchored_graph: AnchoredGraph
    drawing: Drawing
    claimed_min_k: int
    claimed_simple: bool
    claimed_adjacency_free: bool
    vertex_names: dict[str, int]
    edge_names: dict[str, int]
    positions: dict[int, Point]
    crossing_points: dict[int, Point]
    radius: float = DISK_RADIUS

    def vertex(self, name: str) -> int:
        return self.vertex_names[name]

    def edge(self, name: str) -> int:
        return self.edge_names[name]


@dataclass(frozen=True)
class BicliqueGadget:
    """Two amplified edges drawn so the copy bundles cross completely."""

    graph: Graph
    classes: EdgeClassMap
    drawing: Drawing
    positions: dict[int, Point]
    crossing_points: dict[int, Point]
    k: int
    m: int


# ------------------------------------------------- shared scene assembly

# Anchor specs are (name, angle in degrees) in strictly clockwise order;
# edge specs are (name, tail name, head name, interior route points).


def _disk_bundle(
    anchor_specs: list[tuple[str, float]],
    interior_specs: list[tuple[str, Point]],
    edge_specs: list[tuple[str, str, str, list[Point]]],
    claimed_min_k: int,
    claimed_simple: bool,
    claimed_adjacency_free: bool,
) -> CounterexampleBundle:
    vertex_names: dict[str, int] = {}
    positions: dict[int, Point] = {}
    for name, angle in anchor_specs:
        vid = len(vertex_names)
        vertex_names[name] = vid
        positions[vid] = on_circle(DISK_RADIUS, angle)
    anchors = tuple(range(len(anchor_specs)))
    for name, pt in interior_specs:
        vid = len(vertex_names)
        vertex_names[name] = vid
        positions[vid] = pt

    edge_names: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    routes: dict[int, tuple[Point, ...]] = {}
    for name, uname, vname, mids in edge_specs:
        eid = len(edges)
        edge_names[name] = eid
        u, v = vertex_names[uname], vertex_names[vname]
        edges.append((u, v))
        routes[eid] = tuple([positions[u], *mids, positions[v]])

    graph = Graph(tuple(range(len(vertex_names))), tuple(edges))
    scene = Scene(graph, positions, routes, anchors=anchors, radius=DISK_RADIUS)
    drawing, crossing_points = scene_to_drawing(scene)

    ok_min, witness = is_min_k_planar(drawing, claimed_min_k, check=False)
    _require(ok_min, f"drawing is not min-{claimed_min_k}-planar ({witness})")
    simple_ok, _ = is_simple(drawing, check=False)
    _require(simple_ok == claimed_simple, "simplicity differs from the claim")
    adj = adjacent_crossing_pairs(drawing, check=False)
    _require((not adj) == claimed_adjacency_free, "adjacent-crossing claim failed")

    return CounterexampleBundle(
        anchored_graph=AnchoredGraph(graph, anchors),
        drawing=drawing,
        claimed_min_k=claimed_min_k,
        claimed_simple=claimed_simple,
        claimed_adjacency_free=claimed_adjacency_free,
        vertex_names=vertex_names,
        edge_names=edge_names,
        positions=positions,
        crossing_points=crossing_points,
    )


def _chord_angles(k: int) -> list[float]:
    # offsets of the two side matchings from their poles, innermost first
    return [14.0 + 28.0 * i / k for i in range(k + 1)]


def _side_matching_specs(k: int):
    """Anchor and edge specs for the two matchings that pad a1 and c1."""
    thetas = _chord_angles(k)
    m1_top = [(f"m1_{i}t", 180.0 - th) for i, th in enumerate(thetas)]
    m1_bot = [(f"m1_{i}b", th - 180.0) for i, th in enumerate(thetas)]
    m2_left = [(f"m2_{i}l", -90.0 - th) for i, th in enumerate(thetas)]
    m2_right = [(f"m2_{i}r", -90.0 + th) for i, th in enumerate(thetas)]
    m1_edges = [(f"m1_{i}", f"m1_{i}t", f"m1_{i}b", []) for i in range(k + 1)]
    m2_edges = [(f"m2_{i}", f"m2_{i}l", f"m2_{i}r", []) for i in range(k + 1)]
    return m1_top, m1_bot, m2_left, m2_right, m1_edges, m2_edges


def _assemble_family(
    k: int,
    upper_anchors: list[tuple[str, float]],
    upper_edges: list[tuple[str, str, str, list[Point]]],
    c2: Point,
    claimed_min_k: int,
    claimed_simple: bool,
    claimed_adjacency_free: bool,
) -> CounterexampleBundle:
    m1_top, m1_bot, m2_left, m2_right, m1_edges, m2_edges = _side_matching_specs(k)
    anchor_specs = (
        [("a1", 180.0)]
        + m1_top
        + upper_anchors
        + [("a2", 0.0)]
        + list(reversed(m2_right))
        + [("c1", -90.0)]
        + m2_left
        + list(reversed(m1_bot))
    )
    edge_specs = (
        [
            ("a1a2", "a1", "a2", []),
            ("c1c2", "c1", "c2", []),
            ("c2c3", "c2", "c3", []),
        ]
        + upper_edges
        + m1_edges
        + m2_edges
    )
    return _disk_bundle(
        anchor_specs,
        [("c2", c2)],
        edge_specs,
        claimed_min_k,
        claimed_simple,
        claimed_adjacency_free,
    )


# ------------------------------------------------------------ k=2 family


def build_G2() -> CounterexampleBundle:
    """The 20-vertex anchored counterexample with its min-2 drawing.

    Side matchings of three chords each pad the anchors a1 and c1, one top
    chord crosses c2c3, and the long edge b1a2 detours below the centre,
    picking up one crossing with a1a2 (its disk neighbour at a2, which is
    what breaks simplicity) and one with c1c2.
    """
    upper_anchors = [
        ("b1", 128.0),
        ("m3_topl", 106.0),
        ("c3", 90.0),
        ("m3_topr", 74.0),
    ]
    upper_edges = [
        ("b1a2", "b1", "a2", [(-0.75, -0.2), (0.4, -1.05)]),
        ("m3_top", "m3_topl", "m3_topr", []),
    ]
    bundle = _assemble_family(
        2,
        upper_anchors,
        upper_edges,
        c2=(0.0, -0.7),
        claimed_min_k=2,
        claimed_simple=False,
        claimed_adjacency_free=False,
    )

    # frozen shape of this construction
    g = bundle.anchored_graph
    _require(g.graph.n == 20 and g.graph.m == 11, "vertex/edge count off")
    _require(len(g.anchors) == 19, "anchor count off")
    prof = crossing_profile(bundle.drawing, check=False)
    _require(prof.total == 10, "crossing total off")
    _require(prof.per_edge[bundle.edge("a1a2")] == 5, "a1a2 count off")
    _require(prof.per_edge[bundle.edge("c1c2")] == 4, "c1c2 count off")
    _, witness = is_simple(bundle.drawing, check=False)
    pair = (bundle.edge("a1a2"), bundle.edge("b1a2"))
    _require(witness is not None and witness[0] == pair, "simplicity witness off")
    ok1, _ = is_min_k_planar(bundle.drawing, 1, check=False)
    _require(not ok1, "drawing should not be min-1-planar")
    return bundle


# ----------------------------------------------------------- k>=3 family


def build_Gk(k: int) -> CounterexampleBundle:
    """The anchored family member for a given k >= 3, with min-3 drawing.

    Side matchings get k+1 chords.  Of the k edges of the top matching,
    one is a straight chord over c3 and the remaining k-1 dip below the
    centre: each deep edge crosses a1a2 twice and c1c2 once, so it carries
    exactly 3 crossings no matter how large k is.  b1b2 is the outermost
    and deepest of them.  The only adjacent edge pair of the graph is
    (c1c2, c2c3), which meets at c2 without crossing, hence no two edges
    sharing a vertex cross anywhere in the bundled drawing.
    """
    if k < 3:
        raise InputError("k must be at least 3 for this family; the k=2 "
                         "construction is its own generator")
    deep = k - 1
    phis = [35.0 - 15.0 * j / deep for j in range(deep)]
    dips = [-1.45 + 0.35 * j / deep for j in range(deep)]

    def left_name(j: int) -> str:
        return "b1" if j == 0 else f"m3_dip{j}l"

    def right_name(j: int) -> str:
        return "b2" if j == 0 else f"m3_dip{j}r"

    def edge_name(j: int) -> str:
        return "b1b2" if j == 0 else f"m3_dip{j}"

    upper_anchors = (
        [(left_name(j), 90.0 + phis[j]) for j in range(deep)]
        + [("m3_topl", 106.0), ("c3", 90.0), ("m3_topr", 74.0)]
        + [(right_name(j), 90.0 - phis[j]) for j in reversed(range(deep))]
    )
    upper_edges = [("m3_top", "m3_topl", "m3_topr", [])] + [
        (
            edge_name(j),
            left_name(j),
            right_name(j),
            [(-0.5, dips[j]), (0.5, dips[j])],
        )
        for j in range(deep)
    ]
    bundle = _assemble_family(
        k,
        upper_anchors,
        upper_edges,
        c2=(0.0, -0.85),
        claimed_min_k=3,
        claimed_simple=False,
        claimed_adjacency_free=True,
    )

    g = bundle.anchored_graph
    _require(g.graph.n == 6 * k + 9, "vertex count off")
    _require(g.graph.m == 3 * k + 5, "edge count off")
    _require(len(g.anchors) == 6 * k + 8, "anchor count off")
    prof = crossing_profile(bundle.drawing, check=False)
    _require(prof.total == 5 * k + 1, "crossing total off")
    _require(prof.per_edge[bundle.edge("a1a2")] == 3 * k, "a1a2 count off")
    _require(prof.per_edge[bundle.edge("c1c2")] == 2 * k, "c1c2 count off")
    _require(prof.per_edge[bundle.edge("b1b2")] == 3, "b1b2 count off")
    return bundle


# ------------------------------------------------------- crossing gadget


def _spread(m: int, lo: float, hi: float) -> list[float]:
    if m == 1:
        return [(lo + hi) / 2.0]
    return [lo + (hi - lo) * i / (m - 1) for i in range(m)]


def build_biclique_gadget(k: int, m: int) -> BicliqueGadget:
    """Two edges amplified m-fold, every copy of one crossing every copy
    of the other exactly once.

    The copies of the horizontal edge run as stacked horizontal lanes, the
    copies of the vertical edge as side-by-side columns; the lanes and
    columns overlap in a central m-by-m grid of crossings, and the fan
    segments near the four endpoints stay clear of everything.  The long
    lane/column halves therefore carry m crossings each: the drawing is
    min-k-planar exactly when m <= k.
    """
    if m < 1:
        raise InputError("need at least one copy per class")
    if k < 0:
        raise InputError("k must be nonnegative")
    base = Graph((0, 1, 2, 3), ((0, 1), (2, 3)))
    amplified, classes = t_amplify(base, m)

    positions: dict[int, Point] = {
        0: (-6.0, 0.0),
        1: (6.0, 0.0),
        2: (0.0, 6.0),
        3: (0.0, -6.0),
    }
    routes: dict[int, tuple[Point, ...]] = {}
    lanes = _spread(m, -1.0, 1.0)
    cols = _spread(m, -0.8, 0.8)
    for i, dbl in enumerate(classes.by_edge[0]):
        mid = (-1.6, lanes[i])
        positions[dbl.midpoint] = mid
        routes[dbl.halves[0]] = (positions[0], mid)
        routes[dbl.halves[1]] = (mid, (1.6, lanes[i]), positions[1])
    for j, dbl in enumerate(classes.by_edge[1]):
        mid = (cols[j], 1.6)
        positions[dbl.midpoint] = mid
        routes[dbl.halves[0]] = (positions[2], mid)
        routes[dbl.halves[1]] = (mid, (cols[j], -1.6), positions[3])

    scene = Scene(amplified, positions, routes)
    drawing, crossing_points = scene_to_drawing(scene)

    prof = crossing_profile(drawing, check=False)
    _require(prof.total == m * m, "gadget must have exactly m*m crossings")
    lane_halves = [d.halves for d in classes.by_edge[0]]
    col_halves = [d.halves for d in classes.by_edge[1]]
    for ha in lane_halves:
        for hb in col_halves:
            n = sum(
                prof.per_pair.get((min(a, b), max(a, b)), 0)
                for a in ha
                for b in hb
            )
            _require(n == 1, "each copy pair must cross exactly once")
    ok, _ = is_min_k_planar(drawing, k, check=False)
    _require(ok == (m <= k), "gadget min-k verdict off")
    return BicliqueGadget(
        graph=amplified,
        classes=classes,
        drawing=drawing,
        positions=positions,
        crossing_points=crossing_points,
        k=k,
        m=m,
    )
