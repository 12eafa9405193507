"""Annular scaffolding graphs whose drawings pin every wheel edge down.

The frame around an anchored graph is built from a double wheel: a rim
cycle of d vertices, an inner hub joined to every rim vertex, and an
outer hub likewise, where the outer hub is then split into one vertex
per anchor so the frame can take the anchored graph's place on the
boundary.  On top of the wheel sit its two face-dual rings together
with every vertex-face incidence link, and that dual-plus-incidence
"web" is amplified: each web edge becomes t parallel length-two paths.

Drawn the natural radial way, the web stays crossing free while every
wheel edge is crossed exactly once per copy of one web bundle, i.e.
exactly t times in total.  Each double-edge half carries at most one
crossing, so the bundled drawing is anchored, simple and min-1-planar;
with t large the wheel edges are pinned: any rerouted wheel edge would
still have to pierce the web cycle that separates its endpoints.

``compose`` then glues a certified disk drawing of the source graph
into the outer region of the frame drawing, identifying anchors, which
yields an unanchored drawing of the union with the two crossing
families untouched and disjoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

from .drawings import (
    Crossing,
    Drawing,
    PlanarizationMap,
    crossing_profile,
    is_min_k_planar,
    is_simple,
    restrict,
)
from .errors import InputError, MinkplanarError
from .graphs import (
    AnchoredGraph,
    EdgeClassMap,
    Graph,
    max_finite_anchor_distance,
    t_amplify,
)
from .geometry import Point, Scene, on_circle, scene_to_drawing

FRAME_RADIUS = 3.2

# radii of the concentric layers, inside out
_R_HUB_MID = 0.7     # midpoints of hub-to-inner-ring doubles
_R_INNER_DIP = 1.33  # top of the inner ring chord dip band
_R_INNER = 1.4       # inner dual ring
_R_INNER_FOOT = 1.7  # midpoints of inner-ring-to-rim doubles
_R_RIM = 2.0         # the wheel rim
_R_LINK = 2.3        # midpoints of ring-to-ring doubles, and outer feet
_R_OUTER_DIP = 2.48  # top of the outer ring chord dip band
_R_OUTER = 2.6       # outer dual ring
_R_FAN_MID = 2.7     # midpoints of the anchor fan doubles
_R_LANE_LO = 2.78    # cruising band for curves leaving an anchor
_R_LANE_HI = 3.12

_DIP_SPAN = 0.10     # radial depth of a nested stack of ring chord dips
_DIP_OFF = 0.05      # ring chord dips sit this far past the spoke ray (steps)


def _ensure(cond: bool, what: str) -> None:
    if not cond:
        raise MinkplanarError("frame self-check failed: " + what)


# ------------------------------------------------------------ the wheel


def double_wheel(d: int) -> Graph:
    """Cycle of length d plus two hubs each joined to every cycle vertex.

    Rim vertices are 0..d-1, the hubs are d and d+1.  Edge ids follow the
    rim (d edges), then the first hub's spokes, then the second's.
    """
    if d < 3:
        raise InputError("a double wheel needs a rim of length >= 3")
    rim = [(j, (j + 1) % d) for j in range(d)]
    inner = [(d, j) for j in range(d)]
    outer = [(d + 1, j) for j in range(d)]
    return Graph(tuple(range(d + 2)), tuple(rim + inner + outer))


class FrameParams(NamedTuple):
    """Provenance numbers of a frame: d = a * (2*k*ell + 2*k + 1)."""

    a: int
    k: int
    ell: int
    d: int
    t: int


@dataclass(frozen=True)
class FrameBundle:
    """A frame graph with its certified bundled drawing.

    ``core_edges`` are the ids of the kept wheel edges (rim, hub spokes,
    anchor spokes); ``classes`` maps each web edge of the unamplified
    ``skeleton`` to its t double edges in ``graph``.  ``positions`` and
    ``crossing_points`` hold the scene coordinates behind the drawing.
    """

    source: AnchoredGraph
    graph: Graph
    anchors: tuple[int, ...]
    drawing: Drawing
    core_edges: tuple[int, ...]
    classes: EdgeClassMap
    params: FrameParams
    skeleton: Graph
    positions: dict[int, Point]
    crossing_points: dict[int, Point]
    radius: float = FRAME_RADIUS


# --------------------------------------------------- skeleton edge plan
#
# Vertex ids: hub 0, rim r_j = 1+j, inner ring m_j = 1+d+j, outer ring
# o_j = 1+2d+j, anchors A_i = 1+3d+i.  Ring vertex j sits between rim
# positions j and j+1.  Edge ids come in blocks of d:
#
#   block 0   rim         (r_j, r_j+1)        core
#   block 1   hub spoke   (hub, r_j)          core
#   block 2   anchor spoke(A_j//q, r_j)       core
#   block 3   inner cycle (m_j, m_j+1)        web
#   block 4   outer cycle (o_j, o_j+1)        web
#   block 5   ring link   (m_j, o_j)          web
#   block 6   hub link    (hub, m_j)          web
#   block 7   inner foot  (m_j, r_j)          web
#   block 8   inner foot  (m_j, r_j+1)        web
#   block 9   outer foot  (o_j, r_j)          web
#   block 10  outer foot  (o_j, r_j+1)        web
#   block 11  anchor fan  (A_own(j), o_j)     web
#
# The outer ring vertex o_j fans to the anchor owning rim position j+1,
# so each anchor collects the q faces around its own spoke block.


def _skeleton(a: int, q: int) -> tuple[Graph, tuple[int, ...]]:
    d = a * q
    hub = 0
    r = lambda j: 1 + j % d
    m = lambda j: 1 + d + j % d
    o = lambda j: 1 + 2 * d + j % d
    anchor = lambda i: 1 + 3 * d + i

    edges: list[tuple[int, int]] = []
    edges += [(r(j), r(j + 1)) for j in range(d)]
    edges += [(hub, r(j)) for j in range(d)]
    edges += [(anchor(j // q), r(j)) for j in range(d)]
    edges += [(m(j), m(j + 1)) for j in range(d)]
    edges += [(o(j), o(j + 1)) for j in range(d)]
    edges += [(m(j), o(j)) for j in range(d)]
    edges += [(hub, m(j)) for j in range(d)]
    edges += [(m(j), r(j)) for j in range(d)]
    edges += [(m(j), r(j + 1)) for j in range(d)]
    edges += [(o(j), r(j)) for j in range(d)]
    edges += [(o(j), r(j + 1)) for j in range(d)]
    edges += [(anchor(((j + 1) // q) % a), o(j)) for j in range(d)]

    verts = tuple(range(1 + 3 * d + a))
    return Graph(verts, tuple(edges)), tuple(anchor(i) for i in range(a))


# ------------------------------------------------------------- geometry


def _pos(d: int, radius: float, u: float) -> Point:
    """Point at the given radius, u rim-steps clockwise from the top."""
    return on_circle(radius, -u * 360.0 / d)


def _lane_walk(
    d: int, apex: Point, lane: float, s: float, target: float, w: float
) -> list[Point]:
    """Polyline from the apex along a cruising radius to the target angle.

    Waypoints every w steps keep the chords hugging the lane circle, so
    curves on different lanes stay radially separated no matter how far
    around the block they travel.
    """
    pts = [apex]
    side = 1.0 if target > s else -1.0
    x = s + side * w
    while (target - x) * side > 1e-9:
        pts.append(_pos(d, lane, x))
        x += side * w
    pts.append(_pos(d, lane, target))
    return pts


def _frame_scene(
    amplified: Graph,
    classes: EdgeClassMap,
    anchors: tuple[int, ...],
    a: int,
    q: int,
    t: int,
) -> Scene:
    d = a * q
    P = lambda rad, u: _pos(d, rad, u)

    positions: dict[int, Point] = {0: (0.0, 0.0)}
    for j in range(d):
        positions[1 + j] = P(_R_RIM, j)
        positions[1 + d + j] = P(_R_INNER, j + 0.5)
        positions[1 + 2 * d + j] = P(_R_OUTER, j + 0.5)
    for i in range(a):
        positions[1 + 3 * d + i] = P(FRAME_RADIUS, i * q + (q - 1) // 2)

    # Midpoints of the doubles, fan class aside (that one is routed with
    # the anchor spokes below).  The two ring chord classes dip inward
    # past the next spoke ray: every copy dips at the same angle but to
    # its own nested radius, which keeps the copies disjoint while every
    # copy's first half still spans the ray it is due to cross.  The
    # radially monotone classes fan their midpoints out by a small
    # per-copy angle instead; side-by-side offsets cannot make curves
    # that never double back in radius meet.
    def eps(c: int) -> float:
        return (c + 1) / (8.0 * (t + 1))

    def dip(c: int, top: float) -> float:
        return top - _DIP_SPAN * (c + 1) / t

    for old_e, c, de in classes.double_edges():
        kind, j = divmod(old_e - 3 * d, d)
        if kind == 0:    # inner cycle (m_j, m_j+1)
            p = P(dip(c, _R_INNER_DIP), j + 1 + _DIP_OFF)
        elif kind == 1:  # outer cycle (o_j, o_j+1)
            p = P(dip(c, _R_OUTER_DIP), j + 1 + _DIP_OFF)
        elif kind == 2:  # ring link (m_j, o_j)
            p = P(_R_LINK, j + 0.5 + eps(c))
        elif kind == 3:  # hub link (hub, m_j)
            p = P(_R_HUB_MID, j + 0.5 + eps(c))
        elif kind == 4:  # inner foot (m_j, r_j)
            p = P(_R_INNER_FOOT, j + 0.25 + 0.3 * eps(c))
        elif kind == 5:  # inner foot (m_j, r_j+1)
            p = P(_R_INNER_FOOT, j + 0.75 + 0.3 * eps(c))
        elif kind == 6:  # outer foot (o_j, r_j)
            p = P(_R_LINK, j + 0.25 + 0.3 * eps(c))
        elif kind == 7:  # outer foot (o_j, r_j+1)
            p = P(_R_LINK, j + 0.75 + 0.3 * eps(c))
        else:
            continue
        positions[de.midpoint] = p

    routes: dict[int, tuple[Point, ...]] = {}
    for j in range(d):  # rim and hub spokes, straight
        routes[j] = (positions[1 + j], positions[1 + (j + 1) % d])
        routes[d + j] = (positions[0], positions[1 + j])

    # The outer region.  All curves out of an anchor cruise through the
    # lane band and drop radially at their own descent angle.  On each
    # side of an apex, curves to nearer targets get lower lanes; a curve
    # only descends at an angle every lower-lane curve is already done
    # with, so descents cross nothing but the o-ring chords below, and
    # those only at the spoke angles.  Fan copies of one edge descend at
    # slightly staggered angles, farther from the apex on higher lanes.
    for i in range(a):
        s = i * q + (q - 1) // 2
        apex_v = 1 + 3 * d + i
        apex = positions[apex_v]
        routes[2 * d + s] = (apex, positions[1 + s])
        for side in (1, -1):
            items: list[tuple[float, int, int, int]] = []
            for p in range(i * q, i * q + q):
                if (p - s) * side > 0:
                    items.append((abs(p - s), 0, -1, p))
            for j in range(i * q - 1, i * q + q - 1):
                if ((j + 0.5) - s) * side > 0:
                    fan_e = 3 * d + 8 * d + (j % d)
                    for u_idx in range(t):
                        items.append((abs(j + 0.5 - s), u_idx, fan_e, j))
            if not items:
                continue
            items.sort()
            spacing = (_R_LANE_HI - _R_LANE_LO) / len(items)
            w = 0.5
            while _R_LANE_HI * (1.0 - math.cos(math.pi * w / d)) > 0.35 * spacing:
                w *= 0.5
            for rank, (_, u_idx, fan_e, j) in enumerate(items):
                lane = _R_LANE_LO + (rank + 0.5) * spacing
                if fan_e < 0:
                    walk = _lane_walk(d, apex, lane, s, j, w)
                    routes[2 * d + j] = tuple(walk + [positions[1 + j]])
                else:
                    mu = 0.4 * (t - u_idx) / (t + 1.0)
                    down_at = j + 0.5 - side * mu
                    de = classes.by_edge[fan_e][u_idx]
                    mid = P(_R_FAN_MID, down_at)
                    positions[de.midpoint] = mid
                    walk = _lane_walk(d, apex, lane, s, down_at, w)
                    routes[de.halves[0]] = tuple(walk + [mid])
                    routes[de.halves[1]] = (mid, positions[1 + 2 * d + (j % d)])

    for old_e, c, de in classes.double_edges():
        if old_e >= 11 * d:
            continue
        for h in de.halves:
            u, v = amplified.edges[h]
            routes[h] = (positions[u], positions[v])

    return Scene(amplified, positions, routes, anchors=anchors, radius=FRAME_RADIUS)


# ------------------------------------------------------------ the build


def build_frame(g: AnchoredGraph, k: int, t: int | None = None) -> FrameBundle:
    """Frame for an anchored graph, with its certified bundled drawing.

    The rim length is d = a * (2*k*ell + 2*k + 1) where a counts the
    anchors and ell is the largest finite anchor distance in g.  Each of
    the 9d web edges is amplified into t doubles (default 2k+2); the
    3d wheel edges are kept single.  The returned drawing is checked to
    be anchored, simple and min-1-planar, with every wheel edge crossed
    exactly t times and every double-edge half at most once.
    """
    if k < 1:
        raise InputError("frame needs k >= 1")
    if t is None:
        t = 2 * k + 2
    if t < 1:
        raise InputError("frame needs t >= 1")
    if not g.graph.simple:
        raise InputError("frame construction expects a simple source graph")
    a = len(g.anchors)
    if a < 2:
        raise InputError("frame needs at least two anchors")

    ell = max_finite_anchor_distance(g)
    q = 2 * k * ell + 2 * k + 1
    d = a * q

    skeleton, anchors = _skeleton(a, q)
    core = tuple(range(3 * d))
    amplified, classes = t_amplify(
        skeleton, t, amplify_edges=range(3 * d, 12 * d), keep_edges=core
    )
    _ensure(all(classes.kept_edge_map[e] == e for e in core),
            "kept wheel edges changed ids")

    scene = _frame_scene(amplified, classes, anchors, a, q, t)
    drawing, xpts = scene_to_drawing(scene)

    prof = crossing_profile(drawing, check=False)
    _ensure(prof.total == 3 * d * t, "crossing total is off")
    _ensure(all(prof.per_edge.get(e, 0) == t for e in core),
            "a wheel edge missed its t crossings")
    _ensure(all(prof.per_edge.get(h, 0) <= 1 for h in classes.half_ids()),
            "a double-edge half picked up two crossings")
    _ensure(is_simple(drawing, check=False), "bundled drawing is not simple")
    _ensure(is_min_k_planar(drawing, 1, check=False),
            "bundled drawing is not min-1-planar")

    return FrameBundle(
        source=g,
        graph=amplified,
        anchors=anchors,
        drawing=drawing,
        core_edges=core,
        classes=classes,
        params=FrameParams(a, k, ell, d, t),
        skeleton=skeleton,
        positions=dict(scene.positions),
        crossing_points=xpts,
    )


# ------------------------------------------------------------ separation


def separation_property_check(frame: FrameBundle) -> bool:
    """Does the web cage every wheel edge's endpoints apart?

    Looks at the sub-drawing on the double edges alone, which must be
    crossing free, and computes its faces.  A wheel edge passes when both
    endpoints are web vertices whose face stars are disjoint: then the
    boundary of either star is web material separating u from v, so any
    curve between them has to cross the web.  Returns True only when
    every wheel edge passes.
    """
    halves = frame.classes.half_ids()
    if not halves:
        return False
    sub, _ = restrict(frame.drawing, halves, check=False)
    if sub.crossings:
        return False

    # forget the disk boundary: the web's own plane structure decides
    sub = replace(sub, anchors=None)
    pm = PlanarizationMap(sub)
    star: dict[int, set[int]] = {v: set() for v in sub.graph.vertices}
    for fi, orbit in enumerate(pm.faces()):
        for dart in orbit:
            star[pm.tail(dart)].add(fi)

    present = set(sub.graph.vertices)
    for e in frame.core_edges:
        u, v = frame.graph.edges[e]
        if u not in present or v not in present:
            return False
        if star[u] & star[v]:
            return False
    return True


# ------------------------------------------------------------- composing


def compose(frame: FrameBundle, bundle) -> Drawing:
    """Glue a certified disk drawing into the frame, identifying anchors.

    The frame must have been built for the bundle's anchored graph.  The
    glued drawing occupies the region outside the frame's anchor circle,
    so it enters mirrored: its rotations reverse.  Crossings of the two
    parts stay disjoint, and the result is validated and checked to be
    min-k-planar for the bundle's claimed k before it is returned.
    """
    if bundle.anchored_graph != frame.source:
        raise InputError("frame was not built for this anchored graph")

    gd = bundle.drawing
    G = bundle.anchored_graph.graph
    off = frame.graph.m

    nmap: dict[int, int] = {}
    for i, ga in enumerate(bundle.anchored_graph.anchors):
        nmap[ga] = frame.anchors[i]
    nxt = 1 + max(x.id for x in frame.drawing.crossings)
    interiors = [v for v in G.vertices if v not in nmap]
    for v in interiors:
        nmap[v] = nxt
        nxt += 1
    for x in gd.crossings:
        nmap[x.id] = nxt
        nxt += 1

    vertices = tuple(frame.graph.vertices) + tuple(nmap[v] for v in interiors)
    edges = tuple(frame.graph.edges) + tuple(
        (nmap[u], nmap[v]) for (u, v) in G.edges
    )
    graph = Graph(vertices, edges, simple=False)

    crossings = tuple(frame.drawing.crossings) + tuple(
        Crossing(nmap[x.id], (x.edges[0] + off, x.edges[1] + off))
        for x in gd.crossings
    )

    chains = dict(frame.drawing.chains)
    for e, ch in gd.chains.items():
        chains[off + e] = tuple(nmap[n] for n in ch)

    ganchors = set(bundle.anchored_graph.anchors)
    rotation = {
        n: refs
        for n, refs in frame.drawing.rotation.items()
        if n not in set(frame.anchors)
    }
    for n, refs in gd.rotation.items():
        if n in ganchors:
            continue
        rotation[nmap[n]] = tuple((e + off, s) for (e, s) in reversed(refs))
    for i, ga in enumerate(bundle.anchored_graph.anchors):
        fa = frame.anchors[i]
        mine = frame.drawing.rotation.get(fa, ())
        theirs = tuple(
            (e + off, s) for (e, s) in reversed(gd.rotation.get(ga, ()))
        )
        rotation[fa] = tuple(mine) + theirs

    out = Drawing(graph, crossings, chains, rotation, anchors=None)
    out.require_valid()
    _ensure(
        len(out.crossings)
        == len(frame.drawing.crossings) + len(gd.crossings),
        "composition changed the crossing count",
    )
    still_min_k, _ = is_min_k_planar(out, bundle.claimed_min_k, check=False)
    _ensure(
        still_min_k,
        f"composition lost min-{bundle.claimed_min_k}-planarity",
    )
    return out
