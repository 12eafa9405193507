"""Coordinates and pictures for combinatorial drawings.

``tutte_layout`` places the planarization of a drawing in the unit disk:
boundary nodes are pinned to the circle and every free node solves the
barycentric equation (it sits at the average of its neighbours).  For an
anchored drawing the pinned cycle is the anchor ring; otherwise the
longest simple face walk serves as the outer boundary.  Faces with more
than three sides are stellated with a throwaway apex first, which keeps
the system non-degenerate on the nested ring structures this package
produces; the apexes never appear in the returned layout.

``audit_layout`` re-reads the straight-line picture with the independent
scene converter and checks that it reproduces the drawing exactly: no
stray intersections, and the same cyclic arc order around every node.

``to_svg`` writes a deterministic standalone SVG.  Crossing nodes are
bend points of their two curves, not dots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.linalg import cg, spsolve

from .drawings import Drawing, PlanarizationMap, crossing_profile
from .errors import LayoutError
from .geometry import Point, Scene, scene_to_drawing
from .graphs import Graph

_DIRECT_SOLVE_LIMIT = 50_000


@dataclass(frozen=True)
class Layout:
    """Unit-disk coordinates for every node of a drawing's planarization.

    ``residual`` is the largest deviation of any free node from the
    average of its neighbours in the solved system, apexes included.
    """

    coordinates: dict[int, Point]
    boundary: tuple[int, ...]
    residual: float


def _circle_point(index: int, count: int) -> Point:
    # clockwise from twelve o'clock, matching the anchor convention
    ang = math.radians(90.0 - 360.0 * index / count)
    return (math.cos(ang), math.sin(ang))


def _outer_walk(pm: PlanarizationMap, d: Drawing) -> list[int]:
    """Nodes of the face that will be pinned, in clockwise order."""
    if d.anchored:
        return list(d.anchors)
    best: list[int] | None = None
    best_key = None
    for orbit in pm.faces():
        walk = [pm.tail(dart) for dart in orbit]
        if len(walk) < 3 or len(set(walk)) != len(walk):
            continue
        # deterministic: longest walk, ties broken on the rotated node list
        rots = [tuple(walk[i:] + walk[:i]) for i in range(len(walk))]
        key = (-len(walk), min(rots))
        if best is None or key < best_key:
            best, best_key = walk, key
    if best is None:
        raise LayoutError(
            "no simple face cycle to pin as the boundary; "
            "the planarization is too loosely connected"
        )
    return best


def tutte_layout(d: Drawing) -> Layout:
    """Barycentric unit-disk coordinates for the planarization of ``d``.

    The drawing must be valid and its planarization connected (every node
    reachable from the pinned boundary).  Interior nodes land strictly
    inside the disk.
    """
    d.require_valid()
    pm = PlanarizationMap(d)
    nodes = list(d.graph.vertices) + list(d.crossing_ids())

    if not pm.arc_nodes:
        if nodes:
            raise LayoutError("isolated nodes make the system singular")
        return Layout({}, (), 0.0)

    walk = _outer_walk(pm, d)
    pinned: dict[int, Point] = {
        v: _circle_point(i, len(walk)) for i, v in enumerate(walk)
    }

    # adjacency of the augmented graph: planarization arcs (boundary arcs
    # of an anchored drawing included) plus one apex per big face
    adj: dict[int, list[int]] = {v: [] for v in nodes}
    for (a, b) in pm.arc_nodes.values():
        adj[a].append(b)
        adj[b].append(a)

    apex = max(nodes) + 1 if nodes else 0
    outer_set = set(walk)
    for orbit in pm.faces():
        face_walk = [pm.tail(dart) for dart in orbit]
        if face_walk and set(face_walk) == outer_set and len(face_walk) == len(walk):
            # the pinned face itself stays hollow; everything else may
            # receive an apex (there is exactly one such orbit by choice)
            rots = {tuple(walk[i:] + walk[:i]) for i in range(len(walk))}
            rev = list(reversed(walk))
            rots |= {tuple(rev[i:] + rev[:i]) for i in range(len(rev))}
            if tuple(face_walk) in rots:
                continue
        if len(face_walk) <= 3:
            continue
        adj[apex] = []
        for v in face_walk:
            adj[apex].append(v)
            adj[v].append(apex)
        apex += 1

    free = [v for v in adj if v not in pinned]
    if any(not adj[v] for v in free):
        raise LayoutError("isolated nodes make the system singular")

    # reachability from the pinned set doubles as the singularity check
    seen = set(pinned)
    stack = list(pinned)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if any(v not in seen for v in free):
        raise LayoutError(
            "planarization has a component detached from the boundary"
        )

    index = {v: i for i, v in enumerate(free)}
    n = len(free)
    coords: dict[int, Point] = dict(pinned)
    if n:
        rows: list[int] = []
        cols: list[int] = []
        vals: list[float] = []
        rhs = np.zeros((n, 2))
        for v in free:
            i = index[v]
            rows.append(i)
            cols.append(i)
            vals.append(float(len(adj[v])))
            for w in adj[v]:
                if w in pinned:
                    rhs[i, 0] += pinned[w][0]
                    rhs[i, 1] += pinned[w][1]
                else:
                    rows.append(i)
                    cols.append(index[w])
                    vals.append(-1.0)
        mat = csr_matrix((vals, (rows, cols)), shape=(n, n))
        if n <= _DIRECT_SOLVE_LIMIT:
            xs = spsolve(mat, rhs[:, 0])
            ys = spsolve(mat, rhs[:, 1])
        else:
            xs, ok_x = cg(mat, rhs[:, 0], rtol=1e-12)
            ys, ok_y = cg(mat, rhs[:, 1], rtol=1e-12)
            if ok_x != 0 or ok_y != 0:
                raise LayoutError("iterative solve did not converge")
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
            raise LayoutError("singular barycentric system")
        for v in free:
            coords[v] = (float(xs[index[v]]), float(ys[index[v]]))

    residual = 0.0
    for v in free:
        ax = sum(coords[w][0] for w in adj[v]) / len(adj[v])
        ay = sum(coords[w][1] for w in adj[v]) / len(adj[v])
        residual = max(
            residual, math.hypot(coords[v][0] - ax, coords[v][1] - ay)
        )

    node_set = set(nodes)
    final = {v: p for v, p in coords.items() if v in node_set}
    return Layout(final, tuple(walk), residual)


# ------------------------------------------------------------------ audit


def _planarization_graph(pm: PlanarizationMap) -> tuple[Graph, list]:
    """The planarization as a plain graph, interior arcs only."""
    keys = sorted(
        (k for k in pm.arc_nodes if k[0] == "e"), key=lambda k: (k[1], k[2])
    )
    d = pm.drawing
    nodes = tuple(d.graph.vertices) + d.crossing_ids()
    edges = tuple(pm.arc_nodes[k] for k in keys)
    return Graph(nodes, edges, simple=False), keys


def audit_layout(d: Drawing, layout: Layout, tol: float = 1e-6) -> None:
    """Checks that straight arcs at these coordinates redraw ``d`` exactly.

    The planarization is handed to the scene converter as a graph in its
    own right; the converter independently finds intersections and reads
    rotations off the coordinates.  Any stray crossing, any touching or
    through-vertex segment, and any node whose cyclic arc order differs
    from the drawing's raises LayoutError.
    """
    d.require_valid()
    pm = PlanarizationMap(d)
    pg, keys = _planarization_graph(pm)
    for v in pg.vertices:
        if v not in layout.coordinates:
            raise LayoutError(f"layout has no coordinates for node {v}")

    routes = {
        i: (layout.coordinates[a], layout.coordinates[b])
        for i, (a, b) in enumerate(pg.edges)
    }
    scene = Scene(
        graph=pg,
        positions={v: layout.coordinates[v] for v in pg.vertices},
        routes=routes,
        anchors=d.anchors if d.anchored else None,
        radius=1.0 if d.anchored else None,
    )
    try:
        redrawn, _ = scene_to_drawing(scene, tol=tol / 1000.0, check=True)
    except Exception as err:
        raise LayoutError(f"layout does not redraw cleanly: {err}") from err
    if redrawn.crossings:
        x = redrawn.crossings[0]
        raise LayoutError(
            f"stray intersection between arcs {keys[x.edges[0]]} "
            f"and {keys[x.edges[1]]}"
        )

    # same cyclic (for anchors: linear) arc order around every node
    for node in pg.vertices:
        got = tuple(keys[e] for (e, _) in redrawn.rotation.get(node, ()))
        want = tuple(
            key for (key, _) in pm.rot.get(node, []) if key[0] == "e"
        )
        if len(got) != len(want):
            raise LayoutError(f"arc count mismatch at node {node}")
        if not got:
            continue
        if d.anchored and node in set(d.anchors):
            if got != want:
                raise LayoutError(f"arc order differs at anchor {node}")
            continue
        doubled = want + want
        for shift in range(len(want)):
            if doubled[shift : shift + len(got)] == got:
                break
        else:
            raise LayoutError(f"arc order differs at node {node}")


# -------------------------------------------------------------------- svg


@dataclass(frozen=True)
class SvgStyle:
    size: int = 640
    margin: float = 0.07
    background: str = "#ffffff"
    boundary_color: str = "#9aa4ae"
    edge_color: str = "#34495e"
    heavy_color: str = "#c0392b"
    edge_width: float = 1.3
    heavy_width: float = 2.8
    vertex_color: str = "#111111"
    vertex_radius: float = 2.4
    anchor_color: str = "#1a6b9a"
    anchor_radius: float = 4.2
    extras: dict = field(default_factory=dict)


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def to_svg(
    d: Drawing,
    layout: Layout,
    style: SvgStyle | None = None,
    k: int | None = None,
) -> str:
    """Deterministic standalone SVG for a drawing at these coordinates.

    With ``k`` given, edges crossed more than k times are drawn in the
    heavy style.  Crossing nodes are not marked; each edge is one
    polyline through its chain.
    """
    st = style or SvgStyle()
    coords = layout.coordinates
    for v in d.graph.vertices:
        if v not in coords:
            raise LayoutError(f"layout has no coordinates for node {v}")
    for x in d.crossings:
        if x.id not in coords:
            raise LayoutError(f"layout has no coordinates for node {x.id}")

    half = st.size / 2.0
    scale = half * (1.0 - st.margin)

    def pix(p: Point) -> tuple[float, float]:
        return (half + scale * p[0], half - scale * p[1])

    heavy: set[int] = set()
    if k is not None and d.graph.m:
        prof = crossing_profile(d, check=False)
        heavy = {e for e in range(d.graph.m) if prof.per_edge[e] > k}

    out: list[str] = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{st.size}" '
        f'height="{st.size}" viewBox="0 0 {st.size} {st.size}">'
    )
    out.append(
        f'<rect width="{st.size}" height="{st.size}" '
        f'fill="{st.background}"/>'
    )
    out.append(
        f'<circle cx="{_fmt(half)}" cy="{_fmt(half)}" r="{_fmt(scale)}" '
        f'fill="none" stroke="{st.boundary_color}" stroke-width="1" '
        'stroke-dasharray="6 5"/>'
    )

    light = [e for e in range(d.graph.m) if e not in heavy]
    for bucket in (light, sorted(heavy)):
        for e in bucket:
            pts = " ".join(
                f"{_fmt(x)},{_fmt(y)}"
                for x, y in (pix(coords[nd]) for nd in d.chains[e])
            )
            color = st.heavy_color if e in heavy else st.edge_color
            width = st.heavy_width if e in heavy else st.edge_width
            out.append(
                f'<polyline points="{pts}" fill="none" stroke="{color}" '
                f'stroke-width="{width}" stroke-linejoin="round" '
                'stroke-linecap="round"/>'
            )

    anchor_set = set(d.anchors) if d.anchored else set()
    for v in sorted(d.graph.vertices):
        x, y = pix(coords[v])
        if v in anchor_set:
            out.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" '
                f'r="{st.anchor_radius}" fill="{st.anchor_color}"/>'
            )
        else:
            out.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" '
                f'r="{st.vertex_radius}" fill="{st.vertex_color}"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
