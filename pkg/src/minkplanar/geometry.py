"""From coordinates to combinatorics.

A Scene holds vertex positions and one polyline route per edge.  The
conversion finds all pairwise route crossings, orders them along each
curve, reads off clockwise rotations from segment directions and returns
the resulting Drawing together with the crossing coordinates.

Routes must be in general position: transversal crossings only, no three
curves through a point, no curve through a vertex, no overlapping
segments.  Violations raise GeometryError rather than producing a drawing
that silently means something else.  For an anchored scene the anchors
must sit on a common circle, listed clockwise, and every route must stay
inside the closed disk.
"""

from __future__ import annotations

import collections
import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .errors import GeometryError, InputError
from .graphs import Graph
from .drawings import ArcRef, Crossing, Drawing

Point = tuple[float, float]


def on_circle(radius: float, degrees: float) -> Point:
    a = math.radians(degrees)
    return (radius * math.cos(a), radius * math.sin(a))


def _dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


@dataclass
class Scene:
    """Coordinates for a drawing of ``graph``.

    ``routes[e]`` runs from the position of the edge's first endpoint to
    its second.  ``radius`` fixes the boundary circle of an anchored scene;
    when omitted it is taken from the first anchor's distance to the
    origin (the disk is always centred there).
    """

    graph: Graph
    positions: dict[int, Point]
    routes: dict[int, tuple[Point, ...]]
    anchors: tuple[int, ...] | None = None
    radius: float | None = None


# --------------------------------------------------- low level primitives


def _point_segment_distance(p: Point, a: Point, b: Point) -> float:
    ax, ay = a
    bx, by = b
    px, py = p
    dx, dy = bx - ax, by - ay
    L2 = dx * dx + dy * dy
    if L2 == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / L2
    t = min(1.0, max(0.0, t))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def _segment_intersection(a: Point, b: Point, c: Point, d: Point, tol: float):
    """Classified intersection of segments ab and cd.

    Returns one of
      None                      disjoint,
      ('cross', point, s, t)    transversal interior crossing,
      ('touch', point)          meeting at or near segment ends,
      ('overlap', None)         collinear with a shared stretch.
    """
    ax, ay = a
    bx, by = b
    cx, cy = c
    dx, dy = d
    r = (bx - ax, by - ay)
    s = (dx - cx, dy - cy)
    denom = r[0] * s[1] - r[1] * s[0]
    acx, acy = cx - ax, cy - ay
    len_r = math.hypot(*r)
    len_s = math.hypot(*s)
    if len_r == 0.0 or len_s == 0.0:
        raise GeometryError("zero length segment in a route")
    if abs(denom) <= tol * len_r * len_s:
        # parallel; collinear only if c is on the line of ab
        if abs(acx * r[1] - acy * r[0]) > tol * len_r:
            return None
        # collinear: measure overlap of projections
        t0 = (acx * r[0] + acy * r[1]) / (len_r * len_r)
        t1 = t0 + (s[0] * r[0] + s[1] * r[1]) / (len_r * len_r)
        lo, hi = min(t0, t1), max(t0, t1)
        eps = tol / len_r
        if hi < -eps or lo > 1 + eps:
            return None
        if min(hi, 1.0) - max(lo, 0.0) <= eps:
            # touching at a single shared point
            t = (max(lo, 0.0) + min(hi, 1.0)) / 2.0
            return ("touch", (ax + t * r[0], ay + t * r[1]))
        return ("overlap", None)
    u = (acx * s[1] - acy * s[0]) / denom
    v = (acx * r[1] - acy * r[0]) / denom
    eu = tol / len_r
    ev = tol / len_s
    if u < -eu or u > 1 + eu or v < -ev or v > 1 + ev:
        return None
    pt = (ax + u * r[0], ay + u * r[1])
    if eu < u < 1 - eu and ev < v < 1 - ev:
        return ("cross", pt, u, v)
    return ("touch", pt)


# ------------------------------------------------------------- conversion


def _clean_route(route, tol: float):
    pts = [route[0]]
    for p in route[1:]:
        if _dist(p, pts[-1]) > tol:
            pts.append(p)
    return pts


def _check_scene(scene: Scene, tol: float) -> float | None:
    g = scene.graph
    for v in g.vertices:
        if v not in scene.positions:
            raise InputError(f"no position for vertex {v}")
    if sorted(scene.routes) != list(range(g.m)):
        raise InputError("routes must cover exactly the edge ids")
    radius = None
    if scene.anchors is not None:
        anchors = scene.anchors
        if len(anchors) < 2:
            raise InputError("an anchored scene needs >= 2 anchors")
        radius = scene.radius
        if radius is None:
            radius = _dist(scene.positions[anchors[0]], (0.0, 0.0))
        for a in anchors:
            off = abs(_dist(scene.positions[a], (0.0, 0.0)) - radius)
            if off > 1e-6 * max(1.0, radius):
                raise GeometryError(
                    f"anchor {a} does not sit on the boundary circle"
                )
        angles = [
            math.degrees(math.atan2(*reversed(scene.positions[a])))
            for a in anchors
        ]
        total = 0.0
        for i in range(len(anchors)):
            step = (angles[i] - angles[(i + 1) % len(anchors)]) % 360.0
            if step <= 0.0 or step >= 360.0:
                raise GeometryError("coincident anchors on the circle")
            total += step
        if abs(total - 360.0) > 1e-6:
            raise GeometryError(
                "anchors are not listed in clockwise circular order"
            )
    return radius


def scene_to_drawing(
    scene: Scene, tol: float = 1e-9, check: bool = True
) -> tuple[Drawing, dict[int, Point]]:
    """Builds the combinatorial drawing a scene depicts.

    Returns the drawing and a map from crossing node id to coordinates.
    When ``check`` is set the drawing is also run through the validator
    (a cheap way to catch conversion bugs on top of geometry checks).
    """
    g = scene.graph
    radius = _check_scene(scene, tol)

    routes: dict[int, list[Point]] = {}
    for e in range(g.m):
        u, v = g.edges[e]
        r = _clean_route(scene.routes[e], tol)
        if len(r) < 2:
            raise GeometryError(f"route of edge {e} collapses to a point")
        if _dist(r[0], scene.positions[u]) > 1e-6:
            raise GeometryError(f"route of edge {e} does not start at vertex {u}")
        if _dist(r[-1], scene.positions[v]) > 1e-6:
            raise GeometryError(f"route of edge {e} does not end at vertex {v}")
        r[0] = scene.positions[u]
        r[-1] = scene.positions[v]
        routes[e] = r

    if radius is not None:
        for e, r in routes.items():
            for i, p in enumerate(r):
                limit = radius + 1e-9 if i in (0, len(r) - 1) else radius - tol
                if _dist(p, (0.0, 0.0)) > limit:
                    raise GeometryError(
                        f"route of edge {e} leaves the boundary disk"
                    )

    # prefix arclengths, for ordering crossings along a route
    prefix: dict[int, list[float]] = {}
    diag = 0.0
    xs, ys = [], []
    for e, r in routes.items():
        acc = [0.0]
        for i in range(len(r) - 1):
            acc.append(acc[-1] + _dist(r[i], r[i + 1]))
        prefix[e] = acc
        for (x, y) in r:
            xs.append(x)
            ys.append(y)
    for v, (x, y) in scene.positions.items():
        xs.append(x)
        ys.append(y)
    diag = math.hypot(max(xs) - min(xs), max(ys) - min(ys)) if xs else 1.0
    cell = max(diag / 256.0, 16.0 * tol)

    # flatten every polyline piece into parallel arrays
    seg_edge: list[int] = []
    seg_idx: list[int] = []
    seg_a: list[Point] = []
    seg_b: list[Point] = []
    seg_pref: list[float] = []
    for e in range(g.m):
        r = routes[e]
        pref = prefix[e]
        for i in range(len(r) - 1):
            seg_edge.append(e)
            seg_idx.append(i)
            seg_a.append(r[i])
            seg_b.append(r[i + 1])
            seg_pref.append(pref[i])
    nseg = len(seg_edge)

    crossings_raw: list[tuple[int, int, float, float, Point]] = []
    vert_pos = scene.positions
    if nseg:
        SE = np.asarray(seg_edge, dtype=np.int64)
        SI = np.asarray(seg_idx, dtype=np.int64)
        SA = np.asarray(seg_a, dtype=float)
        SB = np.asarray(seg_b, dtype=float)
        SPREF = np.asarray(seg_pref, dtype=float)
        SLEN = np.hypot(SB[:, 0] - SA[:, 0], SB[:, 1] - SA[:, 1])
        if np.any(SLEN == 0.0):
            raise GeometryError("zero length segment in a route")

        vids = np.array(sorted(vert_pos), dtype=np.int64)
        vrow = {int(v): i for i, v in enumerate(vids)}
        pos_arr = np.array([vert_pos[int(v)] for v in vids], dtype=float)
        end_u = np.array([vrow[u] for (u, _) in g.edges], dtype=np.int64)
        end_v = np.array([vrow[v] for (_, v) in g.edges], dtype=np.int64)

        # cover each piece by chunks no longer than L; a radius search on
        # chunk midpoints is then a complete candidate filter, since two
        # pieces that meet (or nearly meet) must each put a chunk midpoint
        # within half a chunk length of the contact
        L = 4.0 * cell
        nchunk = np.maximum(1, np.ceil(SLEN / L)).astype(np.int64)
        parent = np.repeat(np.arange(nseg), nchunk)
        first = np.concatenate(
            (np.zeros(1, dtype=np.int64), np.cumsum(nchunk)[:-1])
        )
        ordinal = np.arange(parent.size) - np.repeat(first, nchunk)
        tmid = (ordinal + 0.5) / nchunk[parent]
        cmid = SA[parent] + tmid[:, None] * (SB[parent] - SA[parent])
        ctree = cKDTree(cmid)

        # no route may pass through a vertex other than its own endpoints
        near = ctree.query_ball_point(pos_arr, 0.5 * L + 16.0 * tol)
        cand_v: list[int] = []
        cand_c: list[int] = []
        for i, found in enumerate(near):
            if found:
                cand_v.extend([i] * len(found))
                cand_c.extend(found)
        if cand_v:
            qv = np.asarray(cand_v, dtype=np.int64)
            qs = parent[np.asarray(cand_c, dtype=np.int64)]
            pair_key = np.unique(qv * np.int64(nseg) + qs)
            qv = pair_key // nseg
            qs = pair_key % nseg
            outside = (end_u[SE[qs]] != qv) & (end_v[SE[qs]] != qv)
            qv = qv[outside]
            qs = qs[outside]
            if qv.size:
                px = pos_arr[qv, 0]
                py = pos_arr[qv, 1]
                dx = SB[qs, 0] - SA[qs, 0]
                dy = SB[qs, 1] - SA[qs, 1]
                tt = (
                    (px - SA[qs, 0]) * dx + (py - SA[qs, 1]) * dy
                ) / (SLEN[qs] * SLEN[qs])
                tt = np.clip(tt, 0.0, 1.0)
                gap = np.hypot(
                    px - SA[qs, 0] - tt * dx, py - SA[qs, 1] - tt * dy
                )
                hit_at = np.flatnonzero(gap <= 16.0 * tol)
                if hit_at.size:
                    b = int(hit_at[0])
                    raise GeometryError(
                        f"route of edge {int(SE[qs[b]])} passes through "
                        f"vertex {int(vids[qv[b]])}"
                    )

        # candidate piece pairs, deduplicated; consecutive pieces of one
        # curve share a joint and are skipped
        raw = ctree.query_pairs(L + 64.0 * tol, output_type="ndarray")
        p1 = parent[raw[:, 0]]
        p2 = parent[raw[:, 1]]
        mixed = p1 != p2
        plo = np.minimum(p1[mixed], p2[mixed])
        phi = np.maximum(p1[mixed], p2[mixed])
        pair_key = np.unique(plo * np.int64(nseg) + phi)
        plo = pair_key // nseg
        phi = pair_key % nseg
        joint = (SE[plo] == SE[phi]) & (np.abs(SI[plo] - SI[phi]) == 1)
        plo = plo[~joint]
        phi = phi[~joint]

        rx = SB[plo, 0] - SA[plo, 0]
        ry = SB[plo, 1] - SA[plo, 1]
        sx = SB[phi, 0] - SA[phi, 0]
        sy = SB[phi, 1] - SA[phi, 1]
        acx = SA[phi, 0] - SA[plo, 0]
        acy = SA[phi, 1] - SA[plo, 1]
        denom = rx * sy - ry * sx
        len_r = SLEN[plo]
        len_s = SLEN[phi]
        par = np.abs(denom) <= tol * len_r * len_s
        on_line = np.abs(acx * ry - acy * rx) <= tol * len_r

        # parallel collinear pairs are rare; classify them one at a time
        for j in np.flatnonzero(par & on_line):
            a1 = int(SE[plo[j]])
            a2 = int(SE[phi[j]])
            hit = _segment_intersection(
                (float(SA[plo[j], 0]), float(SA[plo[j], 1])),
                (float(SB[plo[j], 0]), float(SB[plo[j], 1])),
                (float(SA[phi[j], 0]), float(SA[phi[j], 1])),
                (float(SB[phi[j], 0]), float(SB[phi[j], 1])),
                tol,
            )
            if hit is None:
                continue
            if hit[0] == "overlap":
                raise GeometryError(
                    f"edges {a1} and {a2} run along a shared segment"
                )
            if a1 == a2:
                raise GeometryError(f"edge {a1} crosses itself")
            if hit[0] == "touch":
                pt = hit[1]
                shared = set(g.edges[a1]) & set(g.edges[a2])
                if any(_dist(pt, vert_pos[v]) <= 16.0 * tol for v in shared):
                    continue
                raise GeometryError(
                    f"edges {a1} and {a2} touch without crossing near {pt}"
                )
            _, pt, u_c, v_c = hit
            crossings_raw.append(
                (
                    a1,
                    a2,
                    float(SPREF[plo[j]] + u_c * len_r[j]),
                    float(SPREF[phi[j]] + v_c * len_s[j]),
                    pt,
                )
            )

        act = np.flatnonzero(~par)
        uu = (acx[act] * sy[act] - acy[act] * sx[act]) / denom[act]
        vv = (acx[act] * ry[act] - acy[act] * rx[act]) / denom[act]
        eu = tol / len_r[act]
        ev = tol / len_s[act]
        inside = (uu >= -eu) & (uu <= 1.0 + eu) & (vv >= -ev) & (vv <= 1.0 + ev)
        crossed = (
            inside & (uu > eu) & (uu < 1.0 - eu) & (vv > ev) & (vv < 1.0 - ev)
        )
        touched = inside & ~crossed

        selfi = np.flatnonzero(inside & (SE[plo[act]] == SE[phi[act]]))
        if selfi.size:
            raise GeometryError(
                f"edge {int(SE[plo[act[selfi[0]]]])} crosses itself"
            )

        ti = act[touched]
        if ti.size:
            tpx = SA[plo[ti], 0] + uu[touched] * rx[ti]
            tpy = SA[plo[ti], 1] + uu[touched] * ry[ti]
            ok = np.zeros(ti.size, dtype=bool)
            for c1 in (end_u[SE[plo[ti]]], end_v[SE[plo[ti]]]):
                for c2 in (end_u[SE[phi[ti]]], end_v[SE[phi[ti]]]):
                    ok |= (c1 == c2) & (
                        np.hypot(tpx - pos_arr[c1, 0], tpy - pos_arr[c1, 1])
                        <= 16.0 * tol
                    )
            bad = np.flatnonzero(~ok)
            if bad.size:
                b = int(bad[0])
                pt = (float(tpx[b]), float(tpy[b]))
                raise GeometryError(
                    f"edges {int(SE[plo[ti[b]]])} and {int(SE[phi[ti[b]]])} "
                    f"touch without crossing near {pt}"
                )

        ci = act[crossed]
        if ci.size:
            cu = uu[crossed]
            cw = vv[crossed]
            cpx = SA[plo[ci], 0] + cu * rx[ci]
            cpy = SA[plo[ci], 1] + cu * ry[ci]
            s1s = SPREF[plo[ci]] + cu * len_r[ci]
            s2s = SPREF[phi[ci]] + cw * len_s[ci]
            e1s = SE[plo[ci]]
            e2s = SE[phi[ci]]
            for j in range(ci.size):
                crossings_raw.append(
                    (
                        int(e1s[j]),
                        int(e2s[j]),
                        float(s1s[j]),
                        float(s2s[j]),
                        (float(cpx[j]), float(cpy[j])),
                    )
                )

        if crossings_raw:
            vtree = cKDTree(pos_arr)
            xy = np.array([rec[4] for rec in crossings_raw], dtype=float)
            for rec, found in zip(
                crossings_raw, vtree.query_ball_point(xy, 16.0 * tol)
            ):
                if found:
                    raise GeometryError(
                        f"edges {rec[0]} and {rec[1]} cross too close to "
                        f"vertex {int(vids[found[0]])}"
                    )

    # deterministic ids: sort by (smaller edge, position along it)
    def sort_key(rec):
        e1, e2, s1, s2, _ = rec
        return (e1, s1, e2, s2) if e1 < e2 else (e2, s2, e1, s1)

    crossings_raw.sort(key=sort_key)
    next_id = max(g.vertices, default=-1) + 1
    xid_points: dict[int, Point] = {}
    crossings: list[Crossing] = []
    along: dict[int, list[tuple[float, int]]] = collections.defaultdict(list)
    for (e1, e2, s1, s2, pt) in crossings_raw:
        xid = next_id
        next_id += 1
        lo, hi = (e1, e2) if e1 < e2 else (e2, e1)
        crossings.append(Crossing(xid, (lo, hi)))
        xid_points[xid] = pt
        along[e1].append((s1, xid))
        along[e2].append((s2, xid))

    chains: dict[int, tuple[int, ...]] = {}
    where_on_edge: dict[tuple[int, int], float] = {}
    for e in range(g.m):
        u, v = g.edges[e]
        mids = sorted(along.get(e, []))
        for (sa, xa), (sb, xb) in zip(mids, mids[1:]):
            if sb - sa <= 16.0 * tol:
                raise GeometryError(
                    f"crossings {xa} and {xb} are too close on edge {e}"
                )
        chains[e] = (u,) + tuple(x for _, x in mids) + (v,)
        for s, x in mids:
            where_on_edge[(e, x)] = s

    # rotations from local directions
    def direction_at(e: int, s: float, outgoing: bool) -> float:
        """Angle of the curve of e at arclength s, looking forward or back."""
        acc = prefix[e]
        r = routes[e]
        if outgoing:
            j = 0
            while j < len(acc) - 2 and acc[j + 1] <= s + tol:
                j += 1
            dx = r[j + 1][0] - r[j][0]
            dy = r[j + 1][1] - r[j][1]
        else:
            j = len(acc) - 2
            while j > 0 and acc[j] >= s - tol:
                j -= 1
            dx = r[j][0] - r[j + 1][0]
            dy = r[j][1] - r[j + 1][1]
        return math.atan2(dy, dx)

    incident: dict[int, list[tuple[float, ArcRef]]] = collections.defaultdict(list)
    for e in range(g.m):
        u, v = g.edges[e]
        total = prefix[e][-1]
        chain = chains[e]
        incident[u].append((direction_at(e, 0.0, True), (e, 0)))
        incident[v].append((direction_at(e, total, False), (e, len(chain) - 2)))
        for pos in range(1, len(chain) - 1):
            x = chain[pos]
            s = where_on_edge[(e, x)]
            incident[x].append((direction_at(e, s, False), (e, pos - 1)))
            incident[x].append((direction_at(e, s, True), (e, pos)))

    anchor_index = (
        {a: i for i, a in enumerate(scene.anchors)} if scene.anchors else {}
    )
    rotation: dict[int, tuple[ArcRef, ...]] = {}
    for node, ends in incident.items():
        if node in anchor_index:
            continue
        ends.sort(key=lambda t: -t[0])
        for (a1, _), (a2, _) in zip(ends, ends[1:]):
            if a1 - a2 < 1e-12:
                raise GeometryError(f"tangential curves at node {node}")
        rotation[node] = tuple(ref for _, ref in ends)

    if scene.anchors is not None:
        for a in scene.anchors:
            pos = scene.positions[a]
            theta = math.atan2(pos[1], pos[0])
            t_cw = theta - math.pi / 2.0
            keyed = []
            for ang, ref in incident.get(a, []):
                off = (t_cw - ang) % (2.0 * math.pi)
                if off < 1e-12 or off > math.pi - 1e-12:
                    raise GeometryError(
                        f"curve leaves the disk at anchor {a}"
                    )
                keyed.append((off, ref))
            keyed.sort()
            for (o1, _), (o2, _) in zip(keyed, keyed[1:]):
                if o2 - o1 < 1e-12:
                    raise GeometryError(f"tangential curves at anchor {a}")
            rotation[a] = tuple(ref for _, ref in keyed)
        for v in g.vertices:
            rotation.setdefault(v, ())

    for v in g.vertices:
        rotation.setdefault(v, ())

    drawing = Drawing(
        g, tuple(crossings), chains, rotation,
        scene.anchors if scene.anchors is not None else None,
    )
    if check:
        drawing.require_valid()
    return drawing, xid_points
