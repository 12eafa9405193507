"""Combinatorial drawings: planarizations, validity and crossing predicates.

A drawing records, for a graph drawn in the plane or in a closed disk:

* one crossing node per transversal crossing, labelled with its edge pair,
* per edge the chain of nodes its curve visits (endpoints plus crossing
  nodes in order along the curve, oriented from the edge tuple's first
  endpoint to its second),
* per node the clockwise cyclic order of curve ends leaving it.

Curve ends are arc references ``(edge id, segment index)``; segment i of an
edge covers the stretch between chain positions i and i+1.  For an anchored
drawing the boundary circle is materialised internally as one boundary arc
between each pair of consecutive anchors; the stored rotation of an anchor
lists only interior arc ends, linearly, starting just after the boundary
arc towards the next anchor and ending just before the one from the
previous anchor.

Face tracing uses the same convention as the embeddings module: with
clockwise rotations the face to the left of a dart is traced by following
"next clockwise after the twin".  For a valid anchored drawing the face to
the left of the forward boundary darts is the region outside the disk, and
its orbit must consist of exactly those forward darts.
"""

from __future__ import annotations

import collections
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .errors import InputError
from .graphs import Graph

ArcRef = tuple[int, int]


@dataclass(frozen=True)
class Crossing:
    id: int
    edges: tuple[int, int]


@dataclass(frozen=True, eq=False)
class Drawing:
    """A combinatorial drawing of ``graph``, possibly anchored."""

    graph: Graph
    crossings: tuple[Crossing, ...]
    chains: dict[int, tuple[int, ...]]
    rotation: dict[int, tuple[ArcRef, ...]]
    anchors: tuple[int, ...] | None = None

    @property
    def anchored(self) -> bool:
        return self.anchors is not None

    def crossing_ids(self) -> tuple[int, ...]:
        return tuple(x.id for x in self.crossings)

    def crossing_by_id(self) -> dict[int, Crossing]:
        return {x.id: x for x in self.crossings}

    def nodes(self) -> tuple[int, ...]:
        return tuple(self.graph.vertices) + self.crossing_ids()

    def require_valid(self) -> None:
        problems = validate(self)
        if problems:
            raise InputError("invalid drawing: " + "; ".join(problems[:8]))


# ----------------------------------------------------------- the dart map
#
# Arcs get structural keys: ('e', edge, seg) for edge arcs and ('b', i) for
# the boundary arc from anchor i to anchor i+1.  A dart is (key, end) with
# end 0 leaving the arc's first node and end 1 leaving its second.

ArcKey = tuple
MapDart = tuple[ArcKey, int]


class PlanarizationMap:
    """Compiled dart structure of a drawing, used for face tracing."""

    def __init__(self, d: Drawing):
        self.drawing = d
        self.arc_nodes: dict[ArcKey, tuple[int, int]] = {}
        for e, chain in d.chains.items():
            for i in range(len(chain) - 1):
                self.arc_nodes[("e", e, i)] = (chain[i], chain[i + 1])
        if d.anchored:
            m = len(d.anchors)
            for i in range(m):
                self.arc_nodes[("b", i)] = (d.anchors[i], d.anchors[(i + 1) % m])

        # full clockwise rotations, boundary arcs spliced in at anchors
        self.rot: dict[int, list[MapDart]] = {}
        anchor_pos = (
            {a: i for i, a in enumerate(d.anchors)} if d.anchored else {}
        )
        for node, refs in d.rotation.items():
            darts = [self._dart_for(ref, node) for ref in refs]
            if node in anchor_pos:
                i = anchor_pos[node]
                m = len(d.anchors)
                darts = (
                    [(("b", i), 0)] + darts + [(("b", (i - 1) % m), 1)]
                )
            self.rot[node] = darts
        if d.anchored:
            for a in d.anchors:
                if a not in self.rot:
                    i = anchor_pos[a]
                    m = len(d.anchors)
                    self.rot[a] = [(("b", i), 0), (("b", (i - 1) % m), 1)]

        self._next: dict[MapDart, MapDart] = {}
        self._tail: dict[MapDart, int] = {}
        for node, darts in self.rot.items():
            k = len(darts)
            for i, dart in enumerate(darts):
                self._next[dart] = darts[(i + 1) % k]
                self._tail[dart] = node

    def _dart_for(self, ref: ArcRef, node: int) -> MapDart:
        e, i = ref
        key = ("e", e, i)
        a, b = self.arc_nodes[key]
        if node == a:
            return (key, 0)
        if node == b:
            return (key, 1)
        raise InputError(f"arc {ref} is not incident to node {node}")

    def darts(self) -> list[MapDart]:
        return [(key, end) for key in self.arc_nodes for end in (0, 1)]

    def tail(self, dart: MapDart) -> int:
        return self._tail[dart]

    @staticmethod
    def twin(dart: MapDart) -> MapDart:
        key, end = dart
        return (key, 1 - end)

    def phi(self, dart: MapDart) -> MapDart:
        return self._next[self.twin(dart)]

    def faces(self) -> list[tuple[MapDart, ...]]:
        remaining = set(self.darts())
        out = []
        for key in sorted(self.arc_nodes, key=repr):
            for end in (0, 1):
                start = (key, end)
                if start not in remaining:
                    continue
                orbit = [start]
                remaining.discard(start)
                d = self.phi(start)
                while d != start:
                    orbit.append(d)
                    remaining.discard(d)
                    d = self.phi(d)
                out.append(tuple(orbit))
        return out


# ------------------------------------------------------------- validation


def _expected_arc_ends(d: Drawing) -> dict[int, collections.Counter]:
    """Interior arc-end multiset each node must list in its rotation."""
    expect: dict[int, collections.Counter] = collections.defaultdict(
        collections.Counter
    )
    for e, chain in d.chains.items():
        last = len(chain) - 1
        for pos, node in enumerate(chain):
            if pos > 0:
                expect[node][(e, pos - 1)] += 1
            if pos < last:
                expect[node][(e, pos)] += 1
    return expect


def validate(d: Drawing) -> list[str]:
    """Well-formedness report; an empty list means the drawing is valid."""
    problems: list[str] = []
    g = d.graph
    vset = set(g.vertices)

    # anchors
    if d.anchored:
        if len(d.anchors) < 2:
            problems.append("boundary: an anchored drawing needs >= 2 anchors")
        if len(set(d.anchors)) != len(d.anchors):
            problems.append("boundary: repeated anchor")
        for a in d.anchors:
            if a not in vset:
                problems.append(f"boundary: anchor {a} is not a vertex")

    # crossings
    xids = [x.id for x in d.crossings]
    if len(set(xids)) != len(xids):
        problems.append("crossing: duplicate crossing id")
    clash = set(xids) & vset
    if clash:
        problems.append(f"crossing: ids {sorted(clash)} collide with vertices")
    by_id = {}
    for x in d.crossings:
        by_id[x.id] = x
        e1, e2 = x.edges
        if e1 == e2 or not (0 <= e1 < g.m) or not (0 <= e2 < g.m):
            problems.append(f"crossing: node {x.id} has a bad edge pair {x.edges}")

    # chains
    if sorted(d.chains) != list(range(g.m)):
        problems.append("chain: chains must cover exactly the edge ids")
        return problems
    seen_at: dict[int, list[int]] = collections.defaultdict(list)
    for e in range(g.m):
        chain = d.chains[e]
        u, v = g.edges[e]
        if len(chain) < 2 or chain[0] != u or chain[-1] != v:
            problems.append(
                f"chain: edge {e} must run from {u} to {v}; got {chain}"
            )
            continue
        inner = chain[1:-1]
        if len(set(inner)) != len(inner):
            problems.append(f"chain: edge {e} visits a crossing twice")
        for node in inner:
            if node in vset:
                problems.append(
                    f"chain: edge {e} passes through vertex {node} mid-curve"
                )
            elif node not in by_id:
                problems.append(f"chain: edge {e} visits undeclared node {node}")
            else:
                seen_at[node].append(e)
    if problems:
        return problems

    for x in d.crossings:
        if sorted(seen_at.get(x.id, [])) != sorted(x.edges):
            problems.append(
                f"crossing: node {x.id} labelled {x.edges} but lies on chains "
                f"{sorted(seen_at.get(x.id, []))}"
            )

    # rotations: multiset agreement
    expect = _expected_arc_ends(d)
    all_nodes = set(g.vertices) | set(xids)
    for node in sorted(set(d.rotation) - all_nodes):
        problems.append(f"rotation: unknown node {node}")
    for node in sorted(all_nodes):
        want = expect.get(node, collections.Counter())
        got = collections.Counter(d.rotation.get(node, ()))
        if want != got:
            problems.append(
                f"rotation: node {node} lists {sorted(got)} but its chains "
                f"imply {sorted(want)}"
            )
    if problems:
        return problems

    # crossing degree and strict alternation
    for x in d.crossings:
        refs = d.rotation[x.id]
        if len(refs) != 4:
            problems.append(f"crossing-degree: node {x.id} has degree {len(refs)}")
            continue
        owners = [e for e, _ in refs]
        e1, e2 = x.edges
        if sorted(owners) != sorted([e1, e1, e2, e2]):
            problems.append(f"crossing: node {x.id} rotation lists {owners}")
        elif owners[0] == owners[1] or owners[1] == owners[2]:
            problems.append(
                f"alternation: edges do not alternate at crossing {x.id}"
            )

    if problems:
        return problems

    # face structure
    pm = PlanarizationMap(d)
    comp = _planarization_components(d, pm)
    n_comp = max(comp.values()) + 1 if comp else 0
    v_cnt = [0] * n_comp
    e_cnt = [0] * n_comp
    f_cnt = [0] * n_comp
    for node, c in comp.items():
        v_cnt[c] += 1
    for key, (a, b) in pm.arc_nodes.items():
        e_cnt[comp[a]] += 1
    for orbit in pm.faces():
        f_cnt[comp[pm.tail(orbit[0])]] += 1
    for c in range(n_comp):
        if e_cnt[c] == 0:
            f_cnt[c] += 1
        if v_cnt[c] - e_cnt[c] + f_cnt[c] != 2:
            problems.append(
                "euler: component has V-E+F = "
                f"{v_cnt[c] - e_cnt[c] + f_cnt[c]}, expected 2"
            )
            break

    if d.anchored and not problems:
        m = len(d.anchors)
        start: MapDart = (("b", 0), 0)
        orbit = [start]
        dart = pm.phi(start)
        while dart != start and len(orbit) <= 2 * len(pm.arc_nodes):
            orbit.append(dart)
            dart = pm.phi(dart)
        want = [(("b", i), 0) for i in range(m)]
        if orbit != want:
            problems.append(
                "boundary: outer face is not the bare anchor circle "
                f"(walk of length {len(orbit)})"
            )
    return problems


def _planarization_components(d: Drawing, pm: PlanarizationMap) -> dict[int, int]:
    adj: dict[int, set[int]] = {node: set() for node in d.nodes()}
    for a, b in pm.arc_nodes.values():
        adj[a].add(b)
        adj[b].add(a)
    comp: dict[int, int] = {}
    c = 0
    for start in sorted(adj):
        if start in comp:
            continue
        queue = collections.deque([start])
        comp[start] = c
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in comp:
                    comp[w] = c
                    queue.append(w)
        c += 1
    return comp


# ------------------------------------------------------------- predicates


@dataclass(frozen=True)
class CrossingProfile:
    per_edge: dict[int, int]
    per_pair: dict[tuple[int, int], int]

    @property
    def total(self) -> int:
        return sum(self.per_pair.values())

    def heavy_edges(self, k: int) -> tuple[int, ...]:
        return tuple(sorted(e for e, c in self.per_edge.items() if c > k))


def crossing_profile(d: Drawing, check: bool = True) -> CrossingProfile:
    """Per-edge and per-pair crossing counts of a valid drawing."""
    if check:
        d.require_valid()
    per_edge = {e: 0 for e in range(d.graph.m)}
    per_pair: dict[tuple[int, int], int] = collections.defaultdict(int)
    for x in d.crossings:
        e1, e2 = sorted(x.edges)
        per_edge[e1] += 1
        per_edge[e2] += 1
        per_pair[(e1, e2)] += 1
    return CrossingProfile(per_edge, dict(per_pair))


def is_simple(d: Drawing, check: bool = True):
    """(ok, witness): no pair crosses twice and no adjacent pair crosses.

    The witness is the lexicographically first offending pair together with
    the reason, or None when the drawing is simple.
    """
    prof = crossing_profile(d, check=check)
    for pair in sorted(prof.per_pair):
        if prof.per_pair[pair] > 1:
            return False, (pair, "pair crosses more than once")
    for pair in sorted(prof.per_pair):
        if d.graph.adjacent_edges(*pair):
            return False, (pair, "edges share a vertex and cross")
    return True, None


def adjacent_crossing_pairs(d: Drawing, check: bool = True) -> list[tuple[int, int]]:
    prof = crossing_profile(d, check=check)
    return [p for p in sorted(prof.per_pair) if d.graph.adjacent_edges(*p)]


def is_k_planar(d: Drawing, k: int, check: bool = True) -> bool:
    """True when no edge carries more than k crossings."""
    prof = crossing_profile(d, check=check)
    return all(c <= k for c in prof.per_edge.values())


def is_min_k_planar(d: Drawing, k: int, check: bool = True):
    """(ok, witness): every crossing pair has a side with at most k crossings.

    The witness is the first pair of heavy edges that cross each other.
    """
    prof = crossing_profile(d, check=check)
    for (e1, e2) in sorted(prof.per_pair):
        if prof.per_edge[e1] > k and prof.per_edge[e2] > k:
            return False, (e1, e2)
    return True, None


# ------------------------------------------------------------ restriction


def restrict(
    d: Drawing,
    keep_edges: Iterable[int],
    keep_vertices: Iterable[int] | None = None,
    check: bool = True,
) -> tuple[Drawing, dict[int, int]]:
    """Sub-drawing induced by a set of edges.

    Kept chains lose the crossing nodes whose other edge was dropped; the
    adjacent arcs merge and rotations are rewritten accordingly.  Vertices
    default to the endpoints of kept edges; pass ``keep_vertices`` to retain
    more.  The result keeps its boundary only when every anchor survives.
    Returns the new drawing and the old-edge -> new-edge id mapping.
    """
    if check:
        d.require_valid()
    keep = sorted(set(keep_edges))
    for e in keep:
        if not 0 <= e < d.graph.m:
            raise InputError(f"unknown edge id {e}")
    vkeep = set() if keep_vertices is None else set(keep_vertices)
    for v in vkeep:
        if v not in set(d.graph.vertices):
            raise InputError(f"unknown vertex id {v}")
    for e in keep:
        vkeep.update(d.graph.edges[e])

    new_vertices = tuple(v for v in d.graph.vertices if v in vkeep)
    edge_map = {e: i for i, e in enumerate(keep)}
    new_edges = tuple(d.graph.edges[e] for e in keep)
    new_graph = Graph(new_vertices, new_edges, simple=d.graph.simple)

    keep_set = set(keep)
    surviving = {
        x.id: x for x in d.crossings
        if x.edges[0] in keep_set and x.edges[1] in keep_set
    }

    new_chains: dict[int, tuple[int, ...]] = {}
    token_map: dict[tuple[int, ArcRef], ArcRef] = {}
    for e in keep:
        old_chain = d.chains[e]
        last = len(old_chain) - 1
        kept_pos = [
            p for p, node in enumerate(old_chain)
            if p in (0, last) or node in surviving
        ]
        new_chain = tuple(old_chain[p] for p in kept_pos)
        ne = edge_map[e]
        new_chains[ne] = new_chain
        for q, p in enumerate(kept_pos):
            node = old_chain[p]
            if p > 0:
                token_map[(node, (e, p - 1))] = (ne, q - 1)
            if p < last:
                token_map[(node, (e, p))] = (ne, q)

    new_rotation: dict[int, tuple[ArcRef, ...]] = {}
    for node in list(new_vertices) + sorted(surviving):
        refs = d.rotation.get(node, ())
        mapped = []
        for ref in refs:
            key = (node, ref)
            if key in token_map:
                mapped.append(token_map[key])
        new_rotation[node] = tuple(mapped)

    anchors = None
    if d.anchored and all(a in vkeep for a in d.anchors):
        anchors = d.anchors
    new_crossings = tuple(
        Crossing(x.id, (edge_map[x.edges[0]], edge_map[x.edges[1]]))
        for x in sorted(surviving.values(), key=lambda x: x.id)
    )
    out = Drawing(new_graph, new_crossings, new_chains, new_rotation, anchors)
    if check:
        out.require_valid()
    return out, edge_map


# ----------------------------------------------------- equality and mirror


def canonical(d: Drawing) -> Drawing:
    """Normal form: interior rotations rotated to start at their least entry.

    Anchor rotations are linear (anchored) so they are left alone; for an
    unanchored drawing every rotation is cyclic and gets normalised.
    """
    fixed = set(d.anchors or ())
    rot = {}
    for node, refs in d.rotation.items():
        if node in fixed or not refs:
            rot[node] = tuple(refs)
            continue
        k = min(range(len(refs)), key=lambda i: refs[i])
        rot[node] = tuple(refs[k:] + refs[:k])
    crossings = tuple(sorted(d.crossings, key=lambda x: x.id))
    return replace(d, rotation=rot, crossings=crossings)


def drawings_equal(d1: Drawing, d2: Drawing) -> bool:
    a, b = canonical(d1), canonical(d2)
    return (
        a.graph == b.graph
        and a.anchors == b.anchors
        and a.crossings == b.crossings
        and a.chains == b.chains
        and a.rotation == b.rotation
    )


def mirror(d: Drawing) -> Drawing:
    """The reflected drawing.

    Rotations reverse; for an anchored drawing the clockwise anchor order
    reverses as well (reflection turns the disk over).
    """
    anchors = None
    if d.anchored:
        anchors = (d.anchors[0],) + tuple(reversed(d.anchors[1:]))
    rot = {node: tuple(reversed(refs)) for node, refs in d.rotation.items()}
    return replace(d, rotation=rot, anchors=anchors)
