"""Graphs, anchored graphs and the double-edge amplification transform.

Vertices and edges are opaque non-negative integers.  Edge ids are simply
positions in the edge tuple, so identical inputs always produce identical
ids.  Loops are never allowed; parallel edges are allowed only when a graph
is built with ``simple=False``.
"""

from __future__ import annotations

import collections
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

import networkx as nx

from .errors import InputError


# ------------------------------------------------------------------ graphs


@dataclass(frozen=True)
class Graph:
    """An undirected graph with stable integer ids.

    ``vertices`` may contain isolated vertices.  ``edges[i]`` is the pair of
    endpoints of edge ``i``; the tuple order of an edge is preserved and is
    used elsewhere as the reference direction of its drawn curve.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    simple: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in self.edges)
        )
        seen = set(self.vertices)
        if len(seen) != len(self.vertices):
            raise InputError("duplicate vertex id")
        if any(v < 0 for v in self.vertices):
            raise InputError("vertex ids must be non-negative")
        pairs = set()
        for u, v in self.edges:
            if u == v:
                raise InputError(f"loop at vertex {u} is not allowed")
            if u not in seen or v not in seen:
                raise InputError(f"edge ({u}, {v}) uses an undeclared vertex")
            key = (u, v) if u < v else (v, u)
            if key in pairs and self.simple:
                raise InputError(f"parallel edge ({u}, {v}) in a simple graph")
            pairs.add(key)

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise InputError(f"vertex {v} is not an endpoint of edge {e}")

    @cached_property
    def _incidence(self) -> dict[int, tuple[int, ...]]:
        inc: dict[int, list[int]] = {v: [] for v in self.vertices}
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self._incidence[v]

    def degree(self, v: int) -> int:
        return len(self._incidence[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self.other_end(e, v) for e in self._incidence[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._incidence

    def edge_id(self, u: int, v: int) -> int:
        """Id of the unique edge between u and v (simple graphs)."""
        for e in self._incidence[u]:
            if self.other_end(e, u) == v:
                return e
        raise InputError(f"no edge between {u} and {v}")

    def adjacent_edges(self, e: int, f: int) -> bool:
        """True when the two edges share at least one endpoint."""
        a = set(self.edges[e])
        return bool(a.intersection(self.edges[f]))

    def components(self) -> list[tuple[int, ...]]:
        """Connected components, each as a sorted vertex tuple."""
        seen: set[int] = set()
        out = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            queue = collections.deque([start])
            while queue:
                v = queue.popleft()
                for w in self.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            out.append(tuple(sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


@dataclass(frozen=True)
class AnchoredGraph:
    """A graph with a distinguished clockwise-ordered anchor sequence.

    The anchor tuple fixes the cyclic order in which those vertices must
    appear on the boundary circle of any anchored drawing.
    """

    graph: Graph
    anchors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "anchors", tuple(int(a) for a in self.anchors))
        if len(set(self.anchors)) != len(self.anchors):
            raise InputError("anchors must be distinct")
        declared = set(self.graph.vertices)
        for a in self.anchors:
            if a not in declared:
                raise InputError(f"anchor {a} is not a vertex")

    @property
    def anchor_set(self) -> frozenset[int]:
        return frozenset(self.anchors)

    def interior_vertices(self) -> tuple[int, ...]:
        aset = self.anchor_set
        return tuple(v for v in self.graph.vertices if v not in aset)


# ------------------------------------------------------- amplification


class DoubleEdge(NamedTuple):
    """One replacement path u - midpoint - v for an amplified edge."""

    midpoint: int
    halves: tuple[int, int]  # new edge ids: (u-midpoint, midpoint-v)


@dataclass(frozen=True)
class EdgeClassMap:
    """Bookkeeping for an amplification: original edge -> its double edges.

    ``kept_edge_map`` records ids of edges that were carried over unchanged
    (old edge id -> new edge id).
    """

    by_edge: dict[int, tuple[DoubleEdge, ...]]
    kept_edge_map: dict[int, int]

    @property
    def t(self) -> int:
        for copies in self.by_edge.values():
            return len(copies)
        return 0

    def double_edges(self) -> Iterator[tuple[int, int, DoubleEdge]]:
        """Yields (original edge id, copy index, double edge)."""
        for e in sorted(self.by_edge):
            for c, de in enumerate(self.by_edge[e]):
                yield e, c, de

    @cached_property
    def half_owner(self) -> dict[int, tuple[int, int, int]]:
        """new edge id -> (original edge, copy index, half index)."""
        out: dict[int, tuple[int, int, int]] = {}
        for e, c, de in self.double_edges():
            out[de.halves[0]] = (e, c, 0)
            out[de.halves[1]] = (e, c, 1)
        return out

    def half_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.half_owner))


def t_amplify(g: Graph, t: int, amplify_edges: Iterable[int] | None = None,
              keep_edges: Iterable[int] | None = None) -> tuple[Graph, EdgeClassMap]:
    """Replace each selected edge of ``g`` by ``t`` internally disjoint paths.

    Every selected edge (u, v) is removed and replaced by t length-two paths
    u - m_i - v through fresh midpoint vertices.  Edges listed in
    ``keep_edges`` are carried over untouched and keep their relative order
    at the front of the new edge tuple.  By default every edge is amplified
    and nothing is kept.

    Returns the new graph together with an EdgeClassMap describing the
    replacement double edges.  Ids are assigned deterministically: midpoints
    count up from max(vertex id) + 1 in edge-id order, and new half edges are
    appended in (edge, copy) order after the kept edges.
    """
    if t < 1:
        raise InputError("amplification needs t >= 1")
    amp = sorted(set(range(g.m)) if amplify_edges is None else set(amplify_edges))
    keep = sorted(set() if keep_edges is None else set(keep_edges))
    for e in amp + keep:
        if not 0 <= e < g.m:
            raise InputError(f"unknown edge id {e}")
    if set(amp) & set(keep):
        raise InputError("an edge cannot be both amplified and kept")
    if set(amp) | set(keep) != set(range(g.m)):
        raise InputError("every edge must be either amplified or kept")

    next_vertex = max(g.vertices, default=-1) + 1
    vertices = list(g.vertices)
    new_edges: list[tuple[int, int]] = []
    kept_map: dict[int, int] = {}
    for e in keep:
        kept_map[e] = len(new_edges)
        new_edges.append(g.edges[e])

    by_edge: dict[int, tuple[DoubleEdge, ...]] = {}
    for e in amp:
        u, v = g.edges[e]
        copies = []
        for _ in range(t):
            mid = next_vertex
            next_vertex += 1
            vertices.append(mid)
            first = len(new_edges)
            new_edges.append((u, mid))
            new_edges.append((mid, v))
            copies.append(DoubleEdge(mid, (first, first + 1)))
        by_edge[e] = tuple(copies)

    amplified = Graph(tuple(vertices), tuple(new_edges), simple=g.simple)
    return amplified, EdgeClassMap(by_edge, kept_map)


# ------------------------------------------------- anchor distance bound


def max_finite_anchor_distance(ag: AnchoredGraph) -> int:
    """Largest finite distance from an anchor to a surviving interior vertex.

    Components of G - A that attach to at most one anchor cannot influence
    routing near the boundary and are ignored before measuring.  Returns 0
    when no interior vertex survives the pruning.
    """
    g = ag.graph
    aset = ag.anchor_set
    interior = [v for v in g.vertices if v not in aset]
    # components of G - A
    seen: set[int] = set()
    discarded: set[int] = set()
    for start in interior:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = collections.deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w in aset or w in seen:
                    continue
                seen.add(w)
                comp.append(w)
                queue.append(w)
        attached = set()
        for v in comp:
            for w in g.neighbors(v):
                if w in aset:
                    attached.add(w)
        if len(attached) <= 1:
            discarded.update(comp)

    alive = set(g.vertices) - discarded
    best = 0
    for a in ag.anchors:
        dist = {a: 0}
        queue = collections.deque([a])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w in alive and w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        for v, dv in dist.items():
            if v not in aset:
                best = max(best, dv)
    return best


# -------------------------------------------------------------- interop


def to_networkx(g: Graph) -> "nx.Graph | nx.MultiGraph":
    """Converts to a networkx graph; edge ids go into the 'id' attribute."""
    out = nx.Graph() if g.simple else nx.MultiGraph()
    out.add_nodes_from(g.vertices)
    for e, (u, v) in enumerate(g.edges):
        out.add_edge(u, v, id=e)
    return out


def graphs_isomorphic(g1: Graph, g2: Graph) -> bool:
    a, b = to_networkx(g1), to_networkx(g2)
    if g1.simple != g2.simple:
        return False
    if g1.simple:
        return nx.is_isomorphic(a, b)
    return nx.is_isomorphic(nx.MultiGraph(a), nx.MultiGraph(b))
