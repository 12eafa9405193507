"""Planarity testing, rotation systems and planar duals.

A combinatorial embedding is stored as a rotation system: for every vertex,
the cyclic clockwise order of its incident edge ids.  Faces are traced with
darts.  A dart is a pair (edge id, tail vertex); with clockwise rotations
the successor of dart d is the next dart clockwise after twin(d), and the
orbit of that successor map walks the boundary of the face lying to the
LEFT of d.  Inner faces of a plane drawing then come out counterclockwise
and the outer face clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .errors import InputError
from .graphs import Graph, to_networkx

Dart = tuple[int, int]  # (edge id, tail vertex)


# --------------------------------------------------------------- embedding


@dataclass(frozen=True, eq=False)
class Embedding:
    """A rotation system over a graph.

    ``rotation[v]`` lists the edge ids incident to v in clockwise order.
    Parallel edges are fine: an edge id appears once at each endpoint.
    """

    graph: Graph
    rotation: dict[int, tuple[int, ...]]

    def __post_init__(self) -> None:
        for v in self.graph.vertices:
            got = sorted(self.rotation.get(v, ()))
            want = sorted(self.graph.incident_edges(v))
            if got != want:
                raise InputError(
                    f"rotation at vertex {v} does not list its incident edges"
                )
        extra = set(self.rotation) - set(self.graph.vertices)
        if extra:
            raise InputError(f"rotation given for unknown vertices {sorted(extra)}")

    # -- darts ---------------------------------------------------------

    def darts(self) -> list[Dart]:
        out = []
        for e, (u, v) in enumerate(self.graph.edges):
            out.append((e, u))
            out.append((e, v))
        return out

    def twin(self, d: Dart) -> Dart:
        e, tail = d
        return (e, self.graph.other_end(e, tail))

    @cached_property
    def _next_clockwise(self) -> dict[Dart, Dart]:
        nxt: dict[Dart, Dart] = {}
        for v, edges in self.rotation.items():
            k = len(edges)
            for i, e in enumerate(edges):
                nxt[(e, v)] = (edges[(i + 1) % k], v)
        return nxt

    def phi(self, d: Dart) -> Dart:
        """Next dart along the face to the left of d."""
        return self._next_clockwise[self.twin(d)]

    @cached_property
    def _faces(self) -> tuple[tuple[Dart, ...], ...]:
        left: set[Dart] = set(self.darts())
        faces = []
        for start in self.darts():
            if start not in left:
                continue
            orbit = [start]
            left.discard(start)
            d = self.phi(start)
            while d != start:
                orbit.append(d)
                left.discard(d)
                d = self.phi(d)
            faces.append(tuple(orbit))
        return tuple(faces)

    def faces(self) -> tuple[tuple[Dart, ...], ...]:
        """All face orbits; every dart appears in exactly one orbit."""
        return self._faces

    def face_count(self) -> int:
        """Face count for Euler bookkeeping.

        Components without any edge contribute one face each (a lone vertex
        sits in a disk of its own when components are embedded separately).
        """
        n_faces = len(self._faces)
        for comp in self.graph.components():
            if all(self.graph.degree(v) == 0 for v in comp):
                n_faces += 1
        return n_faces

    def euler_ok(self) -> bool:
        """V - E + F == 2 on every component, components taken separately."""
        comp_of: dict[int, int] = {}
        for i, comp in enumerate(self.graph.components()):
            for v in comp:
                comp_of[v] = i
        n_comp = len(self.graph.components())
        v_cnt = [0] * n_comp
        e_cnt = [0] * n_comp
        f_cnt = [0] * n_comp
        for v in self.graph.vertices:
            v_cnt[comp_of[v]] += 1
        for u, _ in self.graph.edges:
            e_cnt[comp_of[u]] += 1
        for orbit in self._faces:
            f_cnt[comp_of[orbit[0][1]]] += 1
        for i in range(n_comp):
            if e_cnt[i] == 0:
                f_cnt[i] += 1
        return all(v_cnt[i] - e_cnt[i] + f_cnt[i] == 2 for i in range(n_comp))


# -------------------------------------------------------------- planarity


def planarity_test(g: Graph) -> bool:
    """True when the graph has a plane embedding.

    Parallel edges never affect the answer, so the test runs on the
    underlying simple graph.
    """
    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    simple.add_edges_from(g.edges)
    ok, _ = nx.check_planarity(simple)
    return ok


def planar_embed(g: Graph) -> Embedding:
    """Computes some plane rotation system for a planar simple graph.

    Raises InputError for non-planar input, naming the size of a forbidden
    substructure, and for graphs with parallel edges (their embeddings are
    not unique enough to be useful here).
    """
    if not g.simple:
        raise InputError("planar_embed expects a simple graph")
    ng = to_networkx(g)
    ok, cert = nx.check_planarity(ng, counterexample=True)
    if not ok:
        raise InputError(
            "graph is not planar; found a forbidden substructure with "
            f"{cert.number_of_edges()} edges"
        )
    rotation: dict[int, tuple[int, ...]] = {}
    for v in g.vertices:
        if ng.degree(v) == 0:
            rotation[v] = ()
            continue
        order = cert.neighbors_cw_order(v)
        rotation[v] = tuple(g.edge_id(v, w) for w in order)
    return Embedding(g, rotation)


# ------------------------------------------------------------------ duals


@dataclass(frozen=True, eq=False)
class DualResult:
    """A planar dual together with its incidence bookkeeping.

    Dual vertex i corresponds to face i of the primal embedding, and dual
    edge e connects the two faces separated by primal edge e (ids line up).
    ``vertices_on_face[i]`` lists the primal vertices on the walk of face i
    in traversal order, deduplicated.
    """

    dual_graph: Graph
    dual_embedding: Embedding
    faces: tuple[tuple[Dart, ...], ...]
    vertices_on_face: tuple[tuple[int, ...], ...]


def planar_dual(g: Graph, emb: Embedding | None = None) -> DualResult:
    """Builds the dual of a connected plane graph.

    Needs a connected bridgeless input: a bridge would produce a loop in the
    dual, which the graph type refuses.  When ``emb`` is omitted the graph is
    embedded first (simple graphs only).
    """
    if not g.is_connected():
        raise InputError("planar_dual needs a connected graph")
    if emb is None:
        emb = planar_embed(g)
    elif emb.graph.vertices != g.vertices or emb.graph.edges != g.edges:
        raise InputError("embedding does not belong to this graph")

    faces = emb.faces()
    face_of_dart: dict[Dart, int] = {}
    for i, orbit in enumerate(faces):
        for d in orbit:
            face_of_dart[d] = i

    dual_edges: list[tuple[int, int]] = []
    for e, (u, v) in enumerate(g.edges):
        left = face_of_dart[(e, u)]
        right = face_of_dart[(e, v)]
        if left == right:
            raise InputError(
                f"edge {e} is a bridge; its dual would be a loop"
            )
        dual_edges.append((left, right))

    dual_graph = Graph(tuple(range(len(faces))), tuple(dual_edges), simple=False)

    # Rotation at dual vertex i: the primal edges in the order the face walk
    # crosses them.  Tracing faces with the region on the left and reading
    # the crossed edges in walk order yields a consistent orientation for
    # the dual map.
    dual_rotation = {
        i: tuple(d[0] for d in orbit) for i, orbit in enumerate(faces)
    }
    dual_embedding = Embedding(dual_graph, dual_rotation)

    verts = []
    for orbit in faces:
        walk = []
        for e, tail in orbit:
            if tail not in walk:
                walk.append(tail)
        verts.append(tuple(walk))
    return DualResult(dual_graph, dual_embedding, faces, tuple(verts))
