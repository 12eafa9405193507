"""Rotation systems, face tracing and planar dual tests."""

import random

import pytest

from minkplanar.errors import InputError
from minkplanar.graphs import Graph, graphs_isomorphic
from minkplanar.embeddings import (
    Embedding,
    planar_dual,
    planar_embed,
    planarity_test,
)


def cycle(n, offset=0):
    vs = tuple(range(offset, offset + n))
    es = tuple((offset + i, offset + (i + 1) % n) for i in range(n))
    return Graph(vs, es)


def complete(n):
    vs = tuple(range(n))
    es = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return Graph(vs, es)


def double_wheel(d):
    """Cycle of length d plus two hubs adjacent to every rim vertex."""
    rim = list(range(d))
    w1, w2 = d, d + 1
    es = [(i, (i + 1) % d) for i in range(d)]
    es += [(w1, i) for i in rim]
    es += [(w2, i) for i in rim]
    return Graph(tuple(rim + [w1, w2]), tuple(es))


# --------------------------------------------------------- planarity test


def test_planarity_small_graphs():
    assert planarity_test(complete(4))
    assert not planarity_test(complete(5))
    k33 = Graph(tuple(range(6)), tuple((i, 3 + j) for i in range(3) for j in range(3)))
    assert not planarity_test(k33)


def test_double_wheel_is_planar():
    # one hub inside the rim, the other outside
    g = double_wheel(15)
    assert g.n == 17 and g.m == 45
    assert planarity_test(g)
    emb = planar_embed(g)
    assert emb.euler_ok()
    # all faces of the embedded double wheel are triangles
    assert sorted(len(f) for f in emb.faces()) == [3] * 30


def test_planar_embed_rejects_nonplanar():
    with pytest.raises(InputError):
        planar_embed(complete(5))


# ----------------------------------------------------------- face tracing


def test_triangle_faces():
    g = cycle(3)
    # explicit clockwise rotations for a triangle drawn with 0 on top,
    # 1 lower right, 2 lower left
    emb = Embedding(g, {0: (0, 2), 1: (1, 0), 2: (2, 1)})
    faces = emb.faces()
    assert len(faces) == 2
    assert sorted(len(f) for f in faces) == [3, 3]
    # every dart shows up exactly once
    darts = [d for f in faces for d in f]
    assert len(darts) == 6 and len(set(darts)) == 6
    assert emb.euler_ok()


def test_face_convention_left_of_dart():
    # With the rotations above, going 0 -> 1 along edge 0 keeps the inside
    # of the triangle on the left; its orbit is the inner counterclockwise
    # walk 0 -> 1 -> 2 -> 0.
    g = cycle(3)
    emb = Embedding(g, {0: (0, 2), 1: (1, 0), 2: (2, 1)})
    orbit = [(0, 0)]
    d = emb.phi(orbit[0])
    while d != orbit[0]:
        orbit.append(d)
        d = emb.phi(d)
    assert orbit == [(0, 0), (1, 1), (2, 2)]


def test_k4_embedding_counts():
    emb = planar_embed(complete(4))
    assert len(emb.faces()) == 4
    assert all(len(f) == 3 for f in emb.faces())
    assert emb.euler_ok()


def test_isolated_vertices_euler():
    g = Graph((0, 1, 2, 3), ((0, 1),))
    emb = Embedding(g, {0: (0,), 1: (0,), 2: (), 3: ()})
    assert emb.face_count() == 3
    assert emb.euler_ok()


def test_embedding_rejects_bad_rotation():
    g = cycle(3)
    with pytest.raises(InputError):
        Embedding(g, {0: (0,), 1: (1, 0), 2: (2, 1)})
    with pytest.raises(InputError):
        Embedding(g, {0: (0, 2), 1: (1, 0), 2: (2, 1), 9: ()})


def test_random_planar_embeddings_satisfy_euler():
    import networkx as nx

    rng = random.Random(7)
    done = 0
    while done < 15:
        n = rng.randrange(4, 10)
        p = rng.uniform(0.2, 0.5)
        ng = nx.gnp_random_graph(n, p, seed=rng.randrange(10**6))
        if not nx.check_planarity(ng)[0]:
            continue
        g = Graph(tuple(sorted(ng.nodes)), tuple(ng.edges))
        emb = planar_embed(g)
        assert emb.euler_ok()
        done += 1


# ------------------------------------------------------------------ duals


def test_cycle_dual_is_a_dipole():
    # the dual of an embedded n-cycle: two faces joined by n parallel edges
    res = planar_dual(cycle(5))
    assert res.dual_graph.n == 2
    assert res.dual_graph.m == 5
    assert all(sorted(e) == [0, 1] for e in res.dual_graph.edges)
    assert res.dual_embedding.euler_ok()
    assert all(sorted(vs) == [0, 1, 2, 3, 4] for vs in res.vertices_on_face)


def test_k4_is_self_dual():
    res = planar_dual(complete(4))
    assert res.dual_graph.n == 4
    assert res.dual_graph.m == 6
    # underlying simple graph of the dual is K4 again
    import networkx as nx

    simple = nx.Graph(res.dual_graph.edges)
    assert nx.is_isomorphic(simple, nx.complete_graph(4))
    assert res.dual_embedding.euler_ok()


def test_double_dual_returns_to_start():
    g = complete(4)
    first = planar_dual(g)
    second = planar_dual(first.dual_graph, first.dual_embedding)
    assert graphs_isomorphic(
        Graph(second.dual_graph.vertices, second.dual_graph.edges, simple=False),
        Graph(g.vertices, g.edges, simple=False),
    )


def test_dual_ids_line_up_with_primal_edges():
    g = complete(4)
    emb = planar_embed(g)
    res = planar_dual(g, emb)
    face_of = {}
    for i, orbit in enumerate(res.faces):
        for d in orbit:
            face_of[d] = i
    for e, (u, v) in enumerate(g.edges):
        left, right = face_of[(e, u)], face_of[(e, v)]
        assert sorted(res.dual_graph.edges[e]) == sorted((left, right))


def test_dual_rejects_bridge_and_disconnection():
    path = Graph((0, 1, 2), ((0, 1), (1, 2)))
    with pytest.raises(InputError):
        planar_dual(path)
    two_triangles = Graph(
        tuple(range(6)),
        ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)),
    )
    with pytest.raises(InputError):
        planar_dual(two_triangles)
