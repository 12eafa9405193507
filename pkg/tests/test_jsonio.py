"""Serialization round trips and the pointered rejection paths."""

import json

import pytest

from minkplanar.constructions import build_G2, build_Gk
from minkplanar.drawings import drawings_equal, validate
from minkplanar.errors import InputError
from minkplanar.frames import build_frame, compose
from minkplanar.graphs import AnchoredGraph, Graph
from minkplanar.jsonio import (
    RunReport,
    drawing_from_json,
    drawing_to_json,
    graph_from_json,
    graph_to_json,
    outcome_from_json,
    outcome_to_json,
)
from minkplanar.search import SearchOutcome, SearchStats, Status


def _wire(doc):
    # force an honest trip through actual JSON text
    return json.loads(json.dumps(doc))


# ------------------------------------------------------------ round trips


def test_graph_round_trip_plain_and_anchored():
    g = Graph((0, 1, 2, 5), ((0, 1), (1, 2), (2, 5), (0, 5)))
    assert graph_from_json(_wire(graph_to_json(g))) == g

    ag = AnchoredGraph(g, (5, 0, 2))
    back = graph_from_json(_wire(graph_to_json(ag)))
    assert isinstance(back, AnchoredGraph)
    assert back == ag
    assert back.anchors == (5, 0, 2)  # order carried, not sorted


def test_drawing_round_trip_all_bundles():
    seen = []
    for bundle in (build_G2(), build_Gk(3), build_Gk(4)):
        doc = _wire(drawing_to_json(bundle.drawing))
        back = drawing_from_json(doc)
        assert validate(back) == []
        assert drawings_equal(back, bundle.drawing)
        assert back.anchors == bundle.drawing.anchors
        seen.append(doc)
    assert all("outer_face" in doc for doc in seen)


def test_frame_and_composed_round_trip():
    src = build_G2()
    fr = build_frame(src.anchored_graph, 2, t=1)
    back = drawing_from_json(_wire(drawing_to_json(fr.drawing)))
    assert drawings_equal(back, fr.drawing)

    comp = compose(fr, src)
    assert not comp.graph.simple
    comp_back = drawing_from_json(_wire(drawing_to_json(comp)))
    assert drawings_equal(comp_back, comp)
    assert not comp_back.graph.simple
    assert comp_back.anchors is None


def test_multigraph_flag_survives_even_without_parallels():
    g = Graph((0, 1, 2), ((0, 1), (1, 2)), simple=False)
    doc = graph_to_json(g)
    assert doc["multigraph"] is True
    assert graph_from_json(_wire(doc)).simple is False


def test_outcome_round_trip_with_and_without_certificate():
    d = build_G2().drawing
    found = SearchOutcome(
        Status.FOUND, d, SearchStats(nodes=11, routes=4, max_depth=3, seconds=0.25)
    )
    f2 = outcome_from_json(_wire(outcome_to_json(found)))
    assert f2.status is Status.FOUND
    assert f2.stats == found.stats
    assert drawings_equal(f2.certificate, d)

    unsat = SearchOutcome(Status.EXHAUSTED_UNSAT, None, SearchStats(nodes=5))
    u2 = outcome_from_json(_wire(outcome_to_json(unsat)))
    assert u2.status is Status.EXHAUSTED_UNSAT
    assert u2.certificate is None


# ------------------------------------------------------------- rejections


def test_anchor_not_in_vertices_rejected():
    doc = {"vertices": [0, 1, 2], "edges": [[0, 1]], "anchors": [0, 7]}
    with pytest.raises(InputError) as err:
        graph_from_json(doc)
    assert str(err.value).startswith("/anchors/1")


def test_bad_endpoint_and_loop_and_parallel():
    with pytest.raises(InputError, match=r"^/edges/1"):
        graph_from_json({"vertices": [0, 1], "edges": [[0, 1], [0, 9]]})
    with pytest.raises(InputError, match=r"^/edges/0"):
        graph_from_json({"vertices": [0], "edges": [[0, 0]]})
    with pytest.raises(InputError, match=r"^/edges/2.*parallel"):
        graph_from_json(
            {"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2], [1, 0]]}
        )
    # the multigraph marker lifts the last restriction
    g = graph_from_json(
        {
            "vertices": [0, 1, 2],
            "edges": [[0, 1], [1, 2], [1, 0]],
            "multigraph": True,
        }
    )
    assert g.m == 3


def test_degree_three_crossing_rejected_with_pointer():
    doc = drawing_to_json(build_G2().drawing)
    xid = doc["crossings"][0]["id"]
    # thread a third chain through an existing crossing node
    victim = next(
        e for e, ch in doc["chains"].items() if xid not in ch
    )
    ch = doc["chains"][victim]
    doc["chains"][victim] = [ch[0], xid] + ch[1:]
    with pytest.raises(InputError) as err:
        drawing_from_json(_wire(doc))
    msg = str(err.value)
    assert msg.startswith("/crossings") or msg.startswith("/chains")


def test_schema_violation_carries_a_pointer():
    with pytest.raises(InputError, match=r"^/edges/0"):
        graph_from_json({"vertices": [0, 1], "edges": [[0, 1, 2]]})
    with pytest.raises(InputError, match=r"^/"):
        drawing_from_json({"graph": {"vertices": [], "edges": []}})


def test_outcome_bad_status():
    with pytest.raises(InputError, match=r"^/status"):
        outcome_from_json({"status": "Maybe", "stats": {}})


# ---------------------------------------------------------------- reports


def test_run_report_shape():
    rep = RunReport(
        command="validate",
        inputs={"drawing": "abc123"},
        parameters={"min_k": 2},
        outcome="ok",
        stats={"crossings": 9},
        version="0.1.0",
    )
    doc = _wire(rep.to_json())
    assert set(doc) == {
        "command",
        "inputs",
        "parameters",
        "outcome",
        "stats",
        "version",
    }
    assert doc["parameters"]["min_k"] == 2
