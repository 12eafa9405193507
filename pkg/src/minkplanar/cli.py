"""Command line front end.

Subcommands cover generating the bundled counterexample drawings,
validating and profiling drawing files, the min-1 simplifier, the
anchored existence search, frame building and gluing, SVG rendering,
and canned reproduction pipelines.

Exit codes: 0 when the command succeeded and every checked property
holds (for searches: a drawing was found), 1 when a checked property
fails or a search exhausted its space without finding anything, 2 when
a search stopped on budget, 3 for unusable input or bad usage.

Every invocation emits exactly one JSON run report on stderr, or to the
file named by --report.  The report carries the command name, sha256
digests of the input files, the effective parameters, an outcome string,
timing and size stats, and the tool version.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import asdict
from os import environ
from typing import Any, Optional

from . import __version__
from .constructions import build_G2, build_Gk
from .drawings import (
    adjacent_crossing_pairs,
    crossing_profile,
    is_k_planar,
    is_min_k_planar,
    is_simple,
    validate,
)
from .errors import InputError, MinkplanarError
from .frames import build_frame, compose, separation_property_check
from .graphs import AnchoredGraph
from .jsonio import (
    RunReport,
    drawing_from_json,
    drawing_to_json,
    graph_from_json,
    graph_to_json,
    outcome_to_json,
)
from .layout import audit_layout, to_svg, tutte_layout
from .sampling import random_min1_drawing
from .search import (
    Budget,
    Status,
    explore_open_question,
    search_anchored,
    verify_certificate,
)
from .simplify import simplify_min1

_STATUS_EXIT = {
    Status.FOUND: 0,
    Status.EXHAUSTED_UNSAT: 1,
    Status.BUDGET_EXCEEDED: 2,
}

THREADS_VAR = "MINKPLANAR_THREADS"


def _default_threads() -> int:
    try:
        return max(1, int(environ.get(THREADS_VAR, "1")))
    except ValueError:
        return 1


# --------------------------------------------------------------- plumbing


class _Parser(argparse.ArgumentParser):
    """argparse, but usage problems exit 3 instead of 2.

    Exit code 2 is reserved for searches that hit their budget, so the
    stock argparse convention would collide with it.
    """

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(3)


def _read_json(path: str, rep: RunReport) -> Any:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror or err}")
    rep.inputs[path] = hashlib.sha256(data).hexdigest()
    try:
        return json.loads(data)
    except json.JSONDecodeError as err:
        raise InputError(f"{path} is not JSON: {err}")


def _load_drawing(path: str, rep: RunReport):
    return drawing_from_json(_read_json(path, rep))


def _load_anchored(path: str, rep: RunReport, why: str) -> AnchoredGraph:
    g = graph_from_json(_read_json(path, rep))
    if not isinstance(g, AnchoredGraph):
        raise InputError(f"/anchors: {why} needs a graph with anchors")
    return g


def _emit(doc: Any, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=1, sort_keys=True)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _write_pack(prefix: str, graph_doc: dict, drawing_doc: dict,
                provenance: dict, rep: RunReport) -> None:
    """gen, frame and compose all produce the same three files."""
    written = []
    for tag, doc in (("graph", graph_doc), ("drawing", drawing_doc),
                     ("provenance", provenance)):
        path = f"{prefix}.{tag}.json"
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
            fh.write("\n")
        written.append(path)
    rep.stats["written"] = written


def _budget(args) -> Optional[Budget]:
    nodes = getattr(args, "budget_nodes", None)
    secs = getattr(args, "budget_secs", None)
    if nodes is None and secs is None:
        return None
    return Budget(nodes=nodes, seconds=secs)


def _source_bundle(k: int):
    if k < 2:
        raise InputError("no bundled source family below k = 2")
    return build_G2() if k == 2 else build_Gk(k)


# ------------------------------------------------------------- commands


def cmd_gen(args, rep: RunReport) -> int:
    if args.family == "gk" and args.k is None:
        raise InputError("gen gk needs --k")
    k = 2 if args.family == "g2" else args.k
    rep.parameters.update({"family": args.family, "k": k})
    bundle = _source_bundle(k) if args.family == "gk" else build_G2()

    prof = crossing_profile(bundle.drawing, check=False)
    g = bundle.anchored_graph
    rep.stats.update({
        "vertices": g.graph.n,
        "edges": g.graph.m,
        "anchors": len(g.anchors),
        "crossings": prof.total,
    })
    provenance = {
        "family": args.family,
        "k": k,
        "claimed_min_k": bundle.claimed_min_k,
        "claimed_simple": bundle.claimed_simple,
        "claimed_adjacency_free": bundle.claimed_adjacency_free,
    }
    ddoc = drawing_to_json(bundle.drawing)
    if args.out:
        _write_pack(args.out, graph_to_json(g), ddoc, provenance, rep)
    else:
        _emit(ddoc, None)
    rep.outcome = "ok"
    return 0


def cmd_validate(args, rep: RunReport) -> int:
    d = _load_drawing(args.drawing, rep)
    rep.parameters.update({
        "min_k": args.min_k, "k": args.k, "simple": args.simple,
    })
    verdict: dict[str, Any] = {"valid": True}
    failed = False
    if args.min_k is not None:
        ok, wit = is_min_k_planar(d, args.min_k, check=False)
        verdict["min_k"] = {
            "k": args.min_k,
            "holds": ok,
            "heavy_crossing_pair": None if ok else list(wit),
        }
        failed = failed or not ok
    if args.k is not None:
        ok = is_k_planar(d, args.k, check=False)
        verdict["k_planar"] = {"k": args.k, "holds": ok}
        failed = failed or not ok
    if args.simple:
        ok, wit = is_simple(d, check=False)
        verdict["simple"] = {
            "holds": ok,
            "witness": None if ok else {"pair": list(wit[0]), "reason": wit[1]},
        }
        failed = failed or not ok
    _emit(verdict, args.out)
    rep.outcome = "property-failed" if failed else "ok"
    return 1 if failed else 0


def cmd_profile(args, rep: RunReport) -> int:
    d = _load_drawing(args.drawing, rep)
    rep.parameters.update({"k": args.k})
    prof = crossing_profile(d, check=False)
    doc: dict[str, Any] = {
        "total": prof.total,
        "per_edge": {str(e): c for e, c in sorted(prof.per_edge.items())},
        "per_pair": [
            [e1, e2, c] for (e1, e2), c in sorted(prof.per_pair.items())
        ],
    }
    if args.k is not None:
        doc["heavy"] = list(prof.heavy_edges(args.k))
    _emit(doc, args.out)
    rep.stats["crossings"] = prof.total
    rep.outcome = "ok"
    return 0


def cmd_simplify(args, rep: RunReport) -> int:
    d = _load_drawing(args.drawing, rep)
    trace: list = []
    before = len(d.crossings)
    out = simplify_min1(d, check=False, trace=trace)
    _emit(drawing_to_json(out), args.out)
    rep.stats.update({
        "crossings_before": before,
        "crossings_after": len(out.crossings),
        "swaps": len(trace),
    })
    rep.outcome = "ok"
    return 0


def cmd_search(args, rep: RunReport) -> int:
    g = _load_anchored(args.graph, rep, "the anchored search")
    rep.parameters.update({
        "k": args.k,
        "simple": args.simple,
        "budget_nodes": args.budget_nodes,
        "budget_secs": args.budget_secs,
        "threads": args.threads,
    })
    outcome = search_anchored(
        g, args.k, require_simple=args.simple, budget=_budget(args)
    )
    if outcome.status is Status.FOUND and not verify_certificate(
        outcome, g, args.k, args.simple
    ):
        raise MinkplanarError("search produced an unverifiable certificate")
    _emit(outcome_to_json(outcome), args.out)
    rep.stats.update(asdict(outcome.stats))
    rep.outcome = outcome.status.value
    return _STATUS_EXIT[outcome.status]


def cmd_frame(args, rep: RunReport) -> int:
    g = _load_anchored(args.graph, rep, "the frame builder")
    fr = build_frame(g, args.k, t=args.t)
    p = fr.params
    rep.parameters.update({"k": args.k, "t": p.t})
    prof = crossing_profile(fr.drawing, check=False)
    rep.stats.update({
        "vertices": fr.graph.n,
        "edges": fr.graph.m,
        "crossings": prof.total,
    })
    provenance = dict(p._asdict())
    ddoc = drawing_to_json(fr.drawing)
    if args.out:
        gdoc = graph_to_json(AnchoredGraph(fr.graph, fr.anchors))
        _write_pack(args.out, gdoc, ddoc, provenance, rep)
    else:
        _emit(ddoc, None)
    rep.outcome = "ok"
    return 0


def cmd_compose(args, rep: RunReport) -> int:
    src = _source_bundle(args.k)
    fr = build_frame(src.anchored_graph, src.claimed_min_k, t=args.t)
    comp = compose(fr, src)
    p = fr.params
    rep.parameters.update({"k": args.k, "t": p.t})
    prof = crossing_profile(comp, check=False)
    rep.stats.update({
        "vertices": comp.graph.n,
        "edges": comp.graph.m,
        "crossings": prof.total,
    })
    provenance = dict(p._asdict())
    provenance["source_family"] = "g2" if args.k == 2 else f"gk{args.k}"
    provenance["source_min_k"] = src.claimed_min_k
    ddoc = drawing_to_json(comp)
    if args.out:
        _write_pack(args.out, graph_to_json(comp.graph), ddoc, provenance, rep)
    else:
        _emit(ddoc, None)
    rep.outcome = "ok"
    return 0


def cmd_render(args, rep: RunReport) -> int:
    d = _load_drawing(args.drawing, rep)
    rep.parameters.update({"k": args.k, "audit": args.audit})
    layout = tutte_layout(d)
    if args.audit:
        audit_layout(d, layout)
    svg = to_svg(d, layout, k=args.k)
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(svg)
    rep.stats.update({
        "nodes": len(layout.coordinates),
        "residual": layout.residual,
        "written": [args.svg],
    })
    rep.outcome = "ok"
    return 0


# ---------------------------------------------------------- repro suite


def _finish_repro(name: str, checks: list[tuple[str, bool]], args,
                  rep: RunReport, extra: Optional[dict] = None) -> int:
    confirmed = all(ok for _, ok in checks)
    doc: dict[str, Any] = {
        "pipeline": name,
        "checks": [{"check": c, "ok": ok} for c, ok in checks],
        "confirmed": confirmed,
    }
    if extra:
        doc.update(extra)
    _emit(doc, args.out)
    rep.outcome = "confirmed" if confirmed else "refuted"
    return 0 if confirmed else 1


def _repro_lemma3_g2(args, rep: RunReport) -> int:
    b = build_G2()
    checks = [("drawing-valid", validate(b.drawing) == [])]
    ok, _ = is_min_k_planar(b.drawing, 2, check=False)
    checks.append(("min-2-planar", ok))
    simp, wit = is_simple(b.drawing, check=False)
    checks.append(("not-simple", not simp))
    want = {b.edge("a1a2"), b.edge("b1a2")}
    checks.append(
        ("offender-is-a1a2-b1a2", (not simp) and set(wit[0]) == want)
    )
    outcome = search_anchored(
        b.anchored_graph, 2, require_simple=True, budget=_budget(args)
    )
    rep.stats.update(asdict(outcome.stats))
    if outcome.status is Status.BUDGET_EXCEEDED:
        _finish_repro("lemma3-g2", checks, args, rep,
                      {"search": outcome.status.value})
        return 2
    checks.append(
        ("no-simple-anchored-min-2", outcome.status is Status.EXHAUSTED_UNSAT)
    )
    return _finish_repro("lemma3-g2", checks, args, rep,
                         {"search": outcome.status.value})


def _repro_lemma3_gk(args, rep: RunReport) -> int:
    k = args.k if args.k is not None else 4
    b = build_Gk(k)
    names = b.edge_names
    m1 = sum(1 for n in names if n.startswith("m1_"))
    m2 = sum(1 for n in names if n.startswith("m2_"))
    m3 = sum(1 for n in names if n.startswith("m3_")) + ("b1b2" in names)
    checks = [("drawing-valid", validate(b.drawing) == [])]
    ok, _ = is_min_k_planar(b.drawing, b.claimed_min_k, check=False)
    checks.append((f"min-{b.claimed_min_k}-planar", ok))
    checks.append(("side-matchings-k-plus-1", m1 == k + 1 and m2 == k + 1))
    checks.append(("top-matching-k", m3 == k))
    checks.append(
        ("no-adjacent-pair-crosses",
         adjacent_crossing_pairs(b.drawing, check=False) == [])
    )
    return _finish_repro("lemma3-gk", checks, args, rep, {"k": k})


def _repro_lemma5_frame(args, rep: RunReport) -> int:
    k = args.k if args.k is not None else 2
    if args.graph:
        g = _load_anchored(args.graph, rep, "the frame builder")
    else:
        g = build_G2().anchored_graph
    fr = build_frame(g, k, t=args.t)
    p = fr.params
    prof = crossing_profile(fr.drawing, check=False)
    checks = [("drawing-valid", validate(fr.drawing) == [])]
    checks.append(("anchored", fr.drawing.anchored))
    checks.append(("simple", is_simple(fr.drawing, check=False)[0]))
    ok, _ = is_min_k_planar(fr.drawing, 1, check=False)
    checks.append(("min-1-planar", ok))
    checks.append(("web-separates-wheel", separation_property_check(fr)))
    checks.append(
        ("each-wheel-edge-crossed-t-times",
         all(prof.per_edge[e] == p.t for e in fr.core_edges))
    )
    checks.append(("vertex-count", fr.graph.n == 1 + 3 * p.d + p.a + 9 * p.d * p.t))
    checks.append(("edge-count", fr.graph.m == 3 * p.d + 18 * p.d * p.t))
    checks.append(("crossing-count", prof.total == 3 * p.d * p.t))
    rep.stats.update({"crossings": prof.total, "d": p.d})
    return _finish_repro("lemma5-frame", checks, args, rep,
                         {"params": dict(p._asdict())})


def _repro_thm1_compose(args, rep: RunReport) -> int:
    k = args.k if args.k is not None else 2
    src = _source_bundle(k)
    mk = src.claimed_min_k
    fr = build_frame(src.anchored_graph, mk, t=args.t)
    comp = compose(fr, src)
    prof = crossing_profile(comp, check=False)
    heavy = set(prof.heavy_edges(mk))
    clash = [
        p for p in prof.per_pair if p[0] in heavy and p[1] in heavy
    ]
    checks = [("drawing-valid", validate(comp) == [])]
    ok, _ = is_min_k_planar(comp, mk, check=False)
    checks.append((f"min-{mk}-planar", ok))
    checks.append(("no-heavy-heavy-crossing", clash == []))
    checks.append(
        ("crossings-additive",
         prof.total
         == len(fr.drawing.crossings) + len(src.drawing.crossings))
    )
    rep.stats.update({"crossings": prof.total, "heavy_edges": len(heavy)})
    return _finish_repro("thm1-compose", checks, args, rep,
                         {"k": k, "source_min_k": mk,
                          "params": dict(fr.params._asdict())})


def _repro_prop2_simplify(args, rep: RunReport) -> int:
    count = args.count if args.count is not None else 200
    rng = random.Random(args.seed if args.seed is not None else 0)
    produced = 0
    clean = True
    monotone = True
    for _ in range(count):
        d = random_min1_drawing(rng)
        trace: list = []
        s = simplify_min1(d, check=False, trace=trace)
        sizes = [len(step) for step in trace] + [0]
        monotone = monotone and all(
            a > b for a, b in zip(sizes, sizes[1:])
        )
        ok_simple, _ = is_simple(s, check=False)
        ok_min1, _ = is_min_k_planar(s, 1, check=False)
        clean = clean and (
            validate(s) == []
            and ok_simple
            and ok_min1
            and s.graph == d.graph
        )
        produced += 1
    checks = [
        ("outputs-valid-simple-min-1", clean),
        ("violating-pairs-strictly-decrease", monotone),
    ]
    rep.stats.update({"drawings": produced})
    return _finish_repro("prop2-simplify", checks, args, rep,
                         {"drawings": produced})


def _repro_open_question(args, rep: RunReport) -> int:
    outcome = explore_open_question(budget=_budget(args))
    rep.stats.update(asdict(outcome.stats))
    rep.outcome = outcome.status.value
    doc: dict[str, Any] = {
        "pipeline": "open-question",
        "question": "does the 20-vertex counterexample admit a simple "
                    "anchored drawing at k = 3",
        "outcome": outcome_to_json(outcome),
    }
    if outcome.status is Status.FOUND:
        g = build_G2().anchored_graph
        if not verify_certificate(outcome, g, 3, True):
            raise MinkplanarError("open-question certificate failed checks")
        doc["answer"] = "yes"
        doc["certificate_crossings"] = len(outcome.certificate.crossings)
    elif outcome.status is Status.EXHAUSTED_UNSAT:
        doc["answer"] = "no"
    else:
        doc["answer"] = "undecided within budget"
    _emit(doc, args.out)
    return _STATUS_EXIT[outcome.status]


_REPROS = {
    "lemma3-g2": _repro_lemma3_g2,
    "lemma3-gk": _repro_lemma3_gk,
    "lemma5-frame": _repro_lemma5_frame,
    "thm1-compose": _repro_thm1_compose,
    "prop2-simplify": _repro_prop2_simplify,
    "open-question": _repro_open_question,
}


def cmd_repro(args, rep: RunReport) -> int:
    rep.parameters.update({
        "pipeline": args.pipeline, "k": args.k, "t": args.t,
        "seed": args.seed, "count": args.count,
        "budget_nodes": args.budget_nodes, "budget_secs": args.budget_secs,
    })
    return _REPROS[args.pipeline](args, rep)


# ------------------------------------------------------------ the parser


def _build_parser() -> _Parser:
    p = _Parser(
        prog="minkplanar",
        description="build, check, search, and draw min-k-planar drawings",
    )
    p.add_argument("--version", action="version",
                   version=f"%(prog)s {__version__}")

    common = _Parser(add_help=False)
    common.add_argument("--report", metavar="FILE",
                        help="write the run report here instead of stderr")
    common.add_argument("--out", metavar="PATH",
                        help="output file, or file prefix for commands "
                             "that write a graph/drawing/provenance pack")

    sub = p.add_subparsers(dest="cmd", metavar="command", parser_class=_Parser)
    sub.required = True

    sp = sub.add_parser("gen", parents=[common],
                        help="emit a bundled counterexample drawing")
    sp.add_argument("family", choices=["g2", "gk"])
    sp.add_argument("--k", type=int, help="family parameter (gk only, >= 3)")
    sp.set_defaults(fn=cmd_gen)

    sp = sub.add_parser("validate", parents=[common],
                        help="check properties of a drawing file")
    sp.add_argument("--drawing", required=True, metavar="FILE")
    sp.add_argument("--min-k", dest="min_k", type=int, metavar="K")
    sp.add_argument("--k", type=int, metavar="K",
                    help="check the per-edge crossing cap")
    sp.add_argument("--simple", action="store_true")
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("profile", parents=[common],
                        help="per-edge and per-pair crossing counts")
    sp.add_argument("--drawing", required=True, metavar="FILE")
    sp.add_argument("--k", type=int, metavar="K",
                    help="also list edges with more than K crossings")
    sp.set_defaults(fn=cmd_profile)

    sp = sub.add_parser("simplify", parents=[common],
                        help="remove crossings between dependent edge pairs")
    sp.add_argument("--drawing", required=True, metavar="FILE")
    sp.set_defaults(fn=cmd_simplify)

    sp = sub.add_parser("search", parents=[common],
                        help="decide anchored drawing existence")
    sp.add_argument("--graph", required=True, metavar="FILE")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--simple", action="store_true",
                    help="restrict to simple drawings")
    sp.add_argument("--budget-nodes", type=int, metavar="N")
    sp.add_argument("--budget-secs", type=float, metavar="S")
    sp.add_argument("--threads", type=int, default=_default_threads(),
                    metavar="T",
                    help=f"worker count (default ${THREADS_VAR} or 1)")
    sp.set_defaults(fn=cmd_search)

    sp = sub.add_parser("frame", parents=[common],
                        help="build the caged-wheel frame for a graph")
    sp.add_argument("--graph", required=True, metavar="FILE",
                    help="anchored graph JSON")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int, help="amplification copies per web "
                                          "class (default 2k+2)")
    sp.set_defaults(fn=cmd_frame)

    sp = sub.add_parser("compose", parents=[common],
                        help="glue a bundled counterexample into its frame")
    sp.add_argument("--k", type=int, default=2,
                    help="source family: 2 for the 20-vertex graph, "
                         ">= 3 for the parametric one")
    sp.add_argument("--t", type=int)
    sp.set_defaults(fn=cmd_compose)

    sp = sub.add_parser("render", parents=[common],
                        help="draw a drawing file to SVG")
    sp.add_argument("--drawing", required=True, metavar="FILE")
    sp.add_argument("--svg", required=True, metavar="FILE")
    sp.add_argument("--k", type=int, metavar="K",
                    help="highlight edges with more than K crossings")
    sp.add_argument("--audit", action="store_true",
                    help="re-derive the drawing from the coordinates first")
    sp.set_defaults(fn=cmd_render)

    sp = sub.add_parser("repro", parents=[common],
                        help="run a canned reproduction pipeline")
    sp.add_argument("pipeline", choices=sorted(_REPROS))
    sp.add_argument("--k", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--graph", metavar="FILE",
                    help="alternate source graph for lemma5-frame")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--count", type=int,
                    help="sample size for prop2-simplify")
    sp.add_argument("--budget-nodes", type=int, metavar="N")
    sp.add_argument("--budget-secs", type=float, metavar="S")
    sp.add_argument("--threads", type=int, default=_default_threads(),
                    metavar="T")
    sp.set_defaults(fn=cmd_repro)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code or 0)

    rep = RunReport(command=args.cmd, version=__version__)
    t0 = time.perf_counter()
    try:
        code = args.fn(args, rep)
    except InputError as err:
        print(f"minkplanar: error: {err}", file=sys.stderr)
        rep.outcome = f"input-error: {err}"
        code = 3
    except MinkplanarError as err:
        print(f"minkplanar: error: {err}", file=sys.stderr)
        rep.outcome = f"failed: {err}"
        code = 1
    rep.stats.setdefault("seconds", round(time.perf_counter() - t0, 3))

    text = json.dumps(rep.to_json(), sort_keys=True)
    report_to = getattr(args, "report", None)
    if report_to:
        with open(report_to, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
