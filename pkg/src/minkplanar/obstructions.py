"""Counting obstruction and planar sub-amplification extraction.

Both operations look at a drawing of an amplified graph through its
``EdgeClassMap``.  The obstruction detector searches for two bundles of
double edges, drawn from two different original edges, that cross bundle
against bundle; once both bundles reach size 2k+1 a counting argument
rules out min-k-planarity, and the detector double-checks that verdict
before handing the witness back.  The extractor goes the other way and
tries to salvage a crossing-free sub-amplification.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple, Optional

from .drawings import Drawing, crossing_profile, is_min_k_planar, restrict
from .errors import InputError, MinkplanarError
from .graphs import DoubleEdge, EdgeClassMap

# --------------------------------------------------------------- helpers


def _crossing_pair_set(d: Drawing, check: bool) -> set[tuple[int, int]]:
    prof = crossing_profile(d, check=check)
    return set(prof.per_pair)


def _doubles_cross(crossed: set[tuple[int, int]], da: DoubleEdge, db: DoubleEdge) -> bool:
    """True when any half of one double edge crosses any half of the other."""
    for a in da.halves:
        for b in db.halves:
            if (min(a, b), max(a, b)) in crossed:
                return True
    return False


def _double_self_clean(crossed: set[tuple[int, int]], de: DoubleEdge) -> bool:
    a, b = de.halves
    return (min(a, b), max(a, b)) not in crossed


# ---------------------------------------------------- counting obstruction


def biclique_obstruction(
    d: Drawing,
    k: int,
    classes: EdgeClassMap,
    check: bool = True,
) -> Optional[tuple[tuple[DoubleEdge, ...], tuple[DoubleEdge, ...]]]:
    """Search for the bundle-against-bundle counting obstruction.

    Looks for sets D_1, D_2 of double edges coming from two distinct
    original edges such that |D_1| >= 2k+1, |D_2| >= 2k+1 and every member
    of D_1 crosses every member of D_2.  Any such pair forces some edge
    past k crossings on both sides of a crossing, so the drawing cannot be
    min-k-planar; the routine asserts that conclusion on every witness it
    returns.  Exhaustive over (2k+1)-subsets of each class, which is fine
    for the small multiplicities the gadgets use.

    Returns (D_1, D_2) or None when the rule does not fire.
    """
    if k < 0:
        raise InputError("k must be non-negative")
    crossed = _crossing_pair_set(d, check)
    need = 2 * k + 1
    class_ids = sorted(classes.by_edge)
    for e, f in itertools.combinations(class_ids, 2):
        side_e, side_f = classes.by_edge[e], classes.by_edge[f]
        if len(side_e) < need or len(side_f) < need:
            continue
        for picked in itertools.combinations(side_e, need):
            common = tuple(
                db for db in side_f
                if all(_doubles_cross(crossed, da, db) for da in picked)
            )
            if len(common) >= need:
                ok, _ = is_min_k_planar(d, k, check=False)
                if ok:
                    raise MinkplanarError(
                        "obstruction witness found in a drawing that still "
                        "verifies as min-{}-planar".format(k)
                    )
                return picked, common
    return None


# ------------------------------------------- planar sub-amplification


class PlanarExtraction(NamedTuple):
    """A crossing-free choice of double edges plus the induced sub-drawing."""

    drawing: Drawing
    edge_map: dict[int, int]
    chosen: dict[int, tuple[DoubleEdge, ...]]


def extract_planar_amplification(
    d: Drawing,
    classes: EdgeClassMap,
    w: int,
    check: bool = True,
) -> Optional[PlanarExtraction]:
    """Pick w double edges per class so that no two chosen ones cross.

    Backtracking over the classes, exhaustive: a None answer proves that no
    such selection exists in this drawing.  Chosen double edges must be
    crossing-free internally (their two halves), within a class and across
    classes; crossings with kept (non-amplified) edges are allowed and
    survive into the restricted drawing.
    """
    if w < 0:
        raise InputError("w must be non-negative")
    if check:
        d.require_valid()
    t = classes.t
    if w > t:
        raise InputError(f"cannot pick {w} copies out of {t}")
    crossed = _crossing_pair_set(d, check=False)

    class_ids = sorted(classes.by_edge)
    candidates: list[list[DoubleEdge]] = []
    for e in class_ids:
        pool = [de for de in classes.by_edge[e] if _double_self_clean(crossed, de)]
        if len(pool) < w:
            return None
        candidates.append(pool)
    # fewest options first keeps the dead ends short
    order = sorted(range(len(class_ids)), key=lambda i: len(candidates[i]))

    chosen: dict[int, tuple[DoubleEdge, ...]] = {}
    flat: list[DoubleEdge] = []

    def compatible(group: tuple[DoubleEdge, ...]) -> bool:
        for i, da in enumerate(group):
            for db in group[i + 1:]:
                if _doubles_cross(crossed, da, db):
                    return False
            for db in flat:
                if _doubles_cross(crossed, da, db):
                    return False
        return True

    # explicit stack: a frame's worth of recursion per class would blow
    # the interpreter limit on big amplifications (hundreds of classes)
    pending: list = [None] * len(order)
    pos = 0
    while 0 <= pos < len(order):
        if pending[pos] is None:
            pending[pos] = itertools.combinations(candidates[order[pos]], w)
        e = class_ids[order[pos]]
        for group in pending[pos]:
            if not compatible(group):
                continue
            chosen[e] = group
            flat.extend(group)
            pos += 1
            break
        else:
            pending[pos] = None
            pos -= 1
            if pos >= 0:
                prev = class_ids[order[pos]]
                if w:
                    del flat[len(flat) - w:]
                del chosen[prev]
    if pos < 0:
        return None

    keep = sorted(classes.kept_edge_map.values())
    for group in chosen.values():
        for de in group:
            keep.extend(de.halves)
    sub, edge_map = restrict(d, sorted(keep), check=False)
    return PlanarExtraction(sub, edge_map, dict(sorted(chosen.items())))
