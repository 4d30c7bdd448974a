"""Diagonal separation families and the star separation property.

The families that witness a countable diagonal for the duplicate space are
indexed by a positive threshold ``p``: the set anchored at a point ``(u, i)``
collects the members below ``u`` whose descent floor value stays at or above
``p``, signed by descent parity. Raising the threshold shrinks every set,
and for any two distinct points some threshold kicks both out of every set
simultaneously.

The star property asks less: a sequence of families of sets such that every
pair of points finds one family that touches the pair while no single set
of that family grabs both. The diagonal families give such a sequence, and
adjoining the single all-points family extends it over a point at infinity.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .descent import ell, p_value
from .errors import EqualPoints
from .report import SuiteReport
from .topology import SIGNS, BasicOpen, Point, interval_nodes, members
from .tree import ROOT, Fragment, canonical_key, precedes, strictly_precedes


@dataclass(frozen=True)
class VSet:
    """Separation set anchored at ``(u, i)`` with threshold ``p >= 1``."""

    u: tuple
    i: int
    p: int

    def __post_init__(self):
        if self.i not in SIGNS:
            raise ValueError(f"sign must be +1 or -1, got {self.i}")
        if self.p < 1:
            raise ValueError(f"threshold must be at least 1, got {self.p}")


class _Infinity:
    """Marker for the extra point of the one-point extension. Singleton."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinity"


INFINITY = _Infinity()


@dataclass(frozen=True)
class StarSequence:
    """Indexed families of point sets checked against the star conditions."""

    families: tuple  # tuple of families; each family is a tuple of frozensets


def v_contains(v: VSet, point: Point) -> bool:
    t = point.node
    if not precedes(t, v.u):
        return False
    if p_value(t, v.u) < v.p:
        return False
    return point.sign == (-v.i if ell(t, v.u) % 2 else v.i)


def v_members(v: VSet, frag: Fragment | None = None) -> set:
    """Members of the separation set: signed initial segments of ``u`` whose
    descent floor meets the threshold. The anchor point always qualifies."""
    if frag is not None and v.u not in frag:
        raise ValueError(f"anchor node {v.u!r} is not in the fragment")
    out = set()
    for k in range(len(v.u) + 1):
        t = v.u[:k]
        if p_value(t, v.u) >= v.p:
            out.add(Point(t, -v.i if ell(t, v.u) % 2 else v.i))
    return out


def separating_threshold(p1: Point, p2: Point) -> int:
    """Least threshold from which no separation set contains both points.

    Points over the same node differ in sign, and the sign over a node is a
    function of the anchor, so they never share a set: threshold 1. The
    same holds for incomparable nodes, which cannot both sit below one
    anchor. For comparable nodes the best any anchor extending the longer
    node can offer the shorter one is its descent floor toward the longer
    node, and a one-value extension of the longer node realises that floor
    with either sign pattern; the least separating threshold is that floor
    plus one.
    """
    if p1 == p2:
        raise EqualPoints(f"identical points {p1!r}")
    a, b = p1.node, p2.node
    if a == b:
        return 1
    if strictly_precedes(a, b):
        lo, hi = a, b
    elif strictly_precedes(b, a):
        lo, hi = b, a
    else:
        return 1
    return p_value(lo, hi) + 1


def _open_neighbourhood_inside(point: Point, inside, frag: Fragment) -> BasicOpen | None:
    """Widest basic open around ``point`` whose in-fragment members satisfy
    ``inside``; falls back toward the immediate predecessor."""
    t = point.node
    for length in range(-1, len(t)):
        r = ROOT if length < 0 else t[:length]
        w = BasicOpen(r, t, point.sign)
        if all(inside(q) for q in members(w, frag)):
            return w
    return None


def verify_gdelta(frag: Fragment, p_max: int, contains_fn=None) -> SuiteReport:
    """Exhaustive desk-scale check of the countable-diagonal mechanism.

    For every pair of distinct points, every separation set at that pair's
    separating threshold is confirmed to miss at least one of the two; and
    every separation set with threshold up to ``p_max`` is confirmed open
    relative to the fragment, by exhibiting a basic neighbourhood of each
    member inside it. ``contains_fn`` replaces the membership rule, which
    lets tests exercise broken variants.
    """
    start = time.perf_counter()
    fn = contains_fn or v_contains
    report = SuiteReport(suite="gdelta", params=frag.params() | {"p_max": p_max})
    pts = [Point(n, i) for n in frag.sorted_nodes for i in SIGNS]

    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            p1, p2 = pts[a], pts[b]
            threshold = separating_threshold(p1, p2)
            if threshold > p_max:
                report.failures.append(
                    {
                        "kind": "threshold_above_p_max",
                        "pair": [_point_json(p1), _point_json(p2)],
                        "threshold": threshold,
                    }
                )
                continue
            for u in frag.sorted_nodes:
                for i in SIGNS:
                    v = VSet(u, i, threshold)
                    report.checked += 1
                    if fn(v, p1) and fn(v, p2):
                        report.failures.append(
                            {
                                "kind": "pair_not_separated",
                                "pair": [_point_json(p1), _point_json(p2)],
                                "vset": {"u": list(u), "i": i, "p": threshold},
                            }
                        )

    for p in range(1, p_max + 1):
        for u in frag.sorted_nodes:
            for i in SIGNS:
                v = VSet(u, i, p)
                member_pts = v_members(v, frag)
                for q in member_pts:
                    report.checked += 1
                    w = _open_neighbourhood_inside(q, lambda x: fn(v, x), frag)
                    if w is None:
                        report.failures.append(
                            {
                                "kind": "not_relatively_open",
                                "vset": {"u": list(u), "i": i, "p": p},
                                "point": _point_json(q),
                            }
                        )

    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def star_from_gdelta(frag: Fragment, p_max: int) -> StarSequence:
    """Package the separation families for thresholds ``1..p_max`` as a star
    sequence. Every family covers the fragment, since each anchor point
    belongs to its own set."""
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    families = []
    for p in range(1, p_max + 1):
        sets = [
            frozenset(v_members(VSet(u, i, p), frag))
            for u in frag.sorted_nodes
            for i in SIGNS
        ]
        families.append(tuple(dict.fromkeys(sets)))
    return StarSequence(families=tuple(families))


def extend_to_compactification(seq: StarSequence, frag: Fragment) -> StarSequence:
    """Adjoin the single family whose one set is the whole fragment.

    That set touches every pair involving the extra point at infinity while
    containing only the finite half, so the extended sequence separates the
    enlarged universe whenever the original separated the fragment.
    """
    everything = frozenset(Point(n, i) for n in frag.nodes for i in SIGNS)
    return StarSequence(families=seq.families + ((everything,),))


def verify_star(seq: StarSequence, universe) -> SuiteReport:
    """Check both star conditions for every pair from ``universe``.

    A pair passes when some family touches it (condition one) while none of
    that family's sets contains both points (condition two).
    """
    start = time.perf_counter()
    report = SuiteReport(suite="star", params={"families": len(seq.families)})
    points = sorted(universe, key=_universe_key)
    located = []  # per family: dict point -> set ids
    for family in seq.families:
        where: dict = {}
        for idx, s in enumerate(family):
            for p in s:
                where.setdefault(p, set()).add(idx)
        located.append(where)

    for a in range(len(points)):
        for b in range(a + 1, len(points)):
            x, y = points[a], points[b]
            report.checked += 1
            ok = False
            for where in located:
                hit_x = where.get(x)
                hit_y = where.get(y)
                if hit_x is None and hit_y is None:
                    continue  # condition one fails for this family
                if hit_x and hit_y and hit_x & hit_y:
                    continue  # condition two fails: some set grabs both
                ok = True
                break
            if not ok:
                report.failures.append(
                    {"kind": "pair_not_star_separated", "pair": [_point_json(x), _point_json(y)]}
                )

    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _universe_key(p):
    if p is INFINITY:
        return (1,)
    return (0, canonical_key(p.node), -p.sign)


def _point_json(p):
    if p is INFINITY:
        return "infinity"
    return {"node": list(p.node), "sign": p.sign}
