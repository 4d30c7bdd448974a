"""The duplicate of the tree and its oscillating basic open sets.

Each node is doubled into two points, one per sign. A basic open set is
described by an interval ``(r, t]`` of the tree together with a sign at the
top: walking down the interval, the sign at a node flips with the parity of
the descent length up to ``t``. Because an interval of the tree is just the
chain of initial segments of ``t`` longer than ``r``, the member set of a
basic open is intrinsic and finite; fragments only matter for validating
that an operation stays inside the desk-scale universe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .descent import ell
from .errors import (
    EmptySet,
    EqualPoints,
    NotACover,
    NotInBoth,
    OutOfInterval,
    ProjectionMismatch,
)
from .tree import (
    EMPTY,
    ROOT,
    Fragment,
    NodeOrRoot,
    canonical_key,
    meet,
    precedes,
    strictly_precedes,
)

SIGNS = (1, -1)


class Point(NamedTuple):
    node: tuple
    sign: int


@dataclass(frozen=True)
class BasicOpen:
    """Interval ``(r, t]`` of the tree with sign ``i`` at the top node ``t``."""

    r: NodeOrRoot
    t: tuple
    i: int

    def __post_init__(self):
        if self.i not in SIGNS:
            raise ValueError(f"sign must be +1 or -1, got {self.i}")
        if not strictly_precedes(self.r, self.t):
            raise ValueError(f"lower endpoint {self.r!r} must lie strictly below {self.t!r}")

    def __repr__(self):
        return f"W({self.r!r},{self.t!r},{self.i:+d})"


@dataclass(frozen=True)
class OpenSet:
    """Finite union of basic opens; overlaps are permitted."""

    pieces: tuple

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))


def interval_nodes(r: NodeOrRoot, t: tuple) -> list[tuple]:
    """Nodes of the interval ``(r, t]``: initial segments of ``t`` longer than ``r``."""
    start = 0 if r is ROOT else len(r) + 1
    return [t[:k] for k in range(start, len(t) + 1)]


def in_interval(r: NodeOrRoot, t: tuple, s: tuple) -> bool:
    return strictly_precedes(r, s) and precedes(s, t)


def sign_at(w: BasicOpen, s: tuple) -> int:
    """Sign carried by the member of ``w`` over node ``s``: the top sign,
    flipped once per descent step from ``t`` down to ``s``."""
    if not in_interval(w.r, w.t, s):
        raise OutOfInterval(f"{s!r} is not in ({w.r!r}, {w.t!r}]")
    return -w.i if ell(s, w.t) % 2 else w.i


def contains(w: BasicOpen, p: Point) -> bool:
    return in_interval(w.r, w.t, p.node) and p.sign == sign_at(w, p.node)


def members(w: BasicOpen, frag: Fragment | None = None) -> set:
    """The member points of ``w``, one per interval node.

    The projection to nodes is injective by construction. When a fragment
    is supplied, the top node is required to belong to it; prefix closure
    then puts every member inside the fragment automatically.
    """
    if frag is not None and w.t not in frag:
        raise ValueError(f"top node {w.t!r} is not in the fragment")
    return {Point(s, sign_at(w, s)) for s in interval_nodes(w.r, w.t)}


def open_contains(u: OpenSet, p: Point) -> bool:
    return any(contains(w, p) for w in u.pieces)


def open_members(u: OpenSet, frag: Fragment | None = None) -> set:
    out: set = set()
    for w in u.pieces:
        out |= members(w, frag)
    return out


def _endpoint_len(r: NodeOrRoot) -> int:
    return -1 if r is ROOT else len(r)


def refine_intersection(p: Point, w1: BasicOpen, w2: BasicOpen) -> BasicOpen:
    """A basic open around ``p`` inside ``w1 & w2``.

    The lower endpoint is the longest initial segment of ``p.node`` (not
    below either input endpoint) whose basic open stays inside both inputs,
    found by descending search from the immediate predecessor. Containment
    is verified on explicit member sets, not assumed.
    """
    if not (contains(w1, p) and contains(w2, p)):
        raise NotInBoth(f"{p!r} is not in both {w1!r} and {w2!r}")
    t = p.node
    target = members(w1) & members(w2)
    floor = max(_endpoint_len(w1.r), _endpoint_len(w2.r))
    for length in range(len(t) - 1, floor - 1, -1):
        r = ROOT if length < 0 else t[:length]
        w = BasicOpen(r, t, p.sign)
        if members(w) <= target:
            return w
    raise NotInBoth(f"no refinement at {p!r} fits inside both inputs")


def hausdorff_witness(p1: Point, p2: Point) -> tuple:
    """Disjoint basic opens around two distinct points.

    Same node: both opens run from the root; opposite top signs keep the
    sign at every shared interval node different. Incomparable nodes: both
    run from the meet, so the projections are already disjoint. Comparable
    nodes: the lower point takes the full interval from the root and the
    higher one starts strictly above the lower node.
    """
    if p1 == p2:
        raise EqualPoints(f"identical points {p1!r}")
    t1, t2 = p1.node, p2.node
    if t1 == t2:
        return BasicOpen(ROOT, t1, p1.sign), BasicOpen(ROOT, t2, p2.sign)
    r = meet(t1, t2)
    if r == t1:  # t1 strictly below t2
        return BasicOpen(ROOT, t1, p1.sign), BasicOpen(t1, t2, p2.sign)
    if r == t2:  # t2 strictly below t1
        return BasicOpen(t2, t1, p1.sign), BasicOpen(ROOT, t2, p2.sign)
    return BasicOpen(r, t1, p1.sign), BasicOpen(r, t2, p2.sign)


def isolated_point(points: Iterable[Point]) -> tuple:
    """A point of the set plus a basic open meeting the set only there.

    Any point whose node is minimal in tree order works: the full interval
    below it contains no other node of the set, and the sign pins down the
    point over the node itself. Ties among incomparable minimal nodes are
    broken by the canonical node order, and the positive sign is preferred
    when both points over the chosen node are present.
    """
    pts = set(points)
    if not pts:
        raise EmptySet("cannot isolate a point of the empty set")
    nodes = {p.node for p in pts}
    minimal = [n for n in nodes if not any(strictly_precedes(m, n) for m in nodes)]
    node = min(minimal, key=canonical_key)
    sign = 1 if Point(node, 1) in pts else -1
    return Point(node, sign), BasicOpen(ROOT, node, sign)


def chain_subcover(w: BasicOpen, cover: list, frag: Fragment | None = None) -> list:
    """Finite subcover of ``w`` selected by walking down its chain.

    Starting at the top member, pick the first cover element containing the
    current point, descend through consecutive members while they stay in
    that element, and recurse at the first member left out. Raises
    :class:`NotACover` with the offending point if the walk gets stuck.
    """
    if frag is not None and w.t not in frag:
        raise ValueError(f"top node {w.t!r} is not in the fragment")
    chain = interval_nodes(w.r, w.t)  # shortest first
    pts = [Point(s, sign_at(w, s)) for s in chain]
    selected = []
    idx = len(pts) - 1
    while idx >= 0:
        current = pts[idx]
        pick = next((c for c in cover if contains(c, current)), None)
        if pick is None:
            raise NotACover(current)
        selected.append(pick)
        idx -= 1
        while idx >= 0 and contains(pick, pts[idx]):
            idx -= 1
    return selected


def _chain_projection(point_map: dict) -> tuple:
    """Check that the keys of a node-to-sign map form an interval ``(r, t]``;
    return ``(r, t)``."""
    nodes = sorted(point_map, key=canonical_key)
    top = nodes[-1]
    lens = [len(n) for n in nodes]
    expected = list(range(lens[0], len(top) + 1))
    if lens != expected or any(top[: len(n)] != n for n in nodes):
        raise ProjectionMismatch(f"projection {nodes!r} is not an interval")
    r = ROOT if lens[0] == 0 else top[: lens[0] - 1]
    return r, top


def _sign_map(u: OpenSet, frag: Fragment | None) -> dict:
    out: dict = {}
    for p in open_members(u, frag):
        if out.get(p.node, p.sign) != p.sign:
            raise ProjectionMismatch(f"projection hits both points over {p.node!r}")
        out[p.node] = p.sign
    if not out:
        raise ProjectionMismatch("empty open set")
    return out


def refine_pair(u: OpenSet, v: OpenSet, frag: Fragment | None = None) -> tuple:
    """Aligned disjoint decompositions of two opens over a common interval.

    Both inputs must project injectively onto the same interval ``(r, t]``.
    The walk starts at the top, extends each piece downward while both
    inputs keep matching the oscillating signs of the current top, and cuts
    a new aligned piece where either stops matching. Aligned pieces share
    their interval, so each pair is equal (same sign) or disjoint (opposite
    signs), and within each list the intervals partition ``(r, t]``.
    """
    pu = _sign_map(u, frag)
    pv = _sign_map(v, frag)
    if set(pu) != set(pv):
        raise ProjectionMismatch("the two opens project onto different node sets")
    r, top = _chain_projection(pu)
    r_len = _endpoint_len(r)
    left, right = [], []
    cur_len = len(top)
    while cur_len > r_len:
        cur = top[:cur_len]
        p_sign, q_sign = pu[cur], pv[cur]
        bound = cur_len - 1
        while bound > r_len:
            x = top[:bound]
            parity = ell(x, cur) % 2
            ok_u = pu[x] == (-p_sign if parity else p_sign)
            ok_v = pv[x] == (-q_sign if parity else q_sign)
            if not (ok_u and ok_v):
                break
            bound -= 1
        piece_r = ROOT if bound < 0 else top[:bound]
        left.append(BasicOpen(piece_r, cur, p_sign))
        right.append(BasicOpen(piece_r, cur, q_sign))
        cur_len = bound
    return left, right
