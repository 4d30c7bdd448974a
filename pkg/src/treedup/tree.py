"""Finite fragments of the tree of injective integer sequences.

A node is a tuple of pairwise distinct naturals, ordered by end-extension;
the empty tuple is a genuine node (the least one). A separate bottom
sentinel ``ROOT`` sits strictly below every node, including the empty one.
A :class:`Fragment` is a finite prefix-closed set of nodes over a bounded
value alphabet and serves as the desk-scale stand-in for the full tree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

from .errors import DuplicateValue

Node = tuple  # a node is a tuple of pairwise distinct naturals


class _Root:
    """Bottom sentinel, strictly below every node. Singleton."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Root"


ROOT = _Root()
EMPTY: tuple = ()

NodeOrRoot = Union[_Root, tuple]


def is_root(x: NodeOrRoot) -> bool:
    return x is ROOT


def node_from_values(values: Iterable[int]) -> tuple:
    """Build a node from a value sequence, enforcing pairwise distinctness."""
    node = tuple(int(v) for v in values)
    if any(v < 0 for v in node):
        raise ValueError(f"node values must be naturals, got {node}")
    if len(set(node)) != len(node):
        raise DuplicateValue(f"repeated value in {node}")
    return node


def canonical_key(node: tuple):
    """Sort key for the canonical node order: length, then lexicographic."""
    return (len(node), node)


def precedes(s: NodeOrRoot, t: NodeOrRoot) -> bool:
    """True iff ``s`` equals ``t``, ``s`` is the root, or ``t`` end-extends ``s``."""
    if s is ROOT:
        return True
    if t is ROOT:
        return False
    return len(s) <= len(t) and t[: len(s)] == s


def strictly_precedes(s: NodeOrRoot, t: NodeOrRoot) -> bool:
    return s != t and precedes(s, t)


def meet(s: tuple, t: tuple) -> tuple:
    """Longest common initial segment of two nodes.

    Always a node (possibly empty): the empty node lies below everything,
    so two nodes never have to fall back to the root.
    """
    k = 0
    for a, b in zip(s, t):
        if a != b:
            break
        k += 1
    return s[:k]


def predecessor(t: tuple) -> NodeOrRoot:
    """Immediate predecessor of a node: one value shorter, or the root for the empty node."""
    return ROOT if t == EMPTY else t[:-1]


def antichain_index(x: NodeOrRoot) -> int:
    """Classify root/empty/nonempty nodes into the standard antichain levels.

    The root gets 0, the empty node 1, and any other node ``n + 2`` where
    ``n`` is its last value. Nodes sharing a level are pairwise incomparable:
    an end-extension cannot repeat the last value of its initial segment.
    """
    if x is ROOT:
        return 0
    if x == EMPTY:
        return 1
    return x[-1] + 2


def immediate_successors(s: tuple, cap: int) -> list[tuple]:
    """All one-step extensions of ``s`` by a value below ``cap``, in increasing value order."""
    used = set(s)
    return [s + (v,) for v in range(cap) if v not in used]


def min_excluded(s: tuple, forbidden: Iterable[int]) -> int:
    """Least natural not occurring in ``s`` and not in ``forbidden``."""
    taken = set(s) | set(forbidden)
    m = 0
    while m in taken:
        m += 1
    return m


@dataclass(frozen=True)
class Fragment:
    """Finite prefix-closed set of nodes over the alphabet ``{0..alphabet-1}``."""

    alphabet: int
    depth: int
    nodes: frozenset

    def __contains__(self, node) -> bool:
        return node in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)

    @cached_property
    def sorted_nodes(self) -> tuple:
        return tuple(sorted(self.nodes, key=canonical_key))

    def extensions(self, s: tuple) -> list[tuple]:
        """Fragment nodes end-extending ``s`` (including ``s`` itself), canonical order."""
        return [t for t in self.sorted_nodes if precedes(s, t)]

    def params(self) -> dict:
        return {"depth": self.depth, "alphabet": self.alphabet, "nodes": len(self.nodes)}


def generate_fragment(depth: int, alphabet: int) -> Fragment:
    """All injective sequences of length at most ``depth`` over ``{0..alphabet-1}``.

    Requires ``depth <= alphabet``; longer injective sequences over the
    alphabet do not exist.
    """
    if depth < 0 or alphabet < 0:
        raise ValueError("depth and alphabet must be naturals")
    if depth > alphabet:
        raise ValueError(f"depth {depth} exceeds alphabet {alphabet}")
    nodes = frozenset(
        itertools.chain.from_iterable(
            itertools.permutations(range(alphabet), k) for k in range(depth + 1)
        )
    )
    return Fragment(alphabet=alphabet, depth=depth, nodes=nodes)


def make_fragment(nodes: Iterable[Iterable[int]], alphabet: int, depth: int | None = None) -> Fragment:
    """Validate an explicit node list and wrap it as a fragment.

    Checks injectivity of every member, the alphabet bound, presence of the
    empty node, and prefix closure.
    """
    checked = frozenset(node_from_values(v) for v in nodes)
    for node in checked:
        if any(v >= alphabet for v in node):
            raise ValueError(f"value out of alphabet range in {node}")
        if node != EMPTY and node[:-1] not in checked:
            raise ValueError(f"fragment is not prefix-closed at {node}")
    if EMPTY not in checked:
        raise ValueError("fragment must contain the empty node")
    max_len = max(len(n) for n in checked)
    if depth is None:
        depth = max_len
    elif max_len > depth:
        raise ValueError(f"node of length {max_len} exceeds depth {depth}")
    return Fragment(alphabet=alphabet, depth=depth, nodes=checked)
