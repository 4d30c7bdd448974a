"""Descent sequences along comparable node pairs.

For nodes ``s`` below ``t``, the descent sequence records where the minimum
of ``t`` sits on windows shrinking toward ``len(s)``: the first window is
``[len(s), len(t))``, each step moves the right edge down to the previous
argmin, and the walk stops once it lands on ``len(s)`` itself. The result
is stored bottom-up, i.e. the landing position ``len(s)`` comes first and
the first argmin found comes last, so that splicing two descents at a
shared midpoint is literal tuple concatenation.

Derived quantities: ``ell`` is the number of steps, and ``p_value`` is the
value of ``t`` at the last stored position, which equals the minimum of
``t`` on the full window. Both drive the oscillating signs and the
diagonal separation families built elsewhere in the package.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import NotComparable
from .tree import EMPTY, ROOT, NodeOrRoot, precedes, strictly_precedes


def _require_nodes(s, t):
    if s is ROOT or t is ROOT:
        raise NotComparable("descent sequences are defined for tree nodes only, not the root")
    if not precedes(s, t):
        raise NotComparable(f"{s!r} does not lie below {t!r}")


@lru_cache(maxsize=None)
def tau(s: tuple, t: tuple) -> tuple:
    """Descent sequence of the pair ``s <= t``; empty exactly when ``s == t``."""
    _require_nodes(s, t)
    lo = len(s)
    hi = len(t)
    found = []  # positions in discovery order, top-down
    while hi > lo:
        b = min(range(lo, hi), key=t.__getitem__)
        found.append(b)
        hi = b
    return tuple(reversed(found))


def ell(s: tuple, t: tuple) -> int:
    """Number of descent steps from ``t`` down to ``s``; at least 1 when ``s`` is strictly below."""
    return len(tau(s, t))


def p_value(s: tuple, t: tuple):
    """Value of ``t`` at the last descent position: the minimum of ``t`` on
    ``[len(s), len(t))``. By convention infinite when ``s == t``."""
    seq = tau(s, t)
    if not seq:
        return math.inf
    return t[seq[-1]]


def local_extension_base(t: tuple, u: tuple) -> NodeOrRoot:
    """Lower endpoint below which descents through ``t`` splice.

    For every ``s`` in the interval ``(base, t]`` the identity
    ``tau(s, u) == tau(s, t) + tau(t, u)`` holds. At finite scale every
    node has an immediate predecessor, and that predecessor is returned
    (the root for the empty node), so the guaranteed interval is the
    singleton ``{t}``.
    """
    if not strictly_precedes(t, u):
        raise NotComparable(f"{t!r} must lie strictly below {u!r}")
    if t is ROOT:
        raise NotComparable("the base is defined for tree nodes only")
    return ROOT if t == EMPTY else t[:-1]


def check_concatenation(s: tuple, t: tuple, u: tuple) -> bool:
    """Whether the descent of ``(s, u)`` splits as descent ``(s, t)`` followed by ``(t, u)``."""
    return tau(s, u) == tau(s, t) + tau(t, u)
