"""Exception types shared across the package."""


class TreedupError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateValue(TreedupError, ValueError):
    """A node was built from a sequence with repeated values."""


class NotComparable(TreedupError, ValueError):
    """An operation that needs a comparable pair got an incomparable one."""


class OutOfInterval(TreedupError, ValueError):
    """A node falls outside the interval of the basic open set in question."""


class NotInBoth(TreedupError, ValueError):
    """The point is not a member of both basic open sets."""


class EqualPoints(TreedupError, ValueError):
    """Two distinct points were required."""


class EmptySet(TreedupError, ValueError):
    """A nonempty set of points was required."""


class NotACover(TreedupError):
    """The supplied family fails to cover the target set.

    ``witness`` is a point of the target left uncovered.
    """

    def __init__(self, witness):
        super().__init__(f"uncovered point: {witness!r}")
        self.witness = witness


class ProjectionMismatch(TreedupError, ValueError):
    """Open sets handed to the aligner do not project onto a common interval."""


class NoValidTheta(TreedupError):
    """No lower endpoint keeps the basic neighbourhood inside the open set."""


class RoundBudgetExceeded(TreedupError):
    """The round budget ran out while target-set members were still reachable."""


class ZeroFunction(TreedupError, ValueError):
    """A nonzero finitely supported function was required."""


class ZeroAtPoint(TreedupError, ValueError):
    """The operator vanishes at the requested coordinate, so there is nothing to probe."""


class UnknownSuite(TreedupError, ValueError):
    """No verification suite is registered under the requested name."""


class ConfigInvalid(TreedupError, ValueError):
    """Suite configuration violates a precondition."""
