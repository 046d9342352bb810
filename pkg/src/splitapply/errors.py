"""Exception hierarchy.

Errors caused by malformed data derive from ``ValueError``; errors caused by
naming something that does not exist derive from ``LookupError``. The CLI maps
the first family to exit code 2 and the second to exit code 3.
"""


class AggregationError(Exception):
    """Base class for every error raised by this package."""


class ShapeMismatch(AggregationError, ValueError):
    """Paired sequences have different lengths, or a shape is malformed."""


class MixedKeyKinds(AggregationError, ValueError):
    """A key vector mixes integers and byte-strings, or holds another type."""


class EmptyGroup(AggregationError, ValueError):
    """An aggregator without an identity result was finalized on no values."""


class NonPositiveKey(AggregationError, ValueError):
    """The dense engine received a key below 1 or a non-integer key."""


class DenseLimitExceeded(AggregationError, ValueError):
    """A dense allocation would exceed the configured cell limit."""


class SubscriptOutOfBounds(AggregationError, ValueError):
    """An accumarray subscript is below 1 or beyond the requested extent."""

    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row


class SparseUnsupported(AggregationError, ValueError):
    """Sparse output was requested with more than two dimensions or a nonzero fill."""


class UnknownAggregator(AggregationError, LookupError):
    pass


class UnknownEngine(AggregationError, LookupError):
    pass


class NoSuchColumn(AggregationError, LookupError):
    pass


class DuplicateName(AggregationError, ValueError):
    pass


class NoNumericColumns(AggregationError, ValueError):
    pass
