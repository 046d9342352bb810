"""Split-apply-combine aggregation through several interchangeable idioms."""

from splitapply.core import (
    Aggregator,
    KeyedSummary,
    OrderPolicy,
    RaggedGroups,
    fold,
    make_aggregator,
)
from splitapply.errors import (
    AggregationError,
    DenseLimitExceeded,
    DuplicateName,
    EmptyGroup,
    MixedKeyKinds,
    NoNumericColumns,
    NonPositiveKey,
    NoSuchColumn,
    ShapeMismatch,
    SparseUnsupported,
    SubscriptOutOfBounds,
    UnknownAggregator,
    UnknownEngine,
)

__version__ = "0.1.0"

__all__ = [
    "Aggregator",
    "KeyedSummary",
    "OrderPolicy",
    "RaggedGroups",
    "fold",
    "make_aggregator",
    "AggregationError",
    "DenseLimitExceeded",
    "DuplicateName",
    "EmptyGroup",
    "MixedKeyKinds",
    "NoNumericColumns",
    "NonPositiveKey",
    "NoSuchColumn",
    "ShapeMismatch",
    "SparseUnsupported",
    "SubscriptOutOfBounds",
    "UnknownAggregator",
    "UnknownEngine",
]
