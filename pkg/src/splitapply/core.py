"""Domain types shared by every engine.

Keys are plain Python sequences holding either 64-bit signed integers or
``bytes`` labels, never both. Values are 64-bit floats. Results are immutable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence, Union

from splitapply.errors import EmptyGroup, MixedKeyKinds, ShapeMismatch, UnknownAggregator

Key = Union[int, bytes]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class OrderPolicy(enum.Enum):
    SORTED = "sorted"
    FIRST = "first"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise LookupError(f"unknown order policy {value!r}") from None


def key_kind(keys: Iterable[Any]) -> type | None:
    """Return ``int`` or ``bytes`` for a homogeneous key vector, ``None`` if empty."""
    if not isinstance(keys, (list, tuple)):
        keys = list(keys)
    if not keys:
        return None
    types = set(map(type, keys))
    if types == {bytes}:
        return bytes
    if types == {int}:
        if min(keys) < INT64_MIN or max(keys) > INT64_MAX:
            raise MixedKeyKinds("integer key does not fit in 64 bits")
        return int
    kind = None
    for k in keys:
        if isinstance(k, bool) or not isinstance(k, (int, bytes)):
            raise MixedKeyKinds(f"key {k!r} is neither an integer nor bytes")
        this = int if isinstance(k, int) else bytes
        if kind is None:
            kind = this
        elif this is not kind:
            raise MixedKeyKinds("key vector mixes integer and byte-string keys")
        if this is int and not INT64_MIN <= k <= INT64_MAX:
            raise MixedKeyKinds(f"integer key {k} does not fit in 64 bits")
    return kind


def as_keys(keys: Iterable[Any]) -> tuple:
    if hasattr(keys, "tolist"):  # numpy arrays
        keys = keys.tolist()
    keys = tuple(keys)
    key_kind(keys)
    return keys


def as_values(values: Iterable[Any]) -> tuple:
    return tuple(float(v) for v in values)


def check_aligned(keys: Sequence, values: Sequence) -> None:
    if len(keys) != len(values):
        raise ShapeMismatch(f"{len(keys)} keys but {len(values)} values")


# -- aggregators -------------------------------------------------------------


@dataclass(frozen=True)
class Aggregator:
    """A reduction expressed as identity, fold step, associative merge and finalize.

    ``identity`` must be an immutable state; every step returns a new state.
    """

    name: str
    identity: Any
    step: Callable[[Any, float], Any]
    merge: Callable[[Any, Any], Any]
    finalize: Callable[[Any], float]

    def state(self, values: Iterable[float]):
        s = self.identity
        step = self.step
        for v in values:
            s = step(s, v)
        return s

    def __call__(self, values: Iterable[float]) -> float:
        return fold(self, values)


def _require(state, name):
    if state is None:
        raise EmptyGroup(f"{name} of an empty group is undefined")
    return state


def _merge_optional(pick):
    def merge(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return pick(a, b)

    return merge


def _mean_finalize(state):
    total, n = state
    if n == 0:
        raise EmptyGroup("mean of an empty group is undefined")
    return total / n


_CATALOG = {
    "sum": lambda: Aggregator(
        "sum", 0.0, lambda s, v: s + v, lambda a, b: a + b, float
    ),
    "count": lambda: Aggregator(
        "count", 0, lambda s, v: s + 1, lambda a, b: a + b, float
    ),
    "mean": lambda: Aggregator(
        "mean",
        (0.0, 0),
        lambda s, v: (s[0] + v, s[1] + 1),
        lambda a, b: (a[0] + b[0], a[1] + b[1]),
        _mean_finalize,
    ),
    "min": lambda: Aggregator(
        "min",
        None,
        lambda s, v: v if s is None or v < s else s,
        _merge_optional(min),
        lambda s: float(_require(s, "min")),
    ),
    "max": lambda: Aggregator(
        "max",
        None,
        lambda s, v: v if s is None or v > s else s,
        _merge_optional(max),
        lambda s: float(_require(s, "max")),
    ),
}

AGGREGATOR_NAMES = tuple(_CATALOG)


def make_aggregator(name: str) -> Aggregator:
    """Look up one of ``mean``, ``sum``, ``count``, ``min`` or ``max``."""
    try:
        return _CATALOG[name]()
    except (KeyError, TypeError):
        raise UnknownAggregator(
            f"unknown aggregator {name!r}; expected one of {', '.join(AGGREGATOR_NAMES)}"
        ) from None


def resolve_aggregator(agg) -> Aggregator:
    return agg if isinstance(agg, Aggregator) else make_aggregator(agg)


def fold(agg: Aggregator | str, values: Iterable[float]) -> float:
    """Reduce ``values`` in order and finalize.

    Raises ``EmptyGroup`` for mean/min/max over no values.
    """
    agg = resolve_aggregator(agg)
    return agg.finalize(agg.state(float(v) for v in values))


# -- grouped containers ------------------------------------------------------


def first_occurrence_rank(keys: Iterable) -> dict:
    rank = {}
    for k in keys:
        if k not in rank:
            rank[k] = len(rank)
    return rank


@dataclass(frozen=True)
class RaggedGroups:
    """Ordered ``(key, values)`` pairs with distinct keys; a nested array."""

    entries: tuple = ()

    def __post_init__(self):
        entries = tuple((k, tuple(vs)) for k, vs in self.entries)
        if len({k for k, _ in entries}) != len(entries):
            raise ShapeMismatch("ragged groups carry duplicate keys")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def keys(self) -> tuple:
        return tuple(k for k, _ in self.entries)

    @property
    def groups(self) -> tuple:
        return tuple(vs for _, vs in self.entries)

    def sizes(self) -> tuple:
        return tuple(len(vs) for _, vs in self.entries)

    def flatten(self) -> list:
        return [v for _, vs in self.entries for v in vs]


@dataclass(frozen=True)
class KeyedSummary:
    """Distinct keys paired with one aggregate each."""

    keys: tuple = ()
    aggregates: tuple = ()

    def __post_init__(self):
        keys = tuple(self.keys)
        aggregates = tuple(float(a) for a in self.aggregates)
        check_aligned(keys, aggregates)
        if len(set(keys)) != len(keys):
            raise ShapeMismatch("summary keys are not distinct")
        object.__setattr__(self, "keys", keys)
        object.__setattr__(self, "aggregates", aggregates)

    def __len__(self):
        return len(self.keys)

    def __iter__(self):
        return iter(zip(self.keys, self.aggregates))

    def pairs(self) -> list:
        return list(zip(self.keys, self.aggregates))

    def as_dict(self) -> dict:
        return dict(zip(self.keys, self.aggregates))

    def reorder(self, order: OrderPolicy, source_keys: Iterable | None = None) -> KeyedSummary:
        """Permute rows into ``order``.

        FIRST ordering needs the input keys the summary was computed from.
        """
        order = OrderPolicy.parse(order)
        if order is OrderPolicy.SORTED:
            rows = sorted(self.pairs(), key=lambda p: p[0])
        else:
            if source_keys is None:
                raise ValueError("first-occurrence ordering needs the source keys")
            rank = first_occurrence_rank(source_keys)
            rows = sorted(self.pairs(), key=lambda p: rank[p[0]])
        return KeyedSummary(tuple(k for k, _ in rows), tuple(a for _, a in rows))
