"""Interchangeable grouped-aggregation engines.

Every engine maps aligned keys and values to a :class:`KeyedSummary`:

* ``HASH`` splits into ragged groups through a dict, then folds each group.
* ``STREAMING`` makes one pass, updating a per-key aggregator state.
* ``LINEAR_SCAN`` is ``STREAMING`` with the key lookup done by a linear
  search over the keys seen so far (quadratic; kept for benchmarks).
* ``DENSE`` indexes cells by integer key through :func:`accumarray`.
* ``APL_STYLE`` composes the :mod:`splitapply.aplkit` combinators.
"""

from __future__ import annotations

import enum
from typing import Iterable

import numpy as np

from splitapply import aplkit
from splitapply.accum import accumarray
from splitapply.core import (
    KeyedSummary,
    OrderPolicy,
    RaggedGroups,
    as_keys,
    as_values,
    check_aligned,
    key_kind,
    resolve_aggregator,
)
from splitapply.errors import DenseLimitExceeded, NonPositiveKey, ShapeMismatch, UnknownEngine

DEFAULT_DENSE_LIMIT = 2**26


class EngineKind(enum.Enum):
    HASH = "hash"
    DENSE = "dense"
    STREAMING = "streaming"
    APL_STYLE = "apl"
    LINEAR_SCAN = "linear-scan"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            names = ", ".join(e.value for e in cls)
            raise UnknownEngine(f"unknown engine {value!r}; expected one of {names}") from None


def group(keys, values, order=OrderPolicy.SORTED) -> RaggedGroups:
    """Split ``values`` into ragged groups by ``keys``; input order is kept inside each group."""
    order = OrderPolicy.parse(order)
    keys = as_keys(keys)
    values = tuple(values)
    check_aligned(keys, values)
    buckets: dict = {}
    for k, v in zip(keys, values):
        bucket = buckets.get(k)
        if bucket is None:
            buckets[k] = [v]
        else:
            bucket.append(v)
    items = buckets.items()  # insertion order is first occurrence
    if order is OrderPolicy.SORTED:
        items = sorted(items, key=lambda kv: kv[0])
    return RaggedGroups(tuple(items))


def summarize_hash(keys, values, agg) -> KeyedSummary:
    agg = resolve_aggregator(agg)
    groups = group(keys, as_values(values), OrderPolicy.FIRST)
    return KeyedSummary(groups.keys, tuple(agg.finalize(agg.state(vs)) for _, vs in groups))


def summarize_streaming(keys, values: Iterable, agg, linear_scan: bool = False) -> KeyedSummary:
    """Single pass over ``values``; output is in first-occurrence order.

    ``values`` may be any iterable and is read exactly once.
    """
    agg = resolve_aggregator(agg)
    keys = as_keys(keys)
    step = agg.step
    seen: list = []
    states: list = []
    slot: dict = {}
    try:
        for k, v in zip(keys, values, strict=True):
            v = float(v)
            if linear_scan:
                try:
                    j = seen.index(k)
                except ValueError:  # not found
                    j = -1
            else:
                j = slot.get(k, -1)
            if j < 0:
                slot[k] = len(seen)
                seen.append(k)
                states.append(step(agg.identity, v))
            else:
                states[j] = step(states[j], v)
    except ValueError as exc:
        if "zip()" in str(exc):
            raise ShapeMismatch("keys and values have different lengths") from None
        raise
    return KeyedSummary(tuple(seen), tuple(agg.finalize(s) for s in states))


def summarize_dense(keys, values, agg, limit: int = DEFAULT_DENSE_LIMIT) -> KeyedSummary:
    """Aggregate positive integer keys through a dense accumarray; output is sorted."""
    agg = resolve_aggregator(agg)
    keys = as_keys(keys)
    values = as_values(values)
    check_aligned(keys, values)
    if not keys:
        return KeyedSummary()
    if key_kind(keys) is not int:
        raise NonPositiveKey("the dense engine needs integer keys")
    lo, hi = min(keys), max(keys)
    if lo < 1:
        raise NonPositiveKey(f"the dense engine needs keys >= 1, got {lo}")
    if hi > limit:
        raise DenseLimitExceeded(f"max key {hi} exceeds the dense cell limit {limit}")
    result = accumarray(keys, values, agg, sz=(hi,))
    occupied = np.flatnonzero(result.mask)
    return KeyedSummary(
        tuple(int(i) + 1 for i in occupied), tuple(float(x) for x in result.dense[occupied])
    )


def summarize_apl(keys, values, agg) -> KeyedSummary:
    table = aplkit.summarize_by(values, keys, agg)
    return KeyedSummary(table.keys, table.values)


def summarize(
    keys,
    values,
    agg="mean",
    engine=EngineKind.HASH,
    order=OrderPolicy.SORTED,
    *,
    dense_limit: int = DEFAULT_DENSE_LIMIT,
) -> KeyedSummary:
    engine = EngineKind.parse(engine)
    order = OrderPolicy.parse(order)
    agg = resolve_aggregator(agg)
    keys = as_keys(keys)
    values = as_values(values)
    check_aligned(keys, values)
    if engine is EngineKind.HASH:
        out = summarize_hash(keys, values, agg)
    elif engine is EngineKind.STREAMING:
        out = summarize_streaming(keys, values, agg)
    elif engine is EngineKind.LINEAR_SCAN:
        out = summarize_streaming(keys, values, agg, linear_scan=True)
    elif engine is EngineKind.DENSE:
        out = summarize_dense(keys, values, agg, limit=dense_limit)
    else:
        out = summarize_apl(keys, values, agg)
    return out.reorder(order, keys)

