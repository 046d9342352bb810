"""APL-flavoured combinators: unique keys, ragged split, apply-each, lamination.

Arguments follow the APL left/right order, so ``summarize_by(r, u, agg)``
reads like ``r summarizeby u``.
"""

from __future__ import annotations

from dataclasses import dataclass

from splitapply.core import RaggedGroups, as_keys, as_values, check_aligned, resolve_aggregator
from splitapply.errors import ShapeMismatch


@dataclass(frozen=True)
class TwoColumnSummary:
    """An m-by-2 matrix of ``(key, aggregate)`` rows with strictly increasing keys."""

    rows: tuple = ()

    def __post_init__(self):
        rows = tuple((k, float(v)) for k, v in self.rows)
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple:
        return (len(self.rows), 2)

    @property
    def keys(self) -> tuple:
        return tuple(k for k, _ in self.rows)

    @property
    def values(self) -> tuple:
        return tuple(v for _, v in self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]


def uniqfy(keys) -> tuple:
    """Distinct keys in ascending order."""
    return tuple(sorted(set(as_keys(keys))))


def splitby(values, keys) -> RaggedGroups:
    """Partition ``values`` by ``keys``; groups follow ``uniqfy(keys)``, values keep input order."""
    keys = as_keys(keys)
    values = as_values(values)
    check_aligned(keys, values)
    buckets = {k: [] for k in uniqfy(keys)}
    for k, v in zip(keys, values):
        buckets[k].append(v)
    return RaggedGroups(tuple(buckets.items()))


def apply_each(groups: RaggedGroups, agg) -> tuple:
    agg = resolve_aggregator(agg)
    return tuple(agg.finalize(agg.state(vs)) for _, vs in groups)


def laminate(a, b) -> TwoColumnSummary:
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ShapeMismatch(f"cannot laminate {len(a)} keys with {len(b)} values")
    return TwoColumnSummary(tuple(zip(a, b)))


def summarize_by(values, keys, agg="mean") -> TwoColumnSummary:
    return laminate(uniqfy(keys), apply_each(splitby(values, keys), agg))
