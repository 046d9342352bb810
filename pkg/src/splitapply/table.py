"""A minimal named-column table with group-by/summarize and aggregate-all.

Only what grouped aggregation needs: no joins, filters or missing values.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass

from splitapply.core import OrderPolicy, RaggedGroups, as_keys, resolve_aggregator
from splitapply.engines import group
from splitapply.errors import DuplicateName, NoNumericColumns, NoSuchColumn, ShapeMismatch


@dataclass(frozen=True)
class Column:
    name: str
    data: tuple

    def __post_init__(self):
        if not self.name:
            raise ValueError("column names must be nonempty")
        object.__setattr__(self, "data", tuple(self.data))

    def __len__(self):
        return len(self.data)

    @property
    def is_numeric(self) -> bool:
        return all(
            isinstance(x, numbers.Real) and not isinstance(x, bool) for x in self.data
        )


@dataclass(frozen=True)
class Table:
    columns: tuple = ()

    @property
    def names(self) -> tuple:
        return tuple(c.name for c in self.columns)

    @property
    def nrows(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    @property
    def shape(self) -> tuple:
        return (self.nrows, len(self.columns))

    def column(self, name: str) -> Column:
        for c in self.columns:
            if c.name == name:
                return c
        raise NoSuchColumn(f"no column named {name!r}; have {', '.join(self.names) or 'none'}")

    def __getitem__(self, name: str) -> tuple:
        return self.column(name).data

    def rows(self) -> list:
        return list(zip(*(c.data for c in self.columns)))


def table_from_columns(cols) -> Table:
    """Build a table from ``Column`` objects or ``(name, data)`` pairs, keeping their order."""
    cols = tuple(c if isinstance(c, Column) else Column(*c) for c in cols)
    names = [c.name for c in cols]
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise DuplicateName(f"duplicate column name {dup!r}")
    if len({len(c) for c in cols}) > 1:
        raise ShapeMismatch("columns have different lengths")
    return Table(cols)


@dataclass(frozen=True)
class GroupedTable:
    base: Table
    key: str
    groups: RaggedGroups  # key -> row positions, increasing within each group


def group_by(t: Table, key: str, order=OrderPolicy.SORTED) -> GroupedTable:
    keys = as_keys(t[key])
    return GroupedTable(t, key, group(keys, range(len(keys)), order))


def summarize_table(g: GroupedTable, out_name: str, agg, value: str) -> Table:
    """One row per group: the key and ``agg`` over ``value`` under ``out_name``.

    ``summarize_table(group_by(t, "userid"), "avgrating", "mean", "rating")``
    """
    agg = resolve_aggregator(agg)
    col = g.base.column(value)
    if not col.is_numeric:
        raise NoNumericColumns(f"column {value!r} is not numeric")
    data = col.data
    out = []
    for _, rows in g.groups:
        out.append(agg.finalize(agg.state(float(data[i]) for i in rows)))
    return table_from_columns([Column(g.key, g.groups.keys), Column(out_name, out)])


def aggregate_all(t: Table, key: str, agg, order=OrderPolicy.SORTED) -> Table:
    """Apply ``agg`` to every numeric non-key column; results are named ``<col>_<agg>``."""
    agg = resolve_aggregator(agg)
    t.column(key)
    targets = [c for c in t.columns if c.name != key and c.is_numeric]
    if not targets:
        raise NoNumericColumns(f"no numeric columns besides {key!r}")
    g = group_by(t, key, order)
    cols = [Column(key, g.groups.keys)]
    for c in targets:
        cols.append(summarize_table(g, f"{c.name}_{agg.name}", agg, c.name).columns[1])
    return table_from_columns(cols)
