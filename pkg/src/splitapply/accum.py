"""accumarray with MATLAB semantics.

Values are split by their subscript rows, each cell's list is reduced with an
:class:`~splitapply.core.Aggregator`, and the reduced values are placed into a
dense array (unreferenced cells hold ``fillval``) or a sorted coordinate list.

Subscripts are 1-based. Dense storage is a C-ordered (row-major) numpy array.
Within a cell, values are reduced in input order.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from splitapply.core import Aggregator, resolve_aggregator
from splitapply.errors import ShapeMismatch, SparseUnsupported, SubscriptOutOfBounds


@dataclass(frozen=True)
class AccumResult:
    extents: tuple
    sparse: bool = False
    dense: Optional[np.ndarray] = field(default=None, compare=False, repr=False)
    # referenced cells of a dense result; tells computed cells from fill cells
    mask: Optional[np.ndarray] = field(default=None, compare=False, repr=False)
    entries: tuple = ()  # sparse only: ((coords...), value) in coordinate order
    fillval: float = 0.0

    @property
    def ndim(self) -> int:
        return len(self.extents)

    def __getitem__(self, coords):
        """Cell value at 1-based ``coords``."""
        if isinstance(coords, numbers.Integral):
            coords = (coords,)
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ndim or any(not 1 <= c <= e for c, e in zip(coords, self.extents)):
            raise IndexError(f"{coords} outside extents {self.extents}")
        if self.sparse:
            return dict(self.entries).get(coords, 0.0)
        return float(self.dense[tuple(c - 1 for c in coords)])

    def stored(self) -> tuple:
        """Referenced cells as ``(coords, value)`` pairs in coordinate order."""
        if self.sparse:
            return self.entries
        idx = np.argwhere(self.mask)
        return tuple(
            (tuple(int(i) + 1 for i in row), float(self.dense[tuple(row)])) for row in idx
        )

    def todense(self) -> np.ndarray:
        if not self.sparse:
            return self.dense.copy()
        out = np.zeros(self.extents, dtype=np.float64)
        for coords, v in self.entries:
            out[tuple(c - 1 for c in coords)] = v
        return out

    def cells(self):
        """Yield ``(coords, value)`` for every cell in row-major order (dense view)."""
        dense = self.todense()
        for idx in np.ndindex(*self.extents):
            yield tuple(i + 1 for i in idx), float(dense[idx])


def _is_int(x) -> bool:
    return isinstance(x, numbers.Integral) and not isinstance(x, (bool, np.bool_))


def normalize_subscripts(subs, sz=None) -> tuple[list, int]:
    """Return subscript rows as tuples of ints, plus the dimension count."""
    if isinstance(subs, np.ndarray):
        if subs.ndim == 1:
            subs = subs.reshape(-1, 1)
        if subs.ndim != 2:
            raise ShapeMismatch(f"subscripts must be 1- or 2-dimensional, got {subs.ndim}")
        d = subs.shape[1]
        rows = [tuple(r) for r in subs.tolist()]
    else:
        subs = list(subs)
        rows = [(s,) if type(s) is int or isinstance(s, numbers.Number) else tuple(s) for s in subs]
        if rows:
            d = len(rows[0])
        else:
            d = len(sz) if sz is not None else 1
    if d < 1:
        raise ShapeMismatch("subscripts need at least one column")
    if all(len(row) == d for row in rows) and all(
        type(s) is int and s >= 1 for row in rows for s in row
    ):
        return rows, d
    for i, row in enumerate(rows):
        if len(row) != d:
            raise ShapeMismatch(f"subscript row {i} has {len(row)} columns, expected {d}")
        for s in row:
            if not _is_int(s):
                raise SubscriptOutOfBounds(f"subscript {s!r} in row {i} is not an integer", row=i)
            if s < 1:
                raise SubscriptOutOfBounds(f"subscript {s} in row {i} is below 1", row=i)
    return [tuple(int(s) for s in row) for row in rows], d


def accumarray(
    subs,
    vals,
    agg: Aggregator | str = "sum",
    *,
    sz=None,
    fillval: float = 0.0,
    sparse: bool = False,
) -> AccumResult:
    """Accumulate ``vals`` into an array addressed by the 1-based rows of ``subs``.

    ``subs`` is an n-vector (one dimension) or an n-by-d matrix. ``sz`` defaults
    to the column-wise maxima of ``subs``. Sparse output needs ``d <= 2`` and a
    zero ``fillval``.
    """
    agg = resolve_aggregator(agg)
    if isinstance(vals, (numbers.Number, str, bytes)):
        raise ShapeMismatch("scalar values are not expanded; pass one value per subscript row")
    vals = [float(v) for v in vals]
    rows, d = normalize_subscripts(subs, sz)
    if len(rows) != len(vals):
        raise ShapeMismatch(f"{len(rows)} subscript rows but {len(vals)} values")
    fillval = float(fillval)

    maxima = [max(col) for col in zip(*rows)] if rows else [0] * d
    if sz is None:
        extents = tuple(maxima)
    else:
        extents = tuple(int(e) for e in sz)
        if len(extents) != d:
            raise ShapeMismatch(f"sz has {len(extents)} entries for {d}-column subscripts")
        for j, (e, m) in enumerate(zip(extents, maxima)):
            if m > e:
                i = next(i for i, r in enumerate(rows) if r[j] > e)
                raise SubscriptOutOfBounds(
                    f"subscript {rows[i][j]} in row {i} exceeds extent {e} of dimension {j + 1}",
                    row=i,
                )
    if sparse and (d > 2 or fillval != 0.0):
        raise SparseUnsupported("sparse output requires at most 2 dimensions and fillval 0")

    # split
    groups: dict[tuple, list] = {}
    for row, v in zip(rows, vals):
        bucket = groups.get(row)
        if bucket is None:
            groups[row] = [v]
        else:
            bucket.append(v)
    # apply
    reduced = {coords: agg.finalize(agg.state(vs)) for coords, vs in groups.items()}
    # combine
    if sparse:
        return AccumResult(extents, sparse=True, entries=tuple(sorted(reduced.items())))
    dense = np.full(extents, fillval, dtype=np.float64)
    mask = np.zeros(extents, dtype=bool)
    for coords, v in reduced.items():
        idx = tuple(c - 1 for c in coords)
        dense[idx] = v
        mask[idx] = True
    return AccumResult(extents, dense=dense, mask=mask, fillval=fillval)


def format_coords(coords) -> str:
    """``(i,j)`` label; one-dimensional results print as column vectors ``(i,1)``."""
    coords = tuple(coords)
    if len(coords) == 1:
        coords = coords + (1,)
    return "(" + ",".join(str(c) for c in coords) + ")"


def display_lines(result: AccumResult, fmt="{:.4f}".format) -> list[str]:
    """Lines of ``(coords) value``: stored cells when sparse, every cell row-major when dense."""
    cells = list(result.entries) if result.sparse else list(result.cells())
    labels = [format_coords(c) for c, _ in cells]
    width = max((len(s) for s in labels), default=0)
    return [f"{label:>{width}}  {fmt(v)}" for label, (_, v) in zip(labels, cells)]
