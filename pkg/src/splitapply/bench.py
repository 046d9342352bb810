"""Timing harness that checks every engine agrees before it times any of them."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from splitapply.core import OrderPolicy, resolve_aggregator
from splitapply.engines import EngineKind, summarize

BENCH_ENGINES = (
    EngineKind.HASH,
    EngineKind.DENSE,
    EngineKind.STREAMING,
    EngineKind.APL_STYLE,
    EngineKind.LINEAR_SCAN,
)
TOLERANCE = 1e-9


class BenchMismatch(RuntimeError):
    pass


@dataclass(frozen=True)
class BenchRow:
    engine: str
    n: int
    k: int
    median_ns: int
    verified: bool = True


def make_workload(n: int, k: int, seed: int) -> tuple[list, list]:
    """``n`` rows over at most ``k`` distinct positive integer keys, reproducible from ``seed``."""
    rng = np.random.default_rng([seed, n, k])
    pool = rng.choice(np.arange(1, 10 * k + 1), size=k, replace=False)
    keys = pool[rng.integers(0, k, size=n)]
    values = rng.uniform(0.0, 5.0, size=n)
    return keys.tolist(), values.tolist()


def _default_runner(engine, agg):
    return lambda keys, values: summarize(keys, values, agg, engine, OrderPolicy.SORTED)


def _agree(ref, got) -> bool:
    if ref.keys != got.keys:
        return False
    return all(
        abs(a - b) <= TOLERANCE * max(1.0, abs(a)) for a, b in zip(ref.aggregates, got.aggregates)
    )


def run_bench(sizes, key_counts, reps=5, seed=0, agg="mean", runners=None) -> list[BenchRow]:
    """Median wall time per (size, key count, engine).

    ``runners`` maps an engine name to ``f(keys, values) -> KeyedSummary`` in
    sorted order; the first entry is the reference. Raises ``BenchMismatch``
    before any timing if an engine disagrees with the reference.
    """
    if reps < 3:
        raise ValueError("reps must be at least 3")
    if any(n < 1 for n in sizes) or any(k < 1 for k in key_counts):
        raise ValueError("sizes and key counts must be at least 1")
    agg = resolve_aggregator(agg)
    if runners is None:
        runners = {e.value: _default_runner(e, agg) for e in BENCH_ENGINES}
    workloads = [(n, k, make_workload(n, k, seed)) for n in sizes for k in key_counts]

    for n, k, (keys, values) in workloads:
        outputs = {name: run(keys, values) for name, run in runners.items()}
        ref_name, ref = next(iter(outputs.items()))
        for name, out in outputs.items():
            if not _agree(ref, out):
                raise BenchMismatch(f"engine {name} disagrees with {ref_name} at n={n}, k={k}")

    rows = []
    for n, k, (keys, values) in workloads:
        for name, run in runners.items():
            times = []
            for _ in range(reps):
                t0 = time.perf_counter_ns()
                run(keys, values)
                times.append(time.perf_counter_ns() - t0)
            rows.append(BenchRow(name, n, k, int(statistics.median(times))))
    return rows
