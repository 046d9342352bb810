"""Exit criteria. Run with ``pytest tests/test_acceptance.py`` for a pass/fail line per criterion."""

import random
import time

import numpy as np
import pytest

from conftest import PAPER_MEANS
from oracles import FIRST, LAST, full_scan_cells, membership_scan
from splitapply import aplkit
from splitapply.accum import accumarray, display_lines
from splitapply.bench import BenchMismatch, run_bench
from splitapply.cli import CliConfig, cmd_bench
from splitapply.core import AGGREGATOR_NAMES, KeyedSummary, OrderPolicy, make_aggregator
from splitapply.engines import EngineKind, group, summarize, summarize_streaming
from splitapply.table import aggregate_all, group_by, summarize_table, table_from_columns

TOL = 1e-12
ORACLE_TOL = 1e-9


@pytest.mark.criterion(1, "paper fixture: every engine and spelling gives the five means")
def test_paper_means_everywhere(paper):
    userids, ratings = paper
    results = {}
    for engine in EngineKind:
        results[engine.value] = summarize(userids, ratings, "mean", engine, OrderPolicy.SORTED).as_dict()
    mycar = table_from_columns([("rating", ratings), ("userid", userids)])
    t = summarize_table(group_by(mycar, "userid"), "avgrating", "mean", "rating")
    results["table"] = dict(zip(t["userid"], t["avgrating"]))
    results["aplkit"] = dict(aplkit.summarize_by(ratings, userids, "mean").rows)
    for name, got in results.items():
        assert got.keys() == PAPER_MEANS.keys(), name
        for k, v in PAPER_MEANS.items():
            assert abs(got[k] - v) <= TOL, (name, k)
    assert f"{results['table'][381]:.6f}" == "4.333333"


@pytest.mark.criterion(2, "9494 variant: streaming in first-occurrence order, table sorted as ratings_mean")
def test_paper_variant_orders(paper_9494):
    userids, ratings = paper_9494
    stream = summarize_streaming(userids, ratings, "mean")
    assert stream.keys == (381, 1291, 3992, 193942, 9494)
    assert stream.aggregates == pytest.approx((13 / 3, 4.0, 14 / 3, 4.0, 5.0), abs=TOL)
    df = table_from_columns([("userids", userids), ("ratings", [int(r) for r in ratings])])
    out = aggregate_all(df, "userids", "mean")
    assert out.names == ("userids", "ratings_mean")
    assert out["userids"] == (381, 1291, 3992, 9494, 193942)
    assert out["ratings_mean"] == pytest.approx((13 / 3, 4.0, 14 / 3, 5.0, 4.0), abs=TOL)
    assert [f"{v:.5g}" for v in out["ratings_mean"]] == ["4.3333", "4", "4.6667", "5", "4"]


@pytest.mark.criterion(3, "sparse accumarray on the paper call stores five sorted entries")
def test_paper_accumarray_sparse(paper):
    userids, ratings = paper
    out = accumarray(userids, ratings, make_aggregator("mean"), sparse=True)
    column_coords = [c + (1,) for c, _ in out.entries]
    assert column_coords == [(381, 1), (1291, 1), (3992, 1), (9493, 1), (193942, 1)]
    for (c, v) in out.entries:
        assert abs(v - PAPER_MEANS[c[0]]) <= TOL
    assert [line.split() for line in display_lines(out)] == [
        ["(381,1)", "4.3333"],
        ["(1291,1)", "4.0000"],
        ["(3992,1)", "4.6667"],
        ["(9493,1)", "5.0000"],
        ["(193942,1)", "4.0000"],
    ]


@pytest.mark.criterion(4, "1000 grouped and 200 accumarray random instances match brute-force oracles in < 10 s")
def test_oracle_equivalence():
    start = time.perf_counter()
    rng = random.Random(2016)
    for _ in range(1000):
        k = rng.randint(1, 20)
        pool = rng.sample(range(1, 1001), k)
        n = rng.randint(0, 200)
        keys = [rng.choice(pool) for _ in range(n)]
        values = [rng.uniform(-100, 100) for _ in range(n)]
        for name in AGGREGATOR_NAMES:
            expected = membership_scan(keys, values, name)
            for engine in EngineKind:
                got = summarize(keys, values, name, engine).as_dict()
                assert got.keys() == expected.keys()
                for key, v in expected.items():
                    assert abs(got[key] - v) <= ORACLE_TOL, (engine, name)
    for _ in range(200):
        ext = (rng.randint(1, 10), rng.randint(1, 10))
        n = rng.randint(0, 100)
        subs = [(rng.randint(1, ext[0]), rng.randint(1, ext[1])) for _ in range(n)]
        vals = [rng.uniform(-100, 100) for _ in range(n)]
        name = rng.choice(AGGREGATOR_NAMES)
        out = accumarray(subs, vals, name, sz=ext)
        for cell, v in full_scan_cells(subs, vals, ext, name).items():
            assert abs(out[cell] - v) <= ORACLE_TOL
    assert time.perf_counter() - start < 10.0


def _random_pairs(rng, n_max=120, k_max=15):
    n = rng.randint(0, n_max)
    return [rng.randint(1, k_max) for _ in range(n)], [rng.uniform(-50, 50) for _ in range(n)]


def _random_2d(rng):
    ext = (rng.randint(1, 8), rng.randint(1, 8))
    n = rng.randint(0, 80)
    return [(rng.randint(1, ext[0]), rng.randint(1, ext[1])) for _ in range(n)], [rng.uniform(-50, 50) for _ in range(n)], ext


def prop_ragged_permutation(rng):
    keys, values = _random_pairs(rng)
    for order in OrderPolicy:
        g = group(keys, values, order)
        assert sorted(g.flatten()) == sorted(values)
        for key, vs in g:
            assert list(vs) == [v for k, v in zip(keys, values) if k == key]
    assert sorted(aplkit.splitby(values, keys).flatten()) == sorted(values)


def prop_merge_associative(rng):
    for name in AGGREGATOR_NAMES:
        agg = make_aggregator(name)
        parts = [[rng.uniform(-50, 50) for _ in range(rng.randint(1, 20))] for _ in range(3)]
        a, b, c = (agg.state(p) for p in parts)
        scale = max(1.0, sum(abs(x) for p in parts for x in p))
        left = agg.finalize(agg.merge(agg.merge(a, b), c))
        right = agg.finalize(agg.merge(a, agg.merge(b, c)))
        assert abs(left - right) <= TOL * scale
        assert agg.merge(agg.identity, a) == a == agg.merge(a, agg.identity)


def prop_uniqfy_idempotent(rng):
    keys, _ = _random_pairs(rng)
    assert aplkit.uniqfy(aplkit.uniqfy(keys)) == aplkit.uniqfy(keys)


def prop_composition_law(rng):
    keys, values = _random_pairs(rng)
    name = rng.choice(AGGREGATOR_NAMES)
    composed = aplkit.laminate(aplkit.uniqfy(keys), aplkit.apply_each(aplkit.splitby(values, keys), name))
    assert aplkit.summarize_by(values, keys, name) == composed


def prop_dense_sparse_agreement(rng):
    subs, vals, ext = _random_2d(rng)
    name = rng.choice(AGGREGATOR_NAMES)
    dense = accumarray(subs, vals, name, sz=ext)
    sparse = accumarray(subs, vals, name, sz=ext, sparse=True)
    assert np.max(np.abs(sparse.todense() - dense.dense), initial=0.0) <= TOL


def prop_sum_conservation(rng):
    subs, vals, ext = _random_2d(rng)
    out = accumarray(subs, vals, "sum", sz=ext)
    assert abs(out.dense.sum() - sum(vals)) <= ORACLE_TOL


def prop_default_extent(rng):
    subs, vals, _ = _random_2d(rng)
    if subs:
        assert accumarray(subs, vals).extents == tuple(max(col) for col in zip(*subs))


def prop_within_cell_order(rng):
    subs, vals, ext = _random_2d(rng)
    first = accumarray(subs, vals, FIRST, sz=ext)
    last = accumarray(subs, vals, LAST, sz=ext)
    for cell in set(subs):
        hits = [v for s, v in zip(subs, vals) if s == cell]
        assert first[cell] == hits[0] and last[cell] == hits[-1]


PROPERTIES = {
    "ragged-permutation": prop_ragged_permutation,
    "merge-associativity": prop_merge_associative,
    "uniqfy-idempotence": prop_uniqfy_idempotent,
    "composition-law": prop_composition_law,
    "dense-sparse-agreement": prop_dense_sparse_agreement,
    "sum-conservation": prop_sum_conservation,
    "default-extent": prop_default_extent,
    "within-cell-order": prop_within_cell_order,
}


@pytest.mark.criterion(5, "property suite")
@pytest.mark.parametrize("prop", list(PROPERTIES))
def test_property_suites(prop):
    rng = random.Random(prop)
    for _ in range(300):
        PROPERTIES[prop](rng)


@pytest.mark.criterion(6, "bench at n=100000, k=1000: linear scan slower than hash; mismatches refuse to time")
def test_bench_separation_and_refusal(capsys):
    rows = run_bench([100_000], [1000], reps=3, seed=0)
    medians = {r.engine: r.median_ns for r in rows}
    assert all(r.verified for r in rows)
    assert medians["linear-scan"] > medians["hash"], medians

    def broken(keys, values):
        s = summarize(keys, values, "mean")
        return KeyedSummary(s.keys, [a * 1.001 for a in s.aggregates])

    with pytest.raises(BenchMismatch):
        run_bench([1000], [10], reps=3, runners={"hash": lambda k, v: summarize(k, v, "mean"), "broken": broken})
    cfg = CliConfig("bench", sizes=[1000], keys=[10], reps=3)
    assert cmd_bench(cfg, runners={"hash": lambda k, v: summarize(k, v, "mean"), "broken": broken}) == 4
    assert capsys.readouterr().out == ""
