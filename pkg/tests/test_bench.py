"""Benchmark sweeps: spec parsing, record determinism, summaries."""

import json
import math
import random

import pytest

from dubinsplan import (
    BenchRecord,
    BenchSpec,
    ScenarioError,
    format_summary,
    load_bench_spec,
    read_records,
    run_bench,
    summarize,
    write_records,
)

from conftest import SCENARIOS


def tiny_spec(**overrides) -> BenchSpec:
    base = dict(scenario=str(SCENARIOS / "maze.json"),
                algorithms=("rrt", "rrt-star"),
                sample_budgets=(60,), seeds=(1, 2))
    base.update(overrides)
    return BenchSpec(**base)


def strip_wall(records):
    return [(r.algorithm, r.budget, r.seed, r.solved, r.path_length,
             r.nodes, r.rewires, r.error) for r in records]


@pytest.fixture(scope="module")
def tiny_records():
    return run_bench(tiny_spec())


# ---------------------------------------------------------------------------
# Spec validation
# ---------------------------------------------------------------------------

def test_spec_rejects_empty_algorithms():
    with pytest.raises(ValueError, match="algorithms"):
        tiny_spec(algorithms=())


def test_spec_rejects_unknown_algorithm():
    with pytest.raises(ValueError, match="unknown algorithm"):
        tiny_spec(algorithms=("rrt", "prm"))


def test_spec_rejects_bad_budgets():
    with pytest.raises(ValueError, match="sample_budgets"):
        tiny_spec(sample_budgets=())
    with pytest.raises(ValueError, match="sample_budgets"):
        tiny_spec(sample_budgets=(0,))
    with pytest.raises(ValueError, match="sample_budgets"):
        tiny_spec(sample_budgets=(500.0,))


def test_spec_rejects_bad_seeds():
    with pytest.raises(ValueError, match="seeds"):
        tiny_spec(seeds=())
    with pytest.raises(ValueError, match="seeds"):
        tiny_spec(seeds=(1, "2"))


def test_load_bench_spec(tmp_path):
    doc = {"scenario": "maze.json", "algorithms": ["rrt"],
           "sample_budgets": [100], "seeds": [1, 2], "output": "out"}
    p = tmp_path / "spec.json"
    p.write_text(json.dumps(doc))
    (tmp_path / "maze.json").write_text((SCENARIOS / "maze.json").read_text())
    spec = load_bench_spec(p)
    # Relative scenario paths resolve against the bench file's directory.
    assert spec.scenario == str((tmp_path / "maze.json").resolve())
    assert spec.algorithms == ("rrt",)
    assert spec.sample_budgets == (100,)
    assert spec.seeds == (1, 2)
    assert spec.output == "out"


def test_load_bench_spec_rejects_unknown_key(tmp_path):
    doc = {"scenario": "maze.json", "algorithms": ["rrt"],
           "sample_budgets": [100], "seeds": [1], "budget": 5}
    p = tmp_path / "spec.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(ScenarioError, match="unknown keys"):
        load_bench_spec(p)


def test_load_bench_spec_rejects_float_budget(tmp_path):
    doc = {"scenario": "maze.json", "algorithms": ["rrt"],
           "sample_budgets": [100.5], "seeds": [1]}
    p = tmp_path / "spec.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(ScenarioError, match="expected an integer"):
        load_bench_spec(p)


def test_shipped_bench_spec_parses():
    spec = load_bench_spec(SCENARIOS / "bench_full.json")
    assert spec.algorithms == ("rrt", "rrt-star")
    assert spec.sample_budgets == (500, 1000, 2000, 3000)
    assert spec.seeds == tuple(range(1, 21))


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

def test_run_bench_shape_and_order(tiny_records):
    assert len(tiny_records) == 4  # 2 algorithms x 1 budget x 2 seeds
    keys = [(r.algorithm, r.budget, r.seed) for r in tiny_records]
    assert keys == sorted(keys)
    for r in tiny_records:
        assert r.error == ""
        assert r.nodes > 0
        assert r.wall_time > 0.0
        assert r.solved == (r.path_length is not None)
        if r.algorithm == "rrt":
            assert r.rewires == 0


def test_run_bench_deterministic(tiny_records):
    again = run_bench(tiny_spec())
    assert strip_wall(again) == strip_wall(tiny_records)


def test_run_bench_workers_match_serial(tiny_records):
    parallel = run_bench(tiny_spec(), workers=2)
    assert strip_wall(parallel) == strip_wall(tiny_records)


def test_run_bench_star_not_worse(tiny_records):
    by_key = {(r.algorithm, r.seed): r for r in tiny_records}
    for seed in (1, 2):
        plain = by_key[("rrt", seed)]
        star = by_key[("rrt-star", seed)]
        if plain.solved:
            assert star.solved
            assert star.path_length <= plain.path_length + 1e-9


def test_run_bench_isolates_cell_failures(tmp_path):
    # A start pose inside the obstacle margin fails per cell, not globally.
    doc = json.loads((SCENARIOS / "block.json").read_text())
    doc["start"] = [7.0, 8.0, 0.0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    records = run_bench(BenchSpec(str(bad), ("rrt",), (20,), (1,)))
    assert len(records) == 1
    assert not records[0].solved
    assert records[0].error.startswith("InvalidStart")


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------

def test_write_read_round_trip(tmp_path, tiny_records):
    p = tmp_path / "records.csv"
    write_records(tiny_records, p)
    back = read_records(p)
    assert len(back) == len(tiny_records)
    for a, b in zip(tiny_records, back):
        assert (a.algorithm, a.budget, a.seed, a.solved) == \
               (b.algorithm, b.budget, b.seed, b.solved)
        assert a.path_length == b.path_length  # repr round-trips exactly
        assert (a.nodes, a.rewires, a.error) == (b.nodes, b.rewires, b.error)
        assert math.isnan(b.wall_time)


def test_write_records_excludes_timing(tmp_path, tiny_records):
    p = tmp_path / "records.csv"
    write_records(tiny_records, p)
    text = p.read_text()
    assert text.splitlines()[0] == \
        "algorithm,budget,seed,solved,path_length,nodes,rewires,error"
    assert "wall" not in text


def test_write_records_byte_stable(tmp_path, tiny_records):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    write_records(tiny_records, a)
    write_records(run_bench(tiny_spec()), b)
    assert a.read_bytes() == b.read_bytes()


def test_read_records_rejects_header_drift(tmp_path):
    p = tmp_path / "records.csv"
    p.write_text("algorithm,budget\nrrt,1\n")
    with pytest.raises(ValueError, match="header"):
        read_records(p)


# ---------------------------------------------------------------------------
# Summaries
# ---------------------------------------------------------------------------

def rec(alg="rrt", budget=100, seed=1, solved=True, length=10.0, wall=0.5,
        nodes=50, rewires=0, error=""):
    return BenchRecord(alg, budget, seed, solved,
                       length if solved else None, wall, nodes, rewires, error)


def test_summarize_groups_and_aggregates():
    records = [rec(seed=1, length=10.0), rec(seed=2, length=14.0),
               rec(seed=3, solved=False),
               rec(alg="rrt-star", seed=1, length=9.0)]
    rows = summarize(records)
    assert [(r.algorithm, r.budget) for r in rows] == [("rrt", 100), ("rrt-star", 100)]
    plain = rows[0]
    assert plain.runs == 3 and plain.solved == 2
    assert plain.solve_rate == pytest.approx(2 / 3)
    assert plain.mean_length == pytest.approx(12.0)
    assert plain.min_length == 10.0
    assert plain.median_length == pytest.approx(12.0)
    assert plain.mean_wall_time == pytest.approx(0.5)


def test_summarize_no_solves_yields_none():
    rows = summarize([rec(solved=False), rec(seed=2, solved=False)])
    assert rows[0].mean_length is None
    assert rows[0].min_length is None
    assert rows[0].median_length is None
    assert rows[0].solve_rate == 0.0


def test_summarize_order_invariant():
    records = [rec(seed=s, length=10.0 + 0.1 * s, wall=0.01 * s)
               for s in range(1, 30)]
    shuffled = records[:]
    random.Random(5).shuffle(shuffled)
    assert summarize(records) == summarize(shuffled)


def test_summarize_ignores_nan_wall_times(tmp_path, tiny_records):
    p = tmp_path / "records.csv"
    write_records(tiny_records, p)
    rows = summarize(read_records(p))
    assert all(r.mean_wall_time is None for r in rows)
    live = summarize(tiny_records)
    assert all(r.mean_wall_time is not None for r in live)


def test_format_summary_layout():
    text = format_summary(summarize([rec(), rec(alg="rrt-star", solved=False)]))
    lines = text.splitlines()
    assert lines[0].split() == ["algorithm", "budget", "runs", "solved", "rate",
                                "mean_len", "min_len", "med_len", "wall_s"]
    assert len(lines) == 3
    assert "-" in lines[2]  # unsolved group prints dashes
    assert "10.000" in lines[1]
