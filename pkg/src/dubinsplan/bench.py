"""Deterministic planner sweeps: algorithms x sample budgets x seeds.

Each cell runs one planner on the shared scenario, audits the resulting tree,
and yields one record. Records are merged in (algorithm, budget, seed) order
no matter how the sweep executed, and the persisted CSV carries no timing
column, so rerunning a spec reproduces the file byte for byte. Wall time is
kept on the in-memory records and surfaces in summaries only.

A planner failure inside one cell (bad pose, audit violation) is captured in
that record's error field; it never aborts the rest of the sweep.
"""

import csv
import functools
import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import groupby
from pathlib import Path

from .planner import audit_tree, rrt_plan, rrt_star_plan
from .scenario import (ScenarioError, _check_keys, _integer, load_scenario)

ALGORITHMS = ("rrt", "rrt-star")
_PLANNERS = {"rrt": rrt_plan, "rrt-star": rrt_star_plan}

RECORD_COLUMNS = ("algorithm", "budget", "seed", "solved", "path_length",
                  "nodes", "rewires", "error")


@dataclass(frozen=True)
class BenchSpec:
    """scenario is a path to a scenario file; output is advisory (the CLI
    uses it as the default artifact directory)."""

    scenario: str
    algorithms: tuple[str, ...] = ALGORITHMS
    sample_budgets: tuple[int, ...] = (500,)
    seeds: tuple[int, ...] = (1,)
    output: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        object.__setattr__(self, "sample_budgets", tuple(self.sample_budgets))
        object.__setattr__(self, "seeds", tuple(self.seeds))
        if not self.algorithms:
            raise ValueError("algorithms must be non-empty")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {a!r}; expected one of {ALGORITHMS}")
        if not self.sample_budgets or any(
                not isinstance(b, int) or b < 1 for b in self.sample_budgets):
            raise ValueError(f"sample_budgets must be positive integers, got {self.sample_budgets}")
        if not self.seeds or any(not isinstance(s, int) for s in self.seeds):
            raise ValueError(f"seeds must be a non-empty list of integers, got {self.seeds}")


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    budget: int
    seed: int
    solved: bool
    path_length: float | None  # present iff solved
    wall_time: float  # seconds; nan on records read back from disk
    nodes: int
    rewires: int
    error: str = ""


def load_bench_spec(path) -> BenchSpec:
    """Strict JSON: {scenario, algorithms, sample_budgets, seeds[, output]};
    the scenario path is resolved relative to the bench file itself."""
    import json

    path = Path(path)
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ScenarioError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ScenarioError(f"{path}: invalid JSON: {e}") from e
    _check_keys(doc, "bench spec",
                ("scenario", "algorithms", "sample_budgets", "seeds"), ("output",))
    if not isinstance(doc["scenario"], str):
        raise ScenarioError("bench spec: scenario must be a path string")
    for key in ("algorithms", "sample_budgets", "seeds"):
        if not isinstance(doc[key], list):
            raise ScenarioError(f"bench spec: {key} must be a list")
    out = doc.get("output")
    if out is not None and not isinstance(out, str):
        raise ScenarioError("bench spec: output must be a path string")
    budgets = tuple(_integer(b, f"bench spec.sample_budgets[{i}]")
                    for i, b in enumerate(doc["sample_budgets"]))
    seeds = tuple(_integer(s, f"bench spec.seeds[{i}]")
                  for i, s in enumerate(doc["seeds"]))
    try:
        return BenchSpec(str((path.parent / doc["scenario"]).resolve()),
                         tuple(doc["algorithms"]), budgets, seeds, out)
    except ValueError as e:
        raise ScenarioError(f"bench spec: {e}") from e


@functools.lru_cache(maxsize=8)
def _load_cached(scenario_path: str):
    return load_scenario(scenario_path)


def _run_cell(task: tuple[str, str, int, int]) -> BenchRecord:
    scenario_path, algorithm, budget, seed = task
    scenario = _load_cached(scenario_path)
    config = replace(scenario.planner, n_iter=budget, seed=seed)
    t0 = time.perf_counter()
    try:
        result = _PLANNERS[algorithm](scenario.environment, scenario.start,
                                      scenario.goal, config)
        wall = time.perf_counter() - t0
        audit_tree(result.tree, scenario.environment, config)
    except Exception as e:  # one bad cell must not abort the sweep
        return BenchRecord(algorithm, budget, seed, False, None,
                           time.perf_counter() - t0, 0, 0,
                           f"{type(e).__name__}: {e}")
    solved = result.solution is not None
    return BenchRecord(algorithm, budget, seed, solved,
                       result.solution.total_length if solved else None,
                       wall, result.stats.nodes, result.stats.rewires)


def run_bench(spec: BenchSpec, workers: int | None = None) -> list[BenchRecord]:
    """One record per (algorithm, budget, seed), sorted by that key.

    workers > 1 fans cells out over processes; cell results are independent
    of execution order, so the merged list is identical either way.
    """
    _load_cached(spec.scenario)  # validate the scenario before sweeping
    tasks = [(spec.scenario, a, b, s)
             for a in spec.algorithms
             for b in spec.sample_budgets
             for s in spec.seeds]
    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_cell, tasks))
    else:
        records = [_run_cell(t) for t in tasks]
    records.sort(key=lambda r: (r.algorithm, r.budget, r.seed))
    return records


def write_records(records: list[BenchRecord], path) -> None:
    """CSV without timing, so identical sweeps write identical bytes; floats
    use repr and round-trip exactly."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RECORD_COLUMNS)
        for r in records:
            w.writerow([r.algorithm, r.budget, r.seed,
                        "true" if r.solved else "false",
                        "" if r.path_length is None else repr(r.path_length),
                        r.nodes, r.rewires, r.error])


def read_records(path) -> list[BenchRecord]:
    records = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != RECORD_COLUMNS:
            raise ValueError(f"unexpected records header {header}")
        for row in reader:
            alg, budget, seed, solved, length, nodes, rewires, error = row
            records.append(BenchRecord(
                alg, int(budget), int(seed), solved == "true",
                None if length == "" else float(length),
                math.nan, int(nodes), int(rewires), error))
    return records


@dataclass(frozen=True)
class SummaryRow:
    algorithm: str
    budget: int
    runs: int
    solved: int
    solve_rate: float
    mean_length: float | None
    min_length: float | None
    median_length: float | None
    mean_wall_time: float | None


def summarize(records: list[BenchRecord]) -> list[SummaryRow]:
    """Per (algorithm, budget) aggregates. statistics.mean accumulates exact
    rationals, so the result does not depend on record order."""
    rows = []
    ordered = sorted(records, key=lambda r: (r.algorithm, r.budget))
    for (alg, budget), group in groupby(ordered, key=lambda r: (r.algorithm, r.budget)):
        group = list(group)
        lengths = sorted(r.path_length for r in group if r.solved)
        walls = sorted(w for r in group if math.isfinite(w := r.wall_time))
        rows.append(SummaryRow(
            alg, budget, len(group), len(lengths), len(lengths) / len(group),
            statistics.mean(lengths) if lengths else None,
            lengths[0] if lengths else None,
            statistics.median(lengths) if lengths else None,
            statistics.mean(walls) if walls else None))
    return rows


def format_summary(rows: list[SummaryRow]) -> str:
    """Aligned text table; absent aggregates print as '-'."""

    def num(v, digits=3):
        return "-" if v is None else f"{v:.{digits}f}"

    header = (f"{'algorithm':<10} {'budget':>6} {'runs':>5} {'solved':>6} "
              f"{'rate':>5} {'mean_len':>9} {'min_len':>9} {'med_len':>9} "
              f"{'wall_s':>7}")
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.algorithm:<10} {r.budget:>6} {r.runs:>5} {r.solved:>6} "
            f"{r.solve_rate:>5.2f} {num(r.mean_length):>9} {num(r.min_length):>9} "
            f"{num(r.median_length):>9} {num(r.mean_wall_time):>7}")
    return "\n".join(lines)
