"""Command-line interface, exercised through subprocesses like a user would."""

import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from conftest import SCENARIOS

MAZE = str(SCENARIOS / "maze.json")


def cli(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "dubinsplan", *map(str, args)],
                          capture_output=True, text=True, cwd=cwd)


def svg_root(path):
    text = path.read_text()
    assert text.startswith("<?xml")
    return ET.fromstring(text)


def elements_with_class(root, name):
    return [el for el in root.iter() if el.get("class") == name]


# ---------------------------------------------------------------------------
# dubins
# ---------------------------------------------------------------------------

def test_dubins_straight():
    r = cli("dubins", 0, 0, 0, 10, 0, 0)
    assert r.returncode == 0
    assert "winner: LSL length 10.000000" in r.stdout
    assert "LSL" in r.stdout and "RLR" in r.stdout  # six-word table


def test_dubins_sidestep():
    r = cli("dubins", 0, 0, 0, 0, 4, 0)
    assert r.returncode == 0
    assert "length 6.283185" in r.stdout


def test_dubins_degrees_matches_radians():
    deg = cli("dubins", 0, 0, 0, 1, 1, 90, "--degrees")
    rad = cli("dubins", 0, 0, 0, 1, 1, math.pi / 2.0)
    assert deg.returncode == rad.returncode == 0
    assert "length 1.570796" in deg.stdout
    assert deg.stdout.splitlines()[-1] == rad.stdout.splitlines()[-1]


def test_dubins_scales_with_rho():
    r = cli("dubins", 0, 0, 0, 0, 8, 0, "--rho", 2.0)
    assert "length 12.566371" in r.stdout  # 2 * (2 pi)


def test_dubins_writes_samples(tmp_path):
    r = cli("dubins", 0, 0, 0, 10, 0, 0, "--samples", 10, "--out-dir", tmp_path)
    assert r.returncode == 0
    lines = (tmp_path / "dubins_path.csv").read_text().splitlines()
    assert lines[0] == "s,x,y,theta"
    assert len(lines) == 12  # header + 11 evenly spaced rows
    last = [float(v) for v in lines[-1].split(",")]
    assert last == pytest.approx([10.0, 10.0, 0.0, 0.0], abs=1e-9)


def test_dubins_rejects_nonnumeric():
    r = cli("dubins", 0, 0, 0, "ten", 0, 0)
    assert r.returncode == 2


def test_dubins_rejects_bad_rho():
    r = cli("dubins", 0, 0, 0, 5, 0, 0, "--rho", -1)
    assert r.returncode == 2
    assert r.stderr.startswith("error:")


def test_dubins_same_pose():
    r = cli("dubins", 1, 2, 3, 1, 2, 3)
    assert r.returncode == 0
    assert "degenerate same-pose problem" in r.stdout
    assert "length 0.000000" in r.stdout


# ---------------------------------------------------------------------------
# plan
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def planned(tmp_path_factory):
    out = tmp_path_factory.mktemp("plan")
    r = cli("plan", MAZE, "--algorithm", "rrt-star", "--out-dir", out)
    return r, out


def test_plan_solves_and_writes_artifacts(planned):
    r, out = planned
    assert r.returncode == 0
    assert r.stdout.startswith("solved: length ")
    for name in ("result.json", "stats.txt", "solution.csv", "plan.svg"):
        assert (out / name).exists(), name


def test_plan_result_document(planned):
    _, out = planned
    doc = json.loads((out / "result.json").read_text())
    assert doc["algorithm"] == "rrt-star"
    assert doc["solved"] is True
    assert doc["iterations_used"] == 500
    assert doc["stats"]["nodes"] == len(doc["tree"]) - 1
    assert doc["solution"]["total_length"] > 0
    # The embedded scenario reparses: artifacts are self-describing.
    assert doc["scenario"]["planner"]["n_iter"] == 500
    root_row = doc["tree"][0]
    assert root_row[0] is None and root_row[1] is None
    assert root_row[5:8] == [2.0, 2.0, 0.0]


def test_plan_stats_file(planned):
    _, out = planned
    text = (out / "stats.txt").read_text()
    for key in ("algorithm", "solved", "length", "nodes", "rewires",
                "collision_checks", "wall_time_s"):
        assert key in text, key


def test_plan_solution_csv_replays_collision_free(planned, maze_scenario):
    _, out = planned
    rows = np.loadtxt(out / "solution.csv", delimiter=",", skiprows=1)
    env = maze_scenario.environment
    assert not env.points_in_collision(rows[:, 1], rows[:, 2]).any()
    assert rows[0, 0] == 0.0
    assert rows[0, 1:3].tolist() == [2.0, 2.0]
    # Ends on the exact goal pose.
    assert rows[-1, 1:3] == pytest.approx([14.0, 14.0], abs=1e-9)
    assert np.all(np.diff(rows[:, 0]) > 0)
    # Arc-length column is consistent with the declared total.
    doc = json.loads((out / "result.json").read_text())
    assert rows[-1, 0] == pytest.approx(doc["solution"]["total_length"])


def test_plan_svg_structure(planned):
    _, out = planned
    root = svg_root(out / "plan.svg")
    assert len(elements_with_class(root, "solution")) == 1
    doc = json.loads((out / "result.json").read_text())
    edges = elements_with_class(root, "edge")
    assert len(edges) == len(doc["tree"]) - 1
    assert len(elements_with_class(root, "obstacle")) == 2
    assert len(elements_with_class(root, "inflated")) == 2


def test_plan_deterministic_artifacts(planned, tmp_path):
    _, out = planned
    r = cli("plan", MAZE, "--algorithm", "rrt-star", "--out-dir", tmp_path)
    assert r.returncode == 0
    assert (tmp_path / "solution.csv").read_bytes() == (out / "solution.csv").read_bytes()
    assert (tmp_path / "plan.svg").read_bytes() == (out / "plan.svg").read_bytes()
    a = json.loads((tmp_path / "result.json").read_text())
    b = json.loads((out / "result.json").read_text())
    a.pop("wall_time_s"), b.pop("wall_time_s")  # the one timing field
    assert a == b


def test_plan_overrides_change_outcome(tmp_path):
    r = cli("plan", MAZE, "--algorithm", "rrt", "--n-iter", 40, "--seed", 9,
            "--out-dir", tmp_path)
    doc = json.loads((tmp_path / "result.json").read_text())
    assert doc["iterations_used"] == 40
    assert doc["scenario"]["planner"]["seed"] == 9


def test_plan_no_solution_exit_code(tmp_path):
    r = cli("plan", MAZE, "--algorithm", "rrt", "--n-iter", 1, "--out-dir", tmp_path)
    assert r.returncode == 3
    assert "no solution" in r.stdout
    doc = json.loads((tmp_path / "result.json").read_text())
    assert doc["solved"] is False
    assert not (tmp_path / "solution.csv").exists()
    assert (tmp_path / "plan.svg").exists()  # tree render still useful


def test_plan_rejects_unknown_scenario_key(tmp_path):
    doc = json.loads((SCENARIOS / "maze.json").read_text())
    doc["extra"] = 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    r = cli("plan", bad, "--algorithm", "rrt")
    assert r.returncode == 2
    assert "unknown keys" in r.stderr


def test_plan_rejects_colliding_start(tmp_path):
    doc = json.loads((SCENARIOS / "block.json").read_text())
    doc["start"] = [8.0, 8.0, 0.5]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    r = cli("plan", bad, "--algorithm", "rrt", "--out-dir", tmp_path)
    assert r.returncode == 2
    assert "(8.0, 8.0, 0.5) is in collision" in r.stderr


def test_plan_rejects_bad_budget_override(tmp_path):
    r = cli("plan", MAZE, "--algorithm", "rrt", "--n-iter", 0, "--out-dir", tmp_path)
    assert r.returncode == 2
    assert "n_iter" in r.stderr


def test_plan_rejects_missing_file():
    r = cli("plan", "/nonexistent/scenario.json", "--algorithm", "rrt")
    assert r.returncode == 2


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

def write_tiny_spec(tmp_path):
    spec = {"scenario": MAZE, "algorithms": ["rrt", "rrt-star"],
            "sample_budgets": [60], "seeds": [1, 2]}
    p = tmp_path / "spec.json"
    p.write_text(json.dumps(spec))
    return p


def test_bench_runs_and_reruns_identically(tmp_path):
    spec = write_tiny_spec(tmp_path)
    out1 = tmp_path / "run1"
    out2 = tmp_path / "run2"
    r1 = cli("bench", spec, "--out-dir", out1)
    r2 = cli("bench", spec, "--out-dir", out2, "--workers", 2)
    assert r1.returncode == r2.returncode == 0
    assert "4 records written" in r1.stdout
    assert (out1 / "records.csv").read_bytes() == (out2 / "records.csv").read_bytes()
    assert (out1 / "summary.txt").exists()
    header = (out1 / "records.csv").read_text().splitlines()[0]
    assert header == "algorithm,budget,seed,solved,path_length,nodes,rewires,error"


def test_bench_summary_matches_stdout(tmp_path):
    spec = write_tiny_spec(tmp_path)
    out = tmp_path / "run"
    r = cli("bench", spec, "--out-dir", out)
    summary = (out / "summary.txt").read_text()
    assert summary.splitlines()[0] in r.stdout


def test_bench_rejects_bad_spec(tmp_path):
    p = tmp_path / "spec.json"
    p.write_text(json.dumps({"scenario": MAZE}))
    r = cli("bench", p)
    assert r.returncode == 2
    assert "missing keys" in r.stderr


# ---------------------------------------------------------------------------
# render
# ---------------------------------------------------------------------------

def test_render_round_trip(planned, tmp_path):
    _, out = planned
    target = tmp_path / "again.svg"
    r = cli("render", out / "result.json", "--out", target)
    assert r.returncode == 0
    root = svg_root(target)
    assert len(elements_with_class(root, "solution")) == 1
    original = svg_root(out / "plan.svg")
    assert len(elements_with_class(root, "edge")) == \
        len(elements_with_class(original, "edge"))


def test_render_rejects_garbage(tmp_path):
    p = tmp_path / "junk.json"
    p.write_text("{}")
    r = cli("render", p)
    assert r.returncode == 2
    assert "cannot render" in r.stderr


# ---------------------------------------------------------------------------
# top level
# ---------------------------------------------------------------------------

def test_no_command_is_usage_error():
    r = cli()
    assert r.returncode == 2


def test_unknown_command_is_usage_error():
    r = cli("explore")
    assert r.returncode == 2
