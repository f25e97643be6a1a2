"""Command-line front end.

Commands:
    dubins  X Y THETA X Y THETA   six-word table plus the winning path
    plan    SCENARIO              run one planner, write artifacts
    bench   SPEC                  run a sweep, write records and summary
    render  RESULT.json           re-render the SVG from saved artifacts

Exit codes: 0 success, 2 invalid input (bad numbers, bad scenario, colliding
start/goal, bad config override), 3 planner finished without a solution.
All randomness is seeded, so identical invocations produce identical files;
timing appears only in stats/summary text, never in record files.
"""

import argparse
import json
import math
import sys
import time
from dataclasses import replace
from pathlib import Path

import numpy as np

from .bench import format_summary, load_bench_spec, run_bench, summarize, write_records
from .dubins import (DegenerateProblem, DubinsPath, DubinsWord, Pose,
                     from_canonical, shortest_path, to_canonical, word_params)
from .planner import (InvalidGoal, InvalidStart, PlannerConfig, PlanResult,
                      TreeNode, extract_solution, rrt_plan, rrt_star_plan)
from .scenario import (Scenario, ScenarioError, load_scenario,
                       scenario_from_dict, scenario_to_dict)
from .svg import render_svg

_PLANNERS = {"rrt": rrt_plan, "rrt-star": rrt_star_plan}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dubinsplan",
        description="Bounded-curvature shortest paths and tree planners.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dubins", help="shortest path between two poses")
    for name in ("x1", "y1", "theta1", "x2", "y2", "theta2"):
        p.add_argument(name, type=float)
    p.add_argument("--rho", type=float, default=1.0, help="turning radius")
    p.add_argument("--degrees", action="store_true",
                   help="headings are given in degrees")
    p.add_argument("--samples", type=int, default=0,
                   help="write a CSV with this many sample intervals")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=_cmd_dubins)

    p = sub.add_parser("plan", help="plan a scenario")
    p.add_argument("scenario")
    p.add_argument("--algorithm", choices=sorted(_PLANNERS), required=True)
    p.add_argument("--seed", type=int, default=None, help="override config seed")
    p.add_argument("--n-iter", type=int, default=None, help="override iteration budget")
    p.add_argument("--resolution", type=float, default=None,
                   help="override collision resolution")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=_cmd_plan)

    p = sub.add_parser("bench", help="run a benchmark spec")
    p.add_argument("spec")
    p.add_argument("--out-dir", default=None,
                   help="artifact directory (default: spec output field)")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("render", help="re-render the SVG from a result file")
    p.add_argument("result")
    p.add_argument("--out", default=None, help="SVG path (default: alongside result)")
    p.add_argument("--resolution", type=float, default=0.1,
                   help="edge sampling spacing")
    p.set_defaults(func=_cmd_render)
    return parser


def _cmd_dubins(args) -> int:
    if args.rho <= 0.0:
        print(f"error: rho must be positive, got {args.rho}", file=sys.stderr)
        return 2
    th1, th2 = args.theta1, args.theta2
    if args.degrees:
        th1, th2 = math.radians(th1), math.radians(th2)
    start = Pose(args.x1, args.y1, th1)
    goal = Pose(args.x2, args.y2, th2)
    best = shortest_path(start, goal, args.rho)
    try:
        problem = to_canonical(start, goal, args.rho)
    except DegenerateProblem:
        problem = None
        print("degenerate same-pose problem; zero-length path")
    if problem is not None:
        print(f"{'word':<6} {'length':>12} {'t':>10} {'p':>10} {'q':>10}")
        for word in DubinsWord:
            params = word_params(word, problem)
            if params is None:
                print(f"{word.name:<6} {'infeasible':>12}")
            else:
                t, p, q = params
                print(f"{word.name:<6} {(t + p + q) * args.rho:>12.6f} "
                      f"{t:>10.6f} {p:>10.6f} {q:>10.6f}")
    print(f"winner: {best.word.name} length {best.length:.6f}")
    if args.samples > 0:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        csv_path = out / "dubins_path.csv"
        with open(csv_path, "w") as fh:
            fh.write("s,x,y,theta\n")
            for s in np.linspace(0.0, best.length, args.samples + 1):
                pose = from_canonical(best, float(s))
                fh.write(f"{s:.9g},{pose.x:.9g},{pose.y:.9g},{pose.theta:.9g}\n")
        print(f"samples written to {csv_path}")
    return 0


def _result_document(scenario: Scenario, algorithm: str, config: PlannerConfig,
                     result: PlanResult, wall: float) -> dict:
    effective = replace(scenario, planner=config)
    nodes = []
    for n in result.tree:
        edge = n.edge
        nodes.append([
            n.parent,
            None if edge is None else edge.word.name,
            *((0.0, 0.0, 0.0) if edge is None else edge.params),
            n.pose.x, n.pose.y, n.pose.theta, n.cost])
    return {
        "algorithm": algorithm,
        "scenario": scenario_to_dict(effective),
        "solved": result.solution is not None,
        "iterations_used": result.iterations_used,
        "wall_time_s": wall,
        "stats": {"nodes": result.stats.nodes, "rewires": result.stats.rewires,
                  "collision_checks": result.stats.collision_checks},
        "solution": None if result.solution is None else {
            "node_ids": list(result.solution.node_ids),
            "total_length": result.solution.total_length},
        "tree": nodes,
    }


def _write_solution_csv(path, samples: np.ndarray) -> None:
    with open(path, "w") as fh:
        fh.write("s,x,y,theta\n")
        for s, x, y, th in samples:
            fh.write(f"{s:.9g},{x:.9g},{y:.9g},{th:.9g}\n")


def _cmd_plan(args) -> int:
    try:
        scenario = load_scenario(args.scenario)
        config = scenario.planner
        if args.seed is not None:
            config = replace(config, seed=args.seed)
        if args.n_iter is not None:
            config = replace(config, n_iter=args.n_iter)
        if args.resolution is not None:
            config = replace(config, collision_resolution=args.resolution)
        t0 = time.perf_counter()
        result = _PLANNERS[args.algorithm](
            scenario.environment, scenario.start, scenario.goal, config)
        wall = time.perf_counter() - t0
    except (ScenarioError, InvalidStart, InvalidGoal, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    solved = result.solution is not None
    with open(out / "result.json", "w") as fh:
        json.dump(_result_document(scenario, args.algorithm, config, result, wall),
                  fh, allow_nan=False)
        fh.write("\n")
    length = result.solution.total_length if solved else None
    stats_lines = [
        f"algorithm: {args.algorithm}",
        f"scenario: {args.scenario}",
        f"seed: {config.seed}",
        f"solved: {'true' if solved else 'false'}",
        f"path_length: {'' if length is None else repr(length)}",
        f"nodes: {result.stats.nodes}",
        f"rewires: {result.stats.rewires}",
        f"collision_checks: {result.stats.collision_checks}",
        f"iterations: {result.iterations_used}",
        f"wall_time_s: {wall:.3f}",
    ]
    (out / "stats.txt").write_text("\n".join(stats_lines) + "\n")
    if solved:
        _write_solution_csv(out / "solution.csv", result.solution.samples)
    svg = render_svg(scenario.environment, result.tree,
                     result.solution.samples if solved else None,
                     scenario.start, scenario.goal)
    (out / "plan.svg").write_text(svg)
    if solved:
        print(f"solved: length {length:.6f}, {result.stats.nodes} nodes, "
              f"artifacts in {out}")
        return 0
    print(f"no solution within {config.n_iter} iterations, artifacts in {out}")
    return 3


def _cmd_bench(args) -> int:
    try:
        spec = load_bench_spec(args.spec)
        out = Path(args.out_dir if args.out_dir is not None
                   else spec.output if spec.output is not None else ".")
        records = run_bench(spec, workers=args.workers)
    except (ScenarioError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    out.mkdir(parents=True, exist_ok=True)
    write_records(records, out / "records.csv")
    summary = format_summary(summarize(records))
    (out / "summary.txt").write_text(summary + "\n")
    print(summary)
    print(f"{len(records)} records written to {out / 'records.csv'}")
    return 0


def _cmd_render(args) -> int:
    try:
        with open(args.result) as fh:
            doc = json.load(fh)
        scenario = scenario_from_dict(doc["scenario"])
        rho = scenario.planner.rho
        rows = doc["tree"]
        # rewired nodes may point at a later parent, so build poses first
        poses = [Pose(row[5], row[6], row[7]) for row in rows]
        tree: list[TreeNode] = []
        for i, row in enumerate(rows):
            parent, word, t, p, q = row[:5]
            edge = None
            if parent is not None:
                edge = DubinsPath(DubinsWord[word], (t, p, q), rho, poses[parent])
            tree.append(TreeNode(i, poses[i], parent, edge, row[8]))
        samples = None
        if doc["solution"] is not None:
            goal_id = doc["solution"]["node_ids"][-1]
            samples = extract_solution(
                tree, [goal_id], scenario.planner.collision_resolution).samples
    except (OSError, json.JSONDecodeError, ScenarioError, KeyError,
            IndexError, TypeError, ValueError) as e:
        print(f"error: cannot render {args.result}: {e}", file=sys.stderr)
        return 2
    out = Path(args.out) if args.out else Path(args.result).with_suffix(".svg")
    svg = render_svg(scenario.environment, tree, samples,
                     scenario.start, scenario.goal, resolution=args.resolution)
    out.write_text(svg)
    print(f"rendered {out}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
