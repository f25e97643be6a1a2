#!/usr/bin/env python3
"""Plan each shipped scenario with both algorithms and write SVG figures."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from dubinsplan import load_scenario, render_svg, rrt_plan, rrt_star_plan

REPO = Path(__file__).resolve().parents[1]
PLANNERS = {"rrt": rrt_plan, "rrt-star": rrt_star_plan}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default=str(REPO / "figures"))
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--scenarios", nargs="*",
                    default=["block", "maze", "forest"])
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name in args.scenarios:
        scenario = load_scenario(REPO / "scenarios" / f"{name}.json")
        for alg, plan in PLANNERS.items():
            from dataclasses import replace
            config = replace(scenario.planner, seed=args.seed)
            result = plan(scenario.environment, scenario.start, scenario.goal,
                          config)
            solved = result.solution is not None
            svg = render_svg(scenario.environment, result.tree,
                             result.solution.samples if solved else None,
                             scenario.start, scenario.goal)
            path = out / f"{name}_{alg}.svg"
            path.write_text(svg)
            length = f"{result.solution.total_length:.3f}" if solved else "unsolved"
            print(f"{path}  ({length})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
