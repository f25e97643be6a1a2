"""Shortest bounded-curvature paths and tree planners over polygonal worlds.

Layers, lowest first: dubins (closed-form shortest paths between oriented
poses), geometry (polygonal worlds, conservative inflation, collision tests),
planner (RRT / RRT* steering along those paths), scenario (strict JSON world
and config files), bench (deterministic sweeps), svg + cli (artifacts).
"""

from .bench import (BenchRecord, BenchSpec, format_summary, load_bench_spec,
                    read_records, run_bench, summarize, write_records)
from .dubins import (CanonicalProblem, DegenerateProblem, DubinsPath,
                     DubinsWord, NoPath, OutOfRange, Pose, SegmentType,
                     SteeringOutOfRange, VehicleParams, apply_segment,
                     from_canonical, integrate_controls, lengths_from_pose,
                     lengths_to_pose, norm_angle, path_controls, sample_path,
                     shortest_path, to_canonical, word_params, wrap_angle)
from .geometry import (Bounds, Environment, InvalidPolygon, Polygon, inflate,
                       path_in_collision, point_in_collision)
from .planner import (InvalidGoal, InvalidStart, PlannerConfig, PlanResult,
                      PlanStats, Solution, TreeAuditError, TreeNode,
                      audit_tree, extract_solution, nearest, rrt_plan,
                      rrt_star_plan, sample_pose, steer)
from .scenario import (Scenario, ScenarioError, load_scenario, save_scenario,
                       scenario_from_dict, scenario_to_dict)
from .svg import render_svg

__all__ = [
    "BenchRecord", "BenchSpec", "Bounds", "CanonicalProblem",
    "DegenerateProblem", "DubinsPath", "DubinsWord", "Environment",
    "InvalidGoal", "InvalidPolygon", "InvalidStart", "NoPath", "OutOfRange",
    "PlanResult", "PlanStats", "PlannerConfig", "Polygon", "Pose",
    "Scenario", "ScenarioError", "SegmentType", "Solution",
    "SteeringOutOfRange", "TreeAuditError", "TreeNode", "VehicleParams",
    "apply_segment", "audit_tree", "extract_solution", "format_summary",
    "from_canonical", "inflate", "integrate_controls", "lengths_from_pose",
    "lengths_to_pose", "load_bench_spec", "load_scenario", "nearest",
    "norm_angle", "path_controls", "path_in_collision", "point_in_collision",
    "read_records", "render_svg", "rrt_plan", "rrt_star_plan", "run_bench",
    "sample_path", "sample_pose", "save_scenario", "scenario_from_dict",
    "scenario_to_dict", "shortest_path", "steer", "summarize", "to_canonical",
    "word_params", "wrap_angle", "write_records",
]
