"""Scenario files: world, start/goal poses, and planner settings as JSON.

The schema is strict so a benchmark can be traced to its exact inputs:
unknown keys are rejected at every level, NaN/Infinity literals are rejected,
and floats are written with repr (shortest form that round-trips exactly, at
least 15 significant digits). Layout:

    {
      "environment": {
        "bounds": {"xmin": ..., "ymin": ..., "xmax": ..., "ymax": ...},
        "inflation_radius": ...,
        "obstacles": [[[x, y], ...], ...]
      },
      "start": [x, y, theta],
      "goal": [x, y, theta],
      "planner": { ... any PlannerConfig field ... }   # optional
    }
"""

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path

from .dubins import Pose
from .geometry import Bounds, Environment, Polygon
from .planner import PlannerConfig


class ScenarioError(ValueError):
    """Scenario or bench-spec document failed validation."""


@dataclass(frozen=True)
class Scenario:
    environment: Environment
    start: Pose
    goal: Pose
    planner: PlannerConfig


def _reject_constant(token: str):
    raise ScenarioError(f"non-finite literal {token!r} is not allowed")


def _check_keys(obj, ctx: str, required: tuple[str, ...],
                optional: tuple[str, ...] = ()) -> None:
    if not isinstance(obj, dict):
        raise ScenarioError(f"{ctx}: expected an object")
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise ScenarioError(f"{ctx}: unknown keys {unknown}")
    missing = sorted(set(required) - set(obj))
    if missing:
        raise ScenarioError(f"{ctx}: missing keys {missing}")


def _number(value, ctx: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"{ctx}: expected a number, got {value!r}")
    return float(value)


def _integer(value, ctx: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioError(f"{ctx}: expected an integer, got {value!r}")
    return value


def _boolean(value, ctx: str) -> bool:
    if not isinstance(value, bool):
        raise ScenarioError(f"{ctx}: expected true/false, got {value!r}")
    return value


def _pose(value, ctx: str) -> Pose:
    if not isinstance(value, list) or len(value) != 3:
        raise ScenarioError(f"{ctx}: expected [x, y, theta]")
    x, y, th = (_number(v, f"{ctx}[{i}]") for i, v in enumerate(value))
    try:
        return Pose(x, y, th)
    except ValueError as e:
        raise ScenarioError(f"{ctx}: {e}") from e


def _vertex(value, ctx: str) -> tuple[float, float]:
    if not isinstance(value, list) or len(value) != 2:
        raise ScenarioError(f"{ctx}: expected [x, y]")
    return (_number(value[0], f"{ctx}[0]"), _number(value[1], f"{ctx}[1]"))


def _environment(doc, ctx: str) -> Environment:
    _check_keys(doc, ctx, ("bounds", "inflation_radius", "obstacles"))
    b = doc["bounds"]
    _check_keys(b, f"{ctx}.bounds", ("xmin", "ymin", "xmax", "ymax"))
    radius = _number(doc["inflation_radius"], f"{ctx}.inflation_radius")
    raw = doc["obstacles"]
    if not isinstance(raw, list):
        raise ScenarioError(f"{ctx}.obstacles: expected a list")
    try:
        bounds = Bounds(*(_number(b[k], f"{ctx}.bounds.{k}")
                          for k in ("xmin", "ymin", "xmax", "ymax")))
        obstacles = []
        for i, verts in enumerate(raw):
            if not isinstance(verts, list):
                raise ScenarioError(f"{ctx}.obstacles[{i}]: expected a vertex list")
            obstacles.append(Polygon(tuple(
                _vertex(v, f"{ctx}.obstacles[{i}][{j}]")
                for j, v in enumerate(verts))))
        return Environment(bounds, tuple(obstacles), radius)
    except ScenarioError:
        raise
    except ValueError as e:
        raise ScenarioError(f"{ctx}: {e}") from e


_CONFIG_FIELDS = {f.name: f for f in dataclasses.fields(PlannerConfig)}


def _planner_config(doc, ctx: str) -> PlannerConfig:
    _check_keys(doc, ctx, (), tuple(_CONFIG_FIELDS))
    kwargs = {}
    for key, value in doc.items():
        fctx = f"{ctx}.{key}"
        if key in ("n_iter", "seed"):
            kwargs[key] = _integer(value, fctx)
        elif key in ("accelerated_nearest", "choose_parent", "goal_facing_heading"):
            kwargs[key] = _boolean(value, fctx)
        elif key == "nearest_metric":
            if not isinstance(value, str):
                raise ScenarioError(f"{fctx}: expected a string")
            kwargs[key] = value
        elif key == "step_max":
            kwargs[key] = None if value is None else _number(value, fctx)
        elif key == "goal_tolerance":
            if not isinstance(value, list) or len(value) != 2:
                raise ScenarioError(f"{fctx}: expected [position, heading]")
            kwargs[key] = (_number(value[0], f"{fctx}[0]"),
                           _number(value[1], f"{fctx}[1]"))
        else:
            kwargs[key] = _number(value, fctx)
    try:
        return PlannerConfig(**kwargs)
    except ValueError as e:
        raise ScenarioError(f"{ctx}: {e}") from e


def scenario_from_dict(doc) -> Scenario:
    """Validate a parsed scenario document; rejects unknown keys anywhere."""
    _check_keys(doc, "scenario", ("environment", "start", "goal"), ("planner",))
    env = _environment(doc["environment"], "environment")
    start = _pose(doc["start"], "start")
    goal = _pose(doc["goal"], "goal")
    planner = _planner_config(doc.get("planner", {}), "planner")
    return Scenario(env, start, goal, planner)


def scenario_to_dict(scenario: Scenario) -> dict:
    env = scenario.environment
    return {
        "environment": {
            "bounds": {"xmin": env.bounds.xmin, "ymin": env.bounds.ymin,
                       "xmax": env.bounds.xmax, "ymax": env.bounds.ymax},
            "inflation_radius": env.inflation_radius,
            "obstacles": [[[x, y] for x, y in p.vertices] for p in env.obstacles],
        },
        "start": [scenario.start.x, scenario.start.y, scenario.start.theta],
        "goal": [scenario.goal.x, scenario.goal.y, scenario.goal.theta],
        "planner": {f: _jsonable(getattr(scenario.planner, f)) for f in _CONFIG_FIELDS},
    }


def _jsonable(value):
    return list(value) if isinstance(value, tuple) else value


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        with open(path) as fh:
            doc = json.load(fh, parse_constant=_reject_constant)
    except OSError as e:
        raise ScenarioError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ScenarioError(f"{path}: invalid JSON: {e}") from e
    return scenario_from_dict(doc)


def save_scenario(scenario: Scenario, path) -> None:
    with open(path, "w") as fh:
        json.dump(scenario_to_dict(scenario), fh, indent=2, allow_nan=False)
        fh.write("\n")
