"""Static SVG rendering of a world, a planner tree, and a solution path.

The drawing is plain SVG 1.1 built with ElementTree, so output is always
well-formed XML and attribute order is the insertion order (deterministic).
World y points up; SVG y points down; the flip happens in the coordinate
mapping so markers and text stay upright. Raw obstacles are drawn filled,
their inflated outlines dashed, each tree edge is its own polyline, and the
solution (when present) is exactly one element with class "solution".
"""

import math
from xml.etree import ElementTree as ET

import numpy as np

from .dubins import Pose, sample_path
from .geometry import Environment
from .planner import TreeNode

_OBSTACLE_FILL = "#9196ad"
_INFLATED_STROKE = "#9196ad"
_EDGE_STROKE = "#3a9d6c"
_SOLUTION_STROKE = "#d03a3a"
_START_FILL = "#1f5fd0"
_GOAL_FILL = "#d03a3a"


class _Frame:
    """World-to-pixel mapping with a margin wide enough for inflated
    footprints that poke past the bounds."""

    def __init__(self, env: Environment, width: float):
        b = env.bounds
        margin = 0.04 * max(b.xmax - b.xmin, b.ymax - b.ymin) + env.inflation_radius
        self.x0 = b.xmin - margin
        self.y1 = b.ymax + margin
        world_w = (b.xmax - b.xmin) + 2.0 * margin
        world_h = (b.ymax - b.ymin) + 2.0 * margin
        self.scale = width / world_w
        self.width = width
        self.height = world_h * self.scale

    def pt(self, x: float, y: float) -> tuple[float, float]:
        return ((x - self.x0) * self.scale, (self.y1 - y) * self.scale)

    def points(self, xs, ys) -> str:
        return " ".join(f"{px:.2f},{py:.2f}"
                        for px, py in (self.pt(x, y) for x, y in zip(xs, ys)))


def _pose_marker(parent, frame: _Frame, pose: Pose, fill: str, label: str) -> None:
    px, py = frame.pt(pose.x, pose.y)
    g = ET.SubElement(parent, "g", {"class": label})
    ET.SubElement(g, "circle", {
        "cx": f"{px:.2f}", "cy": f"{py:.2f}", "r": "5",
        "fill": fill, "stroke": "white", "stroke-width": "1.5"})
    hx = px + 14.0 * math.cos(pose.theta)
    hy = py - 14.0 * math.sin(pose.theta)
    ET.SubElement(g, "line", {
        "x1": f"{px:.2f}", "y1": f"{py:.2f}", "x2": f"{hx:.2f}", "y2": f"{hy:.2f}",
        "stroke": fill, "stroke-width": "2"})


def render_svg(env: Environment, tree: list[TreeNode] | None,
               solution_samples: np.ndarray | None, start: Pose, goal: Pose,
               resolution: float = 0.1, width: float = 640.0) -> str:
    """Compose the SVG document and return it as an XML string."""
    frame = _Frame(env, width)
    root = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": f"{frame.width:.0f}", "height": f"{frame.height:.0f}",
        "viewBox": f"0 0 {frame.width:.2f} {frame.height:.2f}"})
    ET.SubElement(root, "rect", {
        "x": "0", "y": "0", "width": f"{frame.width:.2f}",
        "height": f"{frame.height:.2f}", "fill": "white"})
    bx0, by1 = frame.pt(env.bounds.xmin, env.bounds.ymin)
    bx1, by0 = frame.pt(env.bounds.xmax, env.bounds.ymax)
    ET.SubElement(root, "rect", {
        "x": f"{bx0:.2f}", "y": f"{by0:.2f}", "width": f"{bx1 - bx0:.2f}",
        "height": f"{by1 - by0:.2f}", "fill": "none", "stroke": "#444",
        "stroke-width": "1.5", "class": "bounds"})
    for poly in env.inflated:
        xs, ys = zip(*poly.vertices)
        ET.SubElement(root, "polygon", {
            "points": frame.points(xs, ys), "fill": "none",
            "stroke": _INFLATED_STROKE, "stroke-width": "1",
            "stroke-dasharray": "5 4", "class": "inflated"})
    for poly in env.obstacles:
        xs, ys = zip(*poly.vertices)
        ET.SubElement(root, "polygon", {
            "points": frame.points(xs, ys), "fill": _OBSTACLE_FILL,
            "stroke": "none", "class": "obstacle"})
    if tree:
        g = ET.SubElement(root, "g", {
            "class": "tree", "fill": "none", "stroke": _EDGE_STROKE,
            "stroke-width": "0.8", "opacity": "0.7"})
        for node in tree:
            if node.edge is None:
                continue
            pts = sample_path(node.edge, resolution)
            ET.SubElement(g, "polyline", {
                "points": frame.points(pts[:, 1], pts[:, 2]), "class": "edge"})
    if solution_samples is not None and len(solution_samples):
        ET.SubElement(root, "polyline", {
            "points": frame.points(solution_samples[:, 1], solution_samples[:, 2]),
            "fill": "none", "stroke": _SOLUTION_STROKE, "stroke-width": "2.5",
            "class": "solution"})
    _pose_marker(root, frame, start, _START_FILL, "start")
    _pose_marker(root, frame, goal, _GOAL_FILL, "goal")
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            + ET.tostring(root, encoding="unicode") + "\n")
