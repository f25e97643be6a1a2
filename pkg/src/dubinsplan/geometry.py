"""Polygonal worlds: obstacle inflation and collision queries.

Obstacles are simple CCW polygons inside a rectangular boundary. Collision is
tested against obstacles grown by the vehicle radius, where the grow step is
a Minkowski sum with a regular 16-gon circumscribed about the true disc, so
the inflated set never under-approximates the swept vehicle. Collision
semantics are closed: a point on an inflated boundary collides, points on the
world boundary do not.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from shapely.geometry import MultiPoint
from shapely.geometry import Polygon as _ShapelyPolygon
from shapely.ops import unary_union

from .dubins import DubinsPath, sample_path

# Points within this distance of an inflated boundary are treated as touching
# it; keeps tangent queries unambiguous under roundoff.
BOUNDARY_TOL = 1e-9


class InvalidPolygon(ValueError):
    """Polygon is degenerate or self-intersecting."""


@dataclass(frozen=True, slots=True)
class Bounds:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self):
        vals = (self.xmin, self.ymin, self.xmax, self.ymax)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"bounds must be finite, got {self!r}")
        if self.xmax <= self.xmin or self.ymax <= self.ymin:
            raise ValueError(f"bounds must have positive extent, got {self!r}")

    def contains(self, x: float, y: float) -> bool:
        return self.xmin <= x <= self.xmax and self.ymin <= y <= self.ymax


def _orient(ax, ay, bx, by, cx, cy) -> float:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _on_segment(ax, ay, bx, by, px, py) -> bool:
    return (min(ax, bx) <= px <= max(ax, bx)
            and min(ay, by) <= py <= max(ay, by))


def _segments_intersect(a, b, c, d) -> bool:
    """Closed-segment intersection test (shared endpoints count)."""
    d1 = _orient(c[0], c[1], d[0], d[1], a[0], a[1])
    d2 = _orient(c[0], c[1], d[0], d[1], b[0], b[1])
    d3 = _orient(a[0], a[1], b[0], b[1], c[0], c[1])
    d4 = _orient(a[0], a[1], b[0], b[1], d[0], d[1])
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != d2 and d3 != d4:
        return True
    if d1 == 0 and _on_segment(c[0], c[1], d[0], d[1], a[0], a[1]):
        return True
    if d2 == 0 and _on_segment(c[0], c[1], d[0], d[1], b[0], b[1]):
        return True
    if d3 == 0 and _on_segment(a[0], a[1], b[0], b[1], c[0], c[1]):
        return True
    if d4 == 0 and _on_segment(a[0], a[1], b[0], b[1], d[0], d[1]):
        return True
    return False


@dataclass(frozen=True)
class Polygon:
    """Simple polygon; vertex order is normalized to CCW on construction."""

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        verts = tuple((float(x), float(y)) for x, y in self.vertices)
        if len(verts) < 3:
            raise InvalidPolygon(f"need at least 3 vertices, got {len(verts)}")
        for x, y in verts:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise InvalidPolygon("vertices must be finite")
        if len(set(verts)) != len(verts):
            raise InvalidPolygon("repeated vertex")
        area2 = 0.0
        n = len(verts)
        for i in range(n):
            x1, y1 = verts[i]
            x2, y2 = verts[(i + 1) % n]
            area2 += x1 * y2 - x2 * y1
        if area2 == 0.0:
            raise InvalidPolygon("zero-area polygon")
        if area2 < 0.0:
            verts = verts[::-1]
        # Non-adjacent edges must not touch.
        edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if j == i + 1 or (i == 0 and j == n - 1):
                    continue
                if _segments_intersect(*edges[i], *edges[j]):
                    raise InvalidPolygon(f"edges {i} and {j} intersect")
        object.__setattr__(self, "vertices", verts)

    @property
    def area(self) -> float:
        total = 0.0
        n = len(self.vertices)
        for i in range(n):
            x1, y1 = self.vertices[i]
            x2, y2 = self.vertices[(i + 1) % n]
            total += x1 * y2 - x2 * y1
        return 0.5 * total


def _disc_polygon(radius: float, sides: int = 16) -> list[tuple[float, float]]:
    # Circumradius such that the faces are tangent to the true disc: the
    # polygon contains the disc, which is what makes inflation conservative.
    circ = radius / math.cos(math.pi / sides)
    return [(circ * math.cos((2 * k + 1) * math.pi / sides),
             circ * math.sin((2 * k + 1) * math.pi / sides))
            for k in range(sides)]


def inflate(obstacles: list[Polygon], radius: float) -> list[Polygon]:
    """Minkowski sum of each obstacle with the circumscribed 16-gon disc.

    Output is index-aligned with the input. Interior pockets that an
    inflation seals off are filled (treated as blocked). radius = 0 returns
    the obstacles unchanged.
    """
    if radius < 0.0 or not math.isfinite(radius):
        raise ValueError(f"inflation radius must be >= 0, got {radius}")
    if radius == 0.0:
        return list(obstacles)
    disc = _disc_polygon(radius)
    out = []
    for poly in obstacles:
        verts = poly.vertices
        n = len(verts)
        pieces = [_ShapelyPolygon(verts)]
        for i in range(n):
            ax, ay = verts[i]
            bx, by = verts[(i + 1) % n]
            # segment (+) convex disc polygon = hull of both translated copies
            pts = [(ax + gx, ay + gy) for gx, gy in disc]
            pts += [(bx + gx, by + gy) for gx, gy in disc]
            pieces.append(MultiPoint(pts).convex_hull)
        merged = unary_union(pieces)
        if merged.geom_type != "Polygon":
            raise InvalidPolygon(
                f"inflation produced a {merged.geom_type}; obstacle is not simple")
        ring = list(merged.exterior.coords)[:-1]
        out.append(Polygon(tuple(ring)))
    return out


@dataclass(frozen=True)
class Environment:
    """World bounds plus raw and inflated obstacles.

    Collision queries run against the inflated set; the raw polygons are kept
    for rendering and audits. Every obstacle vertex must lie inside bounds
    (the inflated footprint may poke past them).
    """

    bounds: Bounds
    obstacles: tuple[Polygon, ...]
    inflation_radius: float
    inflated: tuple[Polygon, ...] = field(init=False, compare=False)
    _poly_data: list = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        obstacles = tuple(self.obstacles)
        for k, poly in enumerate(obstacles):
            for x, y in poly.vertices:
                if not self.bounds.contains(x, y):
                    raise ValueError(
                        f"obstacle {k} vertex ({x}, {y}) outside bounds {self.bounds}")
        object.__setattr__(self, "obstacles", obstacles)
        object.__setattr__(self, "inflated",
                           tuple(inflate(list(obstacles), self.inflation_radius)))
        data = []
        for poly in self.inflated:
            vx = np.array([v[0] for v in poly.vertices])
            vy = np.array([v[1] for v in poly.vertices])
            x1, y1 = vx, vy
            x2, y2 = np.roll(vx, -1), np.roll(vy, -1)
            ex, ey = x2 - x1, y2 - y1
            ee = ex * ex + ey * ey
            bbox = (vx.min() - BOUNDARY_TOL, vy.min() - BOUNDARY_TOL,
                    vx.max() + BOUNDARY_TOL, vy.max() + BOUNDARY_TOL)
            data.append((x1, y1, x2, y2, ex, ey, ee, bbox))
        object.__setattr__(self, "_poly_data", data)

    def points_in_collision(self, px: np.ndarray, py: np.ndarray) -> np.ndarray:
        """Vectorized closed-set collision mask for point arrays."""
        px = np.asarray(px, float)
        py = np.asarray(py, float)
        b = self.bounds
        hit = (px < b.xmin) | (px > b.xmax) | (py < b.ymin) | (py > b.ymax)
        for x1, y1, x2, y2, ex, ey, ee, bbox in self._poly_data:
            sel = np.flatnonzero(~hit & (px >= bbox[0]) & (px <= bbox[2])
                                 & (py >= bbox[1]) & (py <= bbox[3]))
            if sel.size == 0:
                continue
            qx = px[sel][:, None]
            qy = py[sel][:, None]
            cross = (y1 > qy) != (y2 > qy)
            with np.errstate(divide="ignore", invalid="ignore"):
                xint = x1 + (qy - y1) * ex / ey
            inside = (np.sum(cross & (qx < xint), axis=1) % 2) == 1
            t = np.clip(((qx - x1) * ex + (qy - y1) * ey) / ee, 0.0, 1.0)
            ddx = qx - (x1 + t * ex)
            ddy = qy - (y1 + t * ey)
            near = np.min(ddx * ddx + ddy * ddy, axis=1) <= BOUNDARY_TOL * BOUNDARY_TOL
            hit[sel] = inside | near
        return hit


def point_in_collision(env: Environment, point: tuple[float, float]) -> bool:
    """True iff the point is outside bounds or inside/on an inflated obstacle."""
    return bool(env.points_in_collision(np.array([point[0]]),
                                        np.array([point[1]]))[0])


def path_in_collision(env: Environment, path: DubinsPath, resolution: float) -> bool:
    """Sample the path at arc-length steps <= resolution and test every sample.

    Endpoints are always included. Sampling uses nested power-of-two grids
    (see sample_path), so any sample taken at a coarse resolution is also
    taken at every finer one.
    """
    pts = sample_path(path, resolution)
    return bool(env.points_in_collision(pts[:, 1], pts[:, 2]).any())
