"""Shortest bounded-curvature paths between planar poses.

A path is one of six words (LSL, RSR, LSR, RSL, RLR, LRL) made of unit-radius
left arcs, right arcs and straight runs. Every query is reduced to a canonical
frame where the start sits at (0, 0, alpha), the goal at (d, 0, beta) and the
turning radius is 1; closed forms give the three segment lengths per word, and
the cheapest word wins. Each candidate is verified by replaying its segments,
so a formula that fails to land on the goal is discarded rather than trusted.

Also provided: arc-length interpolation of a solved path, a fixed-step RK4
integrator for steering-rate control sequences (used to confirm that solved
paths are drivable by a wheelbase/steering-angle vehicle model), and batch
length kernels used by the planners for nearest-neighbour queries.

Angles are radians in [0, 2*pi). Lengths are in world units.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

# Positions closer than this (relative to the turning radius) are treated as
# coincident when building the canonical frame.
DEGENERATE_EPS = 1e-12

# Radicands and arccos arguments may drift past their domain by roundoff at
# feasibility boundaries; violations within this slack are clamped.
CLAMP_EPS = 1e-12

# A reconstructed endpoint may miss the canonical goal by at most this much
# (position in units of the radius, heading in radians) for the word to be
# considered realized.
RECONSTRUCT_TOL = 1e-6


class DegenerateProblem(ValueError):
    """Start and goal positions coincide; the canonical frame is undefined."""


class OutOfRange(ValueError):
    """Arc-length query outside [0, path.length]."""


class SteeringOutOfRange(ValueError):
    """A control asks for more steering than the vehicle allows."""


class NoPath(RuntimeError):
    """No realizable word connects the two poses."""


def norm_angle(theta: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    r = math.fmod(theta, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    if r >= TWO_PI:  # fmod/add can round up to exactly 2*pi
        r = 0.0
    return r


def wrap_angle(theta: float) -> float:
    """Reduce an angle difference to [-pi, pi)."""
    return (theta + math.pi) % TWO_PI - math.pi


def norm_angle_array(theta: np.ndarray) -> np.ndarray:
    r = np.mod(theta, TWO_PI)
    r[r >= TWO_PI] = 0.0
    return r


@dataclass(frozen=True, slots=True)
class Pose:
    """Planar position plus heading; heading is normalized on construction."""

    x: float
    y: float
    theta: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.theta)):
            raise ValueError(f"pose components must be finite, got {self!r}")
        object.__setattr__(self, "theta", norm_angle(self.theta))


class SegmentType(enum.Enum):
    LEFT = "L"
    STRAIGHT = "S"
    RIGHT = "R"


class DubinsWord(enum.Enum):
    """Candidate segment sequences, in fixed tie-break order."""

    LSL = "LSL"
    RSR = "RSR"
    LSR = "LSR"
    RSL = "RSL"
    RLR = "RLR"
    LRL = "LRL"

    @property
    def segments(self) -> tuple[SegmentType, SegmentType, SegmentType]:
        a, b, c = self.value
        return (SegmentType(a), SegmentType(b), SegmentType(c))


# Tie-break rank equals definition order.
_WORD_RANK = {w: i for i, w in enumerate(DubinsWord)}


@dataclass(frozen=True, slots=True)
class CanonicalProblem:
    """Unit-radius query: start (0, 0, alpha), goal (d, 0, beta)."""

    d: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not math.isfinite(self.d) or self.d < 0.0:
            raise ValueError(f"nondimensional distance must be >= 0, got {self.d}")
        object.__setattr__(self, "alpha", norm_angle(self.alpha))
        object.__setattr__(self, "beta", norm_angle(self.beta))


def to_canonical(start: Pose, goal: Pose, rho: float) -> CanonicalProblem:
    """Scale by 1/rho and rotate so the goal lies on the +x axis of the start.

    Raises DegenerateProblem when the positions coincide (within
    DEGENERATE_EPS * rho); the baseline direction is undefined there and the
    caller must decide how to handle same-position planning.
    """
    if rho <= 0.0 or not math.isfinite(rho):
        raise ValueError(f"turning radius must be positive, got {rho}")
    dx = goal.x - start.x
    dy = goal.y - start.y
    dist = math.hypot(dx, dy)
    if dist < DEGENERATE_EPS * rho:
        raise DegenerateProblem(
            f"start and goal positions coincide within {DEGENERATE_EPS} * rho"
        )
    phi = math.atan2(dy, dx)
    return CanonicalProblem(dist / rho, start.theta - phi, goal.theta - phi)


def apply_segment(pose: tuple[float, float, float], segment: SegmentType,
                  v: float) -> tuple[float, float, float]:
    """Advance a unit-radius frame pose along one segment of length v >= 0.

    Arcs advance the heading by +v (left) or -v (right); the straight segment
    translates by v along the heading. The returned heading is *not*
    normalized so that successive applications stay exactly composable.
    """
    if v < 0.0:
        raise ValueError(f"segment length must be >= 0, got {v}")
    x, y, th = pose
    if segment is SegmentType.LEFT:
        return (x + math.sin(th + v) - math.sin(th),
                y - math.cos(th + v) + math.cos(th),
                th + v)
    if segment is SegmentType.RIGHT:
        return (x - math.sin(th - v) + math.sin(th),
                y + math.cos(th - v) - math.cos(th),
                th - v)
    return (x + v * math.cos(th), y + v * math.sin(th), th)


def _safe_sqrt(sq: float) -> float | None:
    if sq < 0.0:
        if sq < -CLAMP_EPS:
            return None
        sq = 0.0
    return math.sqrt(sq)


def _safe_acos(c: float) -> float | None:
    if c > 1.0:
        if c > 1.0 + CLAMP_EPS:
            return None
        c = 1.0
    elif c < -1.0:
        if c < -1.0 - CLAMP_EPS:
            return None
        c = -1.0
    return math.acos(c)


# Per-word closed forms. Mirror pairs (LSL/RSR, LSR/RSL, LRL/RLR) differ only
# in the sign of the 2*d*(sin alpha - sin beta) coupling term and in which of
# alpha/beta enters each arc length; the middle arc of a CCC word is always
# taken on the far side of the circle (2*pi - acos(...)), which is the branch
# that closes back onto the goal.

def _lsl(d, a, b, sa, ca, sb, cb, cab):
    p = _safe_sqrt(2.0 + d * d - 2.0 * cab + 2.0 * d * (sa - sb))
    if p is None:
        return None
    mid = math.atan2(cb - ca, d + sa - sb)
    return (norm_angle(mid - a), p, norm_angle(b - mid))


def _rsr(d, a, b, sa, ca, sb, cb, cab):
    p = _safe_sqrt(2.0 + d * d - 2.0 * cab + 2.0 * d * (sb - sa))
    if p is None:
        return None
    mid = math.atan2(ca - cb, d - sa + sb)
    return (norm_angle(a - mid), p, norm_angle(mid - b))


def _lsr(d, a, b, sa, ca, sb, cb, cab):
    p = _safe_sqrt(d * d - 2.0 + 2.0 * cab + 2.0 * d * (sa + sb))
    if p is None:
        return None
    mid = math.atan2(-ca - cb, d + sa + sb) - math.atan2(-2.0, p)
    return (norm_angle(mid - a), p, norm_angle(mid - b))


def _rsl(d, a, b, sa, ca, sb, cb, cab):
    p = _safe_sqrt(d * d - 2.0 + 2.0 * cab - 2.0 * d * (sa + sb))
    if p is None:
        return None
    mid = math.atan2(ca + cb, d - sa - sb) - math.atan2(2.0, p)
    return (norm_angle(a - mid), p, norm_angle(b - mid))


def _rlr(d, a, b, sa, ca, sb, cb, cab):
    c = (6.0 - d * d + 2.0 * cab + 2.0 * d * (sa - sb)) / 8.0
    acos_c = _safe_acos(c)
    if acos_c is None:
        return None
    p = norm_angle(TWO_PI - acos_c)
    t = norm_angle(a - math.atan2(ca - cb, d - sa + sb) + 0.5 * p)
    return (t, p, norm_angle(a - b - t + p))


def _lrl(d, a, b, sa, ca, sb, cb, cab):
    c = (6.0 - d * d + 2.0 * cab + 2.0 * d * (sb - sa)) / 8.0
    acos_c = _safe_acos(c)
    if acos_c is None:
        return None
    p = norm_angle(TWO_PI - acos_c)
    t = norm_angle(-a + math.atan2(cb - ca, d + sa - sb) + 0.5 * p)
    return (t, p, norm_angle(b - a - t + p))


_WORD_FUNCS = {
    DubinsWord.LSL: _lsl,
    DubinsWord.RSR: _rsr,
    DubinsWord.LSR: _lsr,
    DubinsWord.RSL: _rsl,
    DubinsWord.RLR: _rlr,
    DubinsWord.LRL: _lrl,
}


def word_params(word: DubinsWord, problem: CanonicalProblem) -> tuple[float, float, float] | None:
    """Segment lengths (t, p, q) for one word, or None when infeasible.

    Arc lengths are reduced to [0, 2*pi); the straight length is >= 0.
    Feasibility here means the closed form is defined; callers that need a
    guarantee should also replay the segments (see shortest_path).
    """
    d, a, b = problem.d, problem.alpha, problem.beta
    return _WORD_FUNCS[word](d, a, b, math.sin(a), math.cos(a),
                             math.sin(b), math.cos(b), math.cos(a - b))


def _canonical_endpoint(word: DubinsWord, params: tuple[float, float, float],
                        alpha: float) -> tuple[float, float, float]:
    pose = (0.0, 0.0, alpha)
    for seg, v in zip(word.segments, params):
        pose = apply_segment(pose, seg, v)
    return pose


def _realizes(word: DubinsWord, params: tuple[float, float, float],
              problem: CanonicalProblem) -> bool:
    x, y, th = _canonical_endpoint(word, params, problem.alpha)
    if math.hypot(x - problem.d, y) > RECONSTRUCT_TOL:
        return False
    return abs(wrap_angle(th - problem.beta)) <= RECONSTRUCT_TOL


@dataclass(frozen=True, slots=True)
class DubinsPath:
    """A solved word anchored at a world start pose.

    params are the nondimensional segment lengths (t, p, q); world length is
    (t + p + q) * rho by construction. The path is self-contained: word,
    params, rho and start fully determine the trajectory, so a truncated path
    remains valid even though its params no longer solve the original query.
    """

    word: DubinsWord
    params: tuple[float, float, float]
    rho: float
    start: Pose

    def __post_init__(self):
        if self.rho <= 0.0 or not math.isfinite(self.rho):
            raise ValueError(f"turning radius must be positive, got {self.rho}")
        t, p, q = self.params
        if t < 0.0 or p < 0.0 or q < 0.0:
            raise ValueError(f"segment lengths must be >= 0, got {self.params}")

    @property
    def length(self) -> float:
        t, p, q = self.params
        return (t + p + q) * self.rho


def shortest_path(start: Pose, goal: Pose, rho: float) -> DubinsPath:
    """Cheapest realizable word from start to goal at turning radius rho.

    All six words are evaluated; candidates whose segment replay misses the
    goal by more than RECONSTRUCT_TOL (scaled by rho) are discarded. Exact
    length ties keep the earliest word in DubinsWord order. A query whose
    start and goal coincide exactly returns a zero-length LSL path; a query
    with coincident positions but different headings is solved in a frame
    whose baseline direction is taken as 0.
    """
    if rho <= 0.0 or not math.isfinite(rho):
        raise ValueError(f"turning radius must be positive, got {rho}")
    dist = math.hypot(goal.x - start.x, goal.y - start.y)
    if dist < DEGENERATE_EPS * rho:
        if start.theta == goal.theta:
            return DubinsPath(DubinsWord.LSL, (0.0, 0.0, 0.0), rho, start)
        problem = CanonicalProblem(dist / rho, start.theta, goal.theta)
    else:
        problem = to_canonical(start, goal, rho)

    best: tuple[float, DubinsWord, tuple[float, float, float]] | None = None
    for word in DubinsWord:
        params = word_params(word, problem)
        if params is None or not _realizes(word, params, problem):
            continue
        total = params[0] + params[1] + params[2]
        if best is None or total < best[0]:
            best = (total, word, params)
    if best is None:
        raise NoPath(f"no realizable word from {start} to {goal} at rho={rho}")
    return DubinsPath(best[1], best[2], rho, start)


def from_canonical(path: DubinsPath, sample_s: float) -> Pose:
    """World pose at arc length sample_s along the path.

    The unit-radius segment operators are applied from the start pose and the
    displacement is scaled back by rho; sample_s = 0 returns the start pose
    exactly. Queries outside [0, length] (beyond a 1e-9 relative slack, which
    is clamped) raise OutOfRange.
    """
    total = path.length
    tol = 1e-9 * (1.0 + total)
    if sample_s < -tol or sample_s > total + tol:
        raise OutOfRange(f"arc length {sample_s} outside [0, {total}]")
    u = min(max(sample_s, 0.0), total) / path.rho
    pose = (0.0, 0.0, path.start.theta)
    for seg, v in zip(path.word.segments, path.params):
        w = min(u, v)  # u may exceed the remaining budget by an ulp
        pose = apply_segment(pose, seg, w)
        u -= w
        if u <= 0.0:
            break
    return Pose(path.start.x + path.rho * pose[0],
                path.start.y + path.rho * pose[1],
                norm_angle(pose[2]))


def sample_path(path: DubinsPath, spacing: float) -> np.ndarray:
    """Poses along the path at arc-length steps <= spacing.

    Returns an (n, 4) array of rows (s, x, y, theta) with both endpoints
    included. The step count is the smallest power of two whose step fits
    under spacing, so the sample set at any finer spacing is a superset of
    the sample set at a coarser one (nested grids).
    """
    if spacing <= 0.0:
        raise ValueError(f"spacing must be positive, got {spacing}")
    total = path.length
    if total <= 0.0:
        return np.array([[0.0, path.start.x, path.start.y, path.start.theta]])
    m = 1
    while total / m > spacing:
        m *= 2
    s = total * (np.arange(m + 1) / m)
    u = s / path.rho

    t, p, q = path.params
    edges = (t, t + p, t + p + q)
    # Assign each u to its segment; boundary samples land on either side of
    # the join and evaluate to the same pose by continuity.
    seg_idx = np.searchsorted(np.asarray(edges[:2]), u, side="right")
    np.clip(u, 0.0, edges[2], out=u)

    xs = np.empty_like(u)
    ys = np.empty_like(u)
    ths = np.empty_like(u)
    pose = (0.0, 0.0, path.start.theta)
    offset = 0.0
    for k, (seg, v) in enumerate(zip(path.word.segments, path.params)):
        mask = seg_idx == k
        if mask.any():
            w = u[mask] - offset
            x0, y0, th0 = pose
            if seg is SegmentType.LEFT:
                xs[mask] = x0 + np.sin(th0 + w) - math.sin(th0)
                ys[mask] = y0 - np.cos(th0 + w) + math.cos(th0)
                ths[mask] = th0 + w
            elif seg is SegmentType.RIGHT:
                xs[mask] = x0 - np.sin(th0 - w) + math.sin(th0)
                ys[mask] = y0 + np.cos(th0 - w) - math.cos(th0)
                ths[mask] = th0 - w
            else:
                xs[mask] = x0 + w * math.cos(th0)
                ys[mask] = y0 + w * math.sin(th0)
                ths[mask] = th0
        pose = apply_segment(pose, seg, v)
        offset += v

    out = np.empty((len(s), 4))
    out[:, 0] = s
    out[:, 1] = path.start.x + path.rho * xs
    out[:, 2] = path.start.y + path.rho * ys
    out[:, 3] = norm_angle_array(ths)
    return out


# ---------------------------------------------------------------------------
# Vehicle model and control integration
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class VehicleParams:
    """Kinematic car: wheelbase, steering limit and unit forward speed.

    min_turn_radius must equal wheelbase / tan(max_steering) to within 1e-9
    relative; use from_turn_radius to build a consistent set from a radius.
    """

    wheelbase: float
    max_steering: float
    min_turn_radius: float
    speed: float = 1.0

    def __post_init__(self):
        if self.wheelbase <= 0.0:
            raise ValueError(f"wheelbase must be positive, got {self.wheelbase}")
        if not 0.0 < self.max_steering < math.pi / 2.0:
            raise ValueError(
                f"max_steering must lie in (0, pi/2), got {self.max_steering}")
        if self.speed not in (0.0, 1.0):
            raise ValueError(f"speed must be 0 or 1, got {self.speed}")
        implied = self.wheelbase / math.tan(self.max_steering)
        if abs(self.min_turn_radius - implied) > 1e-9 * implied:
            raise ValueError(
                f"min_turn_radius {self.min_turn_radius} inconsistent with "
                f"wheelbase/tan(max_steering) = {implied}")

    @classmethod
    def from_turn_radius(cls, rho: float, wheelbase: float = 1.0,
                         speed: float = 1.0) -> "VehicleParams":
        if rho <= 0.0:
            raise ValueError(f"turning radius must be positive, got {rho}")
        max_steering = math.atan(wheelbase / rho)
        return cls(wheelbase, max_steering, wheelbase / math.tan(max_steering), speed)


def path_controls(path: DubinsPath, vehicle: VehicleParams) -> list[tuple[float, float]]:
    """(steering angle, duration) per segment, drivable at unit speed.

    Arc segments use the steering angle whose turn radius equals path.rho;
    straights use zero. Raises SteeringOutOfRange when the path turns tighter
    than the vehicle can (path.rho < vehicle.min_turn_radius).
    """
    steer = math.atan(vehicle.wheelbase / path.rho)
    if steer > vehicle.max_steering * (1.0 + 1e-9):
        raise SteeringOutOfRange(
            f"radius {path.rho} needs steering {steer}, limit {vehicle.max_steering}")
    steer = min(steer, vehicle.max_steering)
    signs = {SegmentType.LEFT: 1.0, SegmentType.RIGHT: -1.0, SegmentType.STRAIGHT: 0.0}
    return [(signs[seg] * steer, v * path.rho)
            for seg, v in zip(path.word.segments, path.params)]


def integrate_controls(vehicle: VehicleParams, start: Pose,
                       controls: list[tuple[float, float]],
                       step: float = 1e-4) -> Pose:
    """Integrate x' = u cos(theta), y' = u sin(theta),
    theta' = u tan(steering) / wheelbase with fixed-step RK4.

    Deliberately knows nothing about words or arcs; it is the independent
    check that a claimed path is drivable. Each control runs for its full
    duration (a shorter final substep absorbs the remainder).
    """
    if step <= 0.0:
        raise ValueError(f"step must be positive, got {step}")
    x, y, th = start.x, start.y, start.theta
    u = vehicle.speed
    for steering, duration in controls:
        if abs(steering) > vehicle.max_steering + 1e-12:
            raise SteeringOutOfRange(
                f"steering {steering} exceeds limit {vehicle.max_steering}")
        if duration < 0.0:
            raise ValueError(f"duration must be >= 0, got {duration}")
        w = u * math.tan(steering) / vehicle.wheelbase
        n_full = int(duration / step)
        hs = np.empty(n_full + 1)
        hs[:n_full] = step
        hs[n_full] = duration - n_full * step
        if hs[n_full] <= 0.0:
            hs = hs[:n_full]
        if hs.size == 0:
            continue
        # Heading rate is constant within a control, so the two midpoint
        # stages of RK4 coincide and each step's increment depends only on
        # the heading at the step, never on position; sum them in one pass.
        offs = np.empty(hs.size)
        offs[0] = 0.0
        np.cumsum(hs[:-1], out=offs[1:])
        th0 = th + w * offs
        thm = th0 + 0.5 * w * hs
        th1 = th0 + w * hs
        x += float(np.sum(hs * (np.cos(th0) + 4.0 * np.cos(thm) + np.cos(th1)))) * u / 6.0
        y += float(np.sum(hs * (np.sin(th0) + 4.0 * np.sin(thm) + np.sin(th1)))) * u / 6.0
        th += w * duration
    return Pose(x, y, norm_angle(th))


# ---------------------------------------------------------------------------
# Batch length kernel
# ---------------------------------------------------------------------------
#
# The planners need many-to-one and one-to-many shortest-length queries per
# iteration. The kernel below mirrors the scalar closed forms (including the
# domain clamps and the segment-replay verification) on numpy arrays; values
# may differ from the scalar path at the last few ulps, so they are used for
# ordering and pruning while anything stored in a tree is rebuilt through
# shortest_path.

def _word_lengths_batch(d: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    sa, ca = np.sin(a), np.cos(a)
    sb, cb = np.sin(b), np.cos(b)
    cab = np.cos(a - b)
    n = d.shape[0]
    tpq = np.full((6, 3, n), np.nan)

    def arcmod(x):
        r = np.mod(x, TWO_PI)
        r[r >= TWO_PI] = 0.0
        return r

    def clamped_sqrt(sq):
        ok = sq >= -CLAMP_EPS
        return ok, np.sqrt(np.where(ok, np.maximum(sq, 0.0), 0.0))

    def clamped_acos(c):
        ok = np.abs(c) <= 1.0 + CLAMP_EPS
        return ok, np.arccos(np.clip(c, -1.0, 1.0))

    with np.errstate(invalid="ignore", divide="ignore"):
        # LSL / RSR
        for idx, sign in ((0, 1.0), (1, -1.0)):
            ok, p = clamped_sqrt(2.0 + d * d - 2.0 * cab + 2.0 * d * sign * (sa - sb))
            mid = np.arctan2(sign * (cb - ca), d + sign * (sa - sb))
            t = arcmod(sign * (mid - a))
            q = arcmod(sign * (b - mid))
            tpq[idx, 0] = np.where(ok, t, np.nan)
            tpq[idx, 1] = np.where(ok, p, np.nan)
            tpq[idx, 2] = np.where(ok, q, np.nan)

        # LSR / RSL
        for idx, sign in ((2, 1.0), (3, -1.0)):
            ok, p = clamped_sqrt(d * d - 2.0 + 2.0 * cab + 2.0 * d * sign * (sa + sb))
            mid = (np.arctan2(-sign * (ca + cb), d + sign * (sa + sb))
                   - np.arctan2(-sign * 2.0, p))
            t = arcmod(sign * (mid - a))
            q = arcmod(sign * (mid - b))
            tpq[idx, 0] = np.where(ok, t, np.nan)
            tpq[idx, 1] = np.where(ok, p, np.nan)
            tpq[idx, 2] = np.where(ok, q, np.nan)

        # RLR / LRL
        for idx, sign in ((4, 1.0), (5, -1.0)):
            c = (6.0 - d * d + 2.0 * cab + 2.0 * d * sign * (sa - sb)) / 8.0
            ok, acos_c = clamped_acos(c)
            p = arcmod(TWO_PI - acos_c)
            mid = np.arctan2(sign * (ca - cb), d - sign * (sa - sb))
            t = arcmod(sign * (a - mid) + 0.5 * p)
            q = arcmod(sign * (a - b) - t + p)
            tpq[idx, 0] = np.where(ok, t, np.nan)
            tpq[idx, 1] = np.where(ok, p, np.nan)
            tpq[idx, 2] = np.where(ok, q, np.nan)

    # Replay each word's segments from (0, 0, a) and reject candidates that
    # miss (d, 0, b), as the scalar path does.
    signs = {"L": 1.0, "R": -1.0}
    lengths = np.full((6, n), np.inf)
    for idx, word in enumerate(DubinsWord):
        t, p, q = tpq[idx]
        x = np.zeros(n)
        y = np.zeros(n)
        th = a.astype(float).copy()
        for letter, v in zip(word.value, (t, p, q)):
            if letter == "S":
                x = x + v * np.cos(th)
                y = y + v * np.sin(th)
            else:
                s = signs[letter]
                th2 = th + s * v
                x = x + s * (np.sin(th2) - np.sin(th))
                y = y - s * (np.cos(th2) - np.cos(th))
                th = th2
        pos_err = np.hypot(x - d, y)
        head_err = np.abs(np.mod(th - b + math.pi, TWO_PI) - math.pi)
        total = t + p + q
        good = (np.isfinite(total) & (pos_err <= RECONSTRUCT_TOL)
                & (head_err <= RECONSTRUCT_TOL))
        lengths[idx] = np.where(good, total, np.inf)
    return lengths


def _canonical_arrays(x, y, theta, gx, gy, gtheta, rho):
    dx = gx - x
    dy = gy - y
    dist = np.hypot(dx, dy)
    phi = np.arctan2(dy, dx)  # 0 for coincident positions, matching the scalar path
    d = dist / rho
    a = norm_angle_array(theta - phi)
    b = norm_angle_array(gtheta - phi)
    return dist, d, a, b


def lengths_to_pose(x: np.ndarray, y: np.ndarray, theta: np.ndarray,
                    target: Pose, rho: float) -> np.ndarray:
    """World shortest-path lengths from each pose (x, y, theta) to target."""
    x = np.asarray(x, float)
    dist, d, a, b = _canonical_arrays(
        x, np.asarray(y, float), np.asarray(theta, float),
        target.x, target.y, target.theta, rho)
    best = np.min(_word_lengths_batch(d, a, b), axis=0) * rho
    same = (dist < DEGENERATE_EPS * rho) & (np.asarray(theta, float) == target.theta)
    best[same] = 0.0
    return best


def lengths_from_pose(source: Pose, x: np.ndarray, y: np.ndarray,
                      theta: np.ndarray, rho: float) -> np.ndarray:
    """World shortest-path lengths from source to each pose (x, y, theta)."""
    x = np.asarray(x, float)
    theta = np.asarray(theta, float)
    sx = np.full_like(x, source.x)
    sy = np.full_like(x, source.y)
    st = np.full_like(x, source.theta)
    dist, d, a, b = _canonical_arrays(sx, sy, st, x, np.asarray(y, float), theta, rho)
    best = np.min(_word_lengths_batch(d, a, b), axis=0) * rho
    same = (dist < DEGENERATE_EPS * rho) & (theta == source.theta)
    best[same] = 0.0
    return best
