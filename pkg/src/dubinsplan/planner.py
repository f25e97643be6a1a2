"""Sampling-based planners steered along bounded-curvature paths.

rrt_plan grows a tree by repeatedly sampling a pose, steering from the
Dubins-nearest node toward it (optionally capped at step_max), and keeping the
extension when it clears the obstacles. rrt_star_plan additionally reconnects
each new node through the cheapest collision-free neighbour and rewires
neighbours through the new node whenever that strictly shortens them, pushing
the cost change depth-first through the affected subtree.

Both planners draw random numbers only inside sample_pose, in a fixed order,
so equal seeds reproduce trees node-for-node, and an RRT and an RRT* run with
the same seed see the same sample stream and insert the same poses. After the
sampling loop, every node is offered a direct collision-checked connection to
the exact goal pose and the cheapest arrival overall is reported.

Edges stored in the tree are always rebuilt through scalar shortest_path; the
vectorized length kernel is used only to order and prune candidates.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .dubins import (
    DEGENERATE_EPS,
    TWO_PI,
    DubinsPath,
    Pose,
    from_canonical,
    lengths_from_pose,
    lengths_to_pose,
    sample_path,
    shortest_path,
    wrap_angle,
)
from .geometry import Environment, path_in_collision, point_in_collision


class InvalidStart(ValueError):
    """Start pose is in collision."""


class InvalidGoal(ValueError):
    """Goal pose is in collision."""


class TreeAuditError(AssertionError):
    """A planner tree violated a structural invariant."""


@dataclass
class PlannerConfig:
    """Knobs shared by both planners.

    step_max = None removes the steering cap. nearest_metric may be set to
    "euclidean" for ablation runs; candidate edges are still Dubins paths.
    choose_parent = False keeps each new node attached to the node it was
    steered from (rewiring stays on), matching the leaner rewire-only variant.
    accelerated_nearest toggles the Euclidean-lower-bound prefilter inside
    nearest-node queries; both settings return identical trees, the flag only
    trades work (a straight-line chord never exceeds the Dubins length, so
    candidates whose chord already loses cannot win).
    """

    n_iter: int = 500
    rho: float = 1.0
    step_max: float | None = 5.0
    rewire_radius: float = 5.0
    goal_bias: float = 0.05
    goal_tolerance: tuple[float, float] = (0.5, 0.5)
    collision_resolution: float = 0.05
    seed: int = 0
    nearest_metric: str = "dubins"
    accelerated_nearest: bool = True
    choose_parent: bool = True
    goal_facing_heading: bool = False

    def __post_init__(self):
        if not isinstance(self.n_iter, int) or self.n_iter < 1:
            raise ValueError(f"n_iter must be a positive integer, got {self.n_iter}")
        if self.rho <= 0.0 or not math.isfinite(self.rho):
            raise ValueError(f"rho must be positive, got {self.rho}")
        if self.step_max is not None and self.step_max <= 0.0:
            raise ValueError(f"step_max must be positive or None, got {self.step_max}")
        if self.rewire_radius <= 0.0:
            raise ValueError(f"rewire_radius must be positive, got {self.rewire_radius}")
        if not 0.0 <= self.goal_bias <= 1.0:
            raise ValueError(f"goal_bias must lie in [0, 1], got {self.goal_bias}")
        tol = tuple(float(v) for v in self.goal_tolerance)
        if len(tol) != 2 or tol[0] < 0.0 or tol[1] < 0.0:
            raise ValueError(f"goal_tolerance must be two nonnegative values, got {self.goal_tolerance}")
        self.goal_tolerance = tol
        if self.collision_resolution <= 0.0:
            raise ValueError(f"collision_resolution must be positive, got {self.collision_resolution}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.nearest_metric not in ("dubins", "euclidean"):
            raise ValueError(f"nearest_metric must be 'dubins' or 'euclidean', got {self.nearest_metric}")


@dataclass
class TreeNode:
    id: int
    pose: Pose
    parent: int | None
    edge: DubinsPath | None
    cost: float


@dataclass(frozen=True)
class Solution:
    node_ids: list[int]
    samples: np.ndarray  # rows (s, x, y, theta), s cumulative from the root
    total_length: float


@dataclass(frozen=True)
class PlanStats:
    nodes: int
    rewires: int
    collision_checks: int


@dataclass(frozen=True)
class PlanResult:
    tree: list[TreeNode]
    solution: Solution | None
    iterations_used: int
    stats: PlanStats
    # Cheapest goal-reaching cost after each iteration (inf while none);
    # rewiring can only lower entries, so the sequence is non-increasing.
    best_cost_history: list[float] = field(repr=False)


def sample_pose(env: Environment, rng: np.random.Generator, goal: Pose,
                goal_bias: float) -> Pose:
    """Uniform pose over bounds x [0, 2*pi); with probability goal_bias the
    exact goal object is returned instead. goal_bias = 0 consumes exactly
    three draws per call."""
    if goal_bias > 0.0 and rng.random() < goal_bias:
        return goal
    b = env.bounds
    return Pose(rng.uniform(b.xmin, b.xmax), rng.uniform(b.ymin, b.ymax),
                rng.uniform(0.0, TWO_PI))


def steer(from_pose: Pose, to_pose: Pose, rho: float,
          step_max: float | None = None) -> tuple[DubinsPath, Pose]:
    """Shortest path toward to_pose, truncated at arc length step_max.

    Truncation keeps the word and trims segment budgets front to back, so the
    result is the same curve cut short. Returns (path, reached): reached is
    to_pose itself when no truncation happened, else the truncated endpoint.
    """
    path = shortest_path(from_pose, to_pose, rho)
    if step_max is None or path.length <= step_max:
        return path, to_pose
    u = step_max / rho
    cut = [0.0, 0.0, 0.0]
    for k, v in enumerate(path.params):
        take = min(u, v)
        cut[k] = take
        u -= take
        if u <= 0.0:
            break
    truncated = DubinsPath(path.word, tuple(cut), rho, from_pose)
    return truncated, from_canonical(truncated, truncated.length)


def _lex_min(lengths: np.ndarray) -> int:
    """Index of the smallest value; equal values resolve to the lowest index."""
    m = lengths.min()
    return int(np.flatnonzero(lengths == m)[0])


def nearest(tree: list[TreeNode], target: Pose, rho: float) -> int:
    """Reference linear scan: id of the node with the shortest Dubins path
    from its pose to target; ties go to the lowest id."""
    if not tree:
        raise ValueError("nearest() on an empty tree")
    x = np.array([n.pose.x for n in tree])
    y = np.array([n.pose.y for n in tree])
    th = np.array([n.pose.theta for n in tree])
    return _lex_min(lengths_to_pose(x, y, th, target, rho))


def extract_solution(tree: list[TreeNode], goal_ids: list[int],
                     resolution: float) -> Solution | None:
    """Cheapest root-to-goal chain with concatenated pose samples.

    Picks the minimum-cost goal id (ties to the lowest id), walks parents to
    the root, and samples each edge at the given resolution; shared endpoint
    rows between consecutive edges are emitted once.
    """
    if not goal_ids:
        return None
    best = min(goal_ids, key=lambda i: (tree[i].cost, i))
    chain = []
    i: int | None = best
    while i is not None:
        chain.append(i)
        i = tree[i].parent
    chain.reverse()
    root = tree[chain[0]]
    rows = [np.array([[0.0, root.pose.x, root.pose.y, root.pose.theta]])]
    offset = 0.0
    for nid in chain[1:]:
        edge = tree[nid].edge
        block = sample_path(edge, resolution)
        block[:, 0] += offset
        rows.append(block[1:])
        offset += edge.length
    return Solution(chain, np.vstack(rows), tree[best].cost)


class _Grower:
    """Shared engine for both planners; `star` switches the rewiring stage."""

    def __init__(self, env: Environment, start: Pose, goal: Pose,
                 config: PlannerConfig):
        if point_in_collision(env, (start.x, start.y)):
            raise InvalidStart(f"start pose ({start.x}, {start.y}, {start.theta}) is in collision")
        if point_in_collision(env, (goal.x, goal.y)):
            raise InvalidGoal(f"goal pose ({goal.x}, {goal.y}, {goal.theta}) is in collision")
        self.env = env
        self.goal = goal
        self.cfg = config
        self.rng = np.random.default_rng(config.seed)
        # Edges are vetted on the half-resolution grid; together with nested
        # sampling this makes a later half-resolution replay evaluate exactly
        # the points the planner already cleared.
        self.check_res = config.collision_resolution / 2.0
        cap = config.n_iter + 2
        self.xs = np.empty(cap)
        self.ys = np.empty(cap)
        self.ths = np.empty(cap)
        self.tree: list[TreeNode] = []
        self.children: list[list[int]] = []
        self.goal_ids: list[int] = []
        self.rewires = 0
        self.collision_checks = 0
        self.history: list[float] = []
        self._append(start, None, None, 0.0)
        if self._near_goal(start):
            self.goal_ids.append(0)

    def _append(self, pose: Pose, parent: int | None, edge: DubinsPath | None,
                cost: float) -> int:
        nid = len(self.tree)
        self.tree.append(TreeNode(nid, pose, parent, edge, cost))
        self.children.append([])
        if parent is not None:
            self.children[parent].append(nid)
        self.xs[nid] = pose.x
        self.ys[nid] = pose.y
        self.ths[nid] = pose.theta
        return nid

    def _near_goal(self, pose: Pose) -> bool:
        tol_pos, tol_head = self.cfg.goal_tolerance
        return (math.hypot(pose.x - self.goal.x, pose.y - self.goal.y) <= tol_pos
                and abs(wrap_angle(pose.theta - self.goal.theta)) <= tol_head)

    def _collides(self, path: DubinsPath) -> bool:
        self.collision_checks += 1
        return path_in_collision(self.env, path, self.check_res)

    def _nearest(self, target: Pose) -> int:
        n = len(self.tree)
        x, y, th = self.xs[:n], self.ys[:n], self.ths[:n]
        if self.cfg.nearest_metric == "euclidean":
            return _lex_min(np.hypot(x - target.x, y - target.y))
        if not self.cfg.accelerated_nearest:
            return _lex_min(lengths_to_pose(x, y, th, target, self.cfg.rho))
        # Chord length deflated below any kernel roundoff is a strict lower
        # bound on the Dubins length, so candidates whose bound exceeds the
        # best seen so far can be skipped without changing the argmin.
        lb = np.hypot(x - target.x, y - target.y) * (1.0 - 1e-12) - 1e-9 * self.cfg.rho
        order = np.argsort(lb, kind="stable")
        best_len = math.inf
        best_id = n
        pos = 0
        while pos < n:
            if lb[order[pos]] > best_len:
                break
            chunk = order[pos:pos + 128]
            ls = lengths_to_pose(x[chunk], y[chunk], th[chunk], target, self.cfg.rho)
            m = ls.min()
            if m <= best_len:
                cid = int(chunk[ls == m].min())
                if m < best_len or cid < best_id:
                    best_len, best_id = m, cid
            pos += 128
        return best_id

    def _choose_parent(self, new_id: int) -> None:
        new = self.tree[new_id]
        n = new_id
        x, y, th = self.xs[:n], self.ys[:n], self.ths[:n]
        cand = np.flatnonzero(np.hypot(x - new.pose.x, y - new.pose.y)
                              <= self.cfg.rewire_radius)
        if cand.size == 0:
            return
        din = lengths_to_pose(x[cand], y[cand], th[cand], new.pose, self.cfg.rho)
        keep = din <= self.cfg.rewire_radius
        cand, din = cand[keep], din[keep]
        if cand.size == 0:
            return
        totals = np.array([self.tree[i].cost for i in cand]) + din
        best_total = new.cost  # the steered edge is already in place
        best: tuple[int, DubinsPath] | None = None
        for k in np.argsort(totals, kind="stable"):
            # kernel values order candidates; beyond this margin none can win
            if totals[k] >= best_total + 1e-9:
                break
            i = int(cand[k])
            if i == new.parent:
                continue
            edge = shortest_path(self.tree[i].pose, new.pose, self.cfg.rho)
            total = self.tree[i].cost + edge.length
            if total >= best_total or self._collides(edge):
                continue
            best_total = total
            best = (i, edge)
        if best is not None:
            i, edge = best
            self.children[new.parent].remove(new_id)
            self.children[i].append(new_id)
            new.parent = i
            new.edge = edge
            new.cost = best_total

    def _rewire(self, new_id: int) -> None:
        new = self.tree[new_id]
        n = new_id
        x, y, th = self.xs[:n], self.ys[:n], self.ths[:n]
        cand = np.flatnonzero(np.hypot(x - new.pose.x, y - new.pose.y)
                              <= self.cfg.rewire_radius)
        if cand.size == 0:
            return
        dout = lengths_from_pose(new.pose, x[cand], y[cand], th[cand], self.cfg.rho)
        for i, approx in zip(cand, dout):
            i = int(i)
            if i == 0 or i == new.parent or approx > self.cfg.rewire_radius:
                continue
            if new.cost + approx >= self.tree[i].cost + 1e-9:
                continue
            edge = shortest_path(new.pose, self.tree[i].pose, self.cfg.rho)
            total = new.cost + edge.length
            # Strict improvement also rules out rewiring any ancestor of the
            # new node, which keeps the tree acyclic.
            if total >= self.tree[i].cost or self._collides(edge):
                continue
            self.children[self.tree[i].parent].remove(i)
            self.children[new_id].append(i)
            delta = total - self.tree[i].cost
            self.tree[i].parent = new_id
            self.tree[i].edge = edge
            self.tree[i].cost = total
            self.rewires += 1
            stack = list(self.children[i])
            while stack:
                j = stack.pop()
                self.tree[j].cost += delta
                stack.extend(self.children[j])

    def _connect_goal(self) -> None:
        n = len(self.tree)
        lens = lengths_to_pose(self.xs[:n], self.ys[:n], self.ths[:n],
                               self.goal, self.cfg.rho)
        totals = np.array([nd.cost for nd in self.tree]) + lens
        best_total = min((self.tree[i].cost for i in self.goal_ids), default=math.inf)
        best: tuple[int, DubinsPath] | None = None
        for k in np.argsort(totals, kind="stable"):
            if totals[k] >= best_total + 1e-9:
                break
            i = int(k)
            edge = shortest_path(self.tree[i].pose, self.goal, self.cfg.rho)
            if edge.length <= DEGENERATE_EPS * self.cfg.rho:
                continue  # node already sits on the goal pose
            total = self.tree[i].cost + edge.length
            if total >= best_total or self._collides(edge):
                continue
            best_total = total
            best = (i, edge)
        if best is not None:
            i, edge = best
            nid = self._append(self.goal, i, edge, best_total)
            self.goal_ids.append(nid)

    def run(self, star: bool, on_iteration=None) -> PlanResult:
        cfg = self.cfg
        for it in range(cfg.n_iter):
            sample = sample_pose(self.env, self.rng, self.goal, cfg.goal_bias)
            if cfg.goal_facing_heading and sample is not self.goal:
                sample = Pose(sample.x, sample.y,
                              math.atan2(self.goal.y - sample.y,
                                         self.goal.x - sample.x))
            nid = self._nearest(sample)
            path, reached = steer(self.tree[nid].pose, sample, cfg.rho, cfg.step_max)
            if path.length > DEGENERATE_EPS * cfg.rho and not self._collides(path):
                new_id = self._append(reached, nid, path,
                                      self.tree[nid].cost + path.length)
                if star:
                    if cfg.choose_parent:
                        self._choose_parent(new_id)
                    self._rewire(new_id)
                if self._near_goal(reached):
                    self.goal_ids.append(new_id)
            self.history.append(min((self.tree[i].cost for i in self.goal_ids),
                                    default=math.inf))
            if on_iteration is not None:
                on_iteration(it, self.tree)
        self._connect_goal()
        solution = extract_solution(self.tree, self.goal_ids, cfg.collision_resolution)
        return PlanResult(self.tree, solution, cfg.n_iter,
                          PlanStats(len(self.tree) - 1, self.rewires,
                                    self.collision_checks),
                          self.history)


def rrt_plan(env: Environment, start: Pose, goal: Pose, config: PlannerConfig,
             on_iteration=None) -> PlanResult:
    """Grow a feasibility tree; report the cheapest goal arrival found."""
    return _Grower(env, start, goal, config).run(star=False, on_iteration=on_iteration)


def rrt_star_plan(env: Environment, start: Pose, goal: Pose, config: PlannerConfig,
                  on_iteration=None) -> PlanResult:
    """rrt_plan plus parent choice and rewiring; costs only ever improve."""
    return _Grower(env, start, goal, config).run(star=True, on_iteration=on_iteration)


def audit_tree(tree: list[TreeNode], env: Environment, config: PlannerConfig) -> None:
    """Validate structural invariants of a finished tree.

    Checks: ids match positions, node 0 is the only root with cost 0,
    parent links are acyclic, every edge starts at its parent's pose, costs
    telescope to within 1e-9, edge replay lands on the child pose within
    1e-6 * rho (heading 1e-6), and every edge clears the obstacles when
    re-sampled at half the configured resolution. Raises TreeAuditError.
    """
    if not tree:
        raise TreeAuditError("empty tree")
    for i, node in enumerate(tree):
        if node.id != i:
            raise TreeAuditError(f"node {i} carries id {node.id}")
    root = tree[0]
    if root.parent is not None or root.edge is not None or root.cost != 0.0:
        raise TreeAuditError("node 0 is not a clean root")
    state = [0] * len(tree)  # 0 unseen, 1 on current walk, 2 cleared
    for i in range(len(tree)):
        walk = []
        j: int | None = i
        while j is not None and state[j] == 0:
            state[j] = 1
            walk.append(j)
            j = tree[j].parent
        if j is not None and state[j] == 1:
            raise TreeAuditError(f"cycle through node {j}")
        if i > 0 and tree[i].parent is None:
            raise TreeAuditError(f"node {i} is a second root")
        for j in walk:
            state[j] = 2
    for node in tree[1:]:
        edge = node.edge
        parent = tree[node.parent]
        if edge is None:
            raise TreeAuditError(f"node {node.id} has no edge")
        if edge.start != parent.pose:
            raise TreeAuditError(f"edge of node {node.id} does not start at its parent")
        if abs(node.cost - (parent.cost + edge.length)) > 1e-9:
            raise TreeAuditError(f"cost of node {node.id} does not telescope")
        end = from_canonical(edge, edge.length)
        pos_err = math.hypot(end.x - node.pose.x, end.y - node.pose.y)
        if pos_err > 1e-6 * config.rho or abs(wrap_angle(end.theta - node.pose.theta)) > 1e-6:
            raise TreeAuditError(f"edge replay of node {node.id} misses its pose")
        if path_in_collision(env, edge, config.collision_resolution / 2.0):
            raise TreeAuditError(f"edge of node {node.id} collides at half resolution")
