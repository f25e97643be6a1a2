"""Independent numeric oracles used by the test suite.

Nothing here imports from the package under test. Shortest-path lengths are
recovered by brute-force root finding over each word's segment parameters
with the heading constraint eliminated analytically, so agreement with the
closed forms is evidence, not circularity.
"""

import math

import numpy as np
from scipy import optimize

TWO_PI = 2.0 * math.pi

# per word: turn direction of each segment (+1 left, -1 right, 0 straight)
WORD_SIGNS = {
    "LSL": (1, 0, 1),
    "RSR": (-1, 0, -1),
    "LSR": (1, 0, -1),
    "RSL": (-1, 0, 1),
    "RLR": (-1, 1, -1),
    "LRL": (1, -1, 1),
}


def _arc_end(x, y, th, sign, v):
    """Unit-radius arc of angle v, turning left (sign=+1) or right (-1)."""
    if sign > 0:
        return (x + np.sin(th + v) - np.sin(th),
                y - np.cos(th + v) + np.cos(th), th + v)
    return (x - np.sin(th - v) + np.sin(th),
            y + np.cos(th - v) - np.cos(th), th - v)


def _csc_min_length(signs, d, alpha, beta, grid=4096):
    """Arc-straight-arc words.

    The closing arc angle follows from the heading constraint, so for each
    first-arc angle t the only freedom is the straight length p. A solution
    exists where the residual to the target is parallel to the straight
    heading, i.e. at sign changes of its cross-track component, which brentq
    pins to machine precision; p then comes from the along-track projection
    and must be nonnegative.
    """
    s1, _, s3 = signs

    def parts(tv):
        qv = np.mod((beta - alpha - s1 * tv) * s3, TWO_PI)
        ax, ay, ath = _arc_end(0.0, 0.0, alpha, s1, tv)
        bx, by, _ = _arc_end(0.0, 0.0, ath, s3, qv)
        return qv, ath, d - ax - bx, -ay - by

    def cross_track(tv):
        _, ath, rx, ry = parts(tv)
        return ry * np.cos(ath) - rx * np.sin(ath)

    def candidate(tv) -> float:
        qv, ath, rx, ry = parts(tv)
        pv = max(float(rx * np.cos(ath) + ry * np.sin(ath)), 0.0)
        err = math.hypot(float(rx - pv * np.cos(ath)),
                         float(ry - pv * np.sin(ath)))
        if err < 1e-9:
            return float(tv) % TWO_PI + pv + float(qv)
        return math.inf

    t = np.linspace(0.0, TWO_PI, grid + 1)  # closed so brackets wrap the seam
    c = cross_track(t)
    best = math.inf
    for k in range(grid):
        if c[k] == 0.0:
            best = min(best, candidate(t[k]))
        elif (c[k] < 0.0) != (c[k + 1] < 0.0):
            root = optimize.brentq(lambda tv: float(cross_track(tv)),
                                   t[k], t[k + 1], xtol=1e-13, rtol=8.9e-16)
            best = min(best, candidate(root))
    return best


def _ccc_min_length(signs, d, alpha, beta, grid=256):
    """Three-arc words.

    The closing arc angle follows from the heading constraint, leaving a
    smooth two-dimensional endpoint map of (t, p); its zeros are isolated,
    so polish every grid local minimum of the endpoint error with a proper
    root solver.
    """
    s1, s2, s3 = signs

    def endpoint(tv, pv):
        qv = np.mod((beta - alpha - s1 * tv - s2 * pv) * s3, TWO_PI)
        x1, y1, th1 = _arc_end(0.0, 0.0, alpha, s1, tv)
        x2, y2, th2 = _arc_end(x1, y1, th1, s2, pv)
        x3, y3, _ = _arc_end(x2, y2, th2, s3, qv)
        return x3 - d, y3, qv

    t = np.linspace(0.0, TWO_PI, grid, endpoint=False)
    tt, pp = np.meshgrid(t, t, indexing="ij")
    fx, fy, _ = endpoint(tt, pp)
    err = np.hypot(fx, fy)
    shifts = [np.roll(np.roll(err, i, 0), j, 1)
              for i in (-1, 0, 1) for j in (-1, 0, 1) if (i, j) != (0, 0)]
    local_min = (err <= np.minimum.reduce(shifts)) & (err < 0.2)

    best = math.inf
    for i, j in zip(*np.nonzero(local_min)):
        res = optimize.root(
            lambda v: [float(w) for w in endpoint(v[0], v[1])[:2]],
            x0=[tt[i, j], pp[i, j]], method="hybr", tol=1e-13)
        tv, pv = (float(v) % TWO_PI for v in res.x)
        # a boundary root can land an ulp below zero and alias to ~2pi
        tv = 0.0 if tv > TWO_PI - 1e-9 else tv
        pv = 0.0 if pv > TWO_PI - 1e-9 else pv
        ex, ey, qv = endpoint(tv, pv)
        if math.hypot(float(ex), float(ey)) < 1e-9:
            best = min(best, tv + pv + float(qv))
    return best


def oracle_word_min_length(word: str, d: float, alpha: float, beta: float):
    """Minimum nondimensional length realizing the word, or None."""
    signs = WORD_SIGNS[word]
    if signs[1] == 0:
        best = _csc_min_length(signs, d, alpha, beta)
    else:
        best = _ccc_min_length(signs, d, alpha, beta)
    return None if math.isinf(best) else best


def oracle_shortest_length(d: float, alpha: float, beta: float) -> float:
    """Minimum over all six words."""
    best = math.inf
    for word in WORD_SIGNS:
        length = oracle_word_min_length(word, d, alpha, beta)
        if length is not None:
            best = min(best, length)
    return best


def polygon_distance(vertices, point) -> float:
    """Distance from point to a polygon as a closed region: 0 if inside or
    on the boundary, else the minimum over edge projections."""
    px, py = point
    n = len(vertices)
    inside = False
    best = math.inf
    for i in range(n):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % n]
        if (y1 > py) != (y2 > py):
            xi = x1 + (py - y1) * (x2 - x1) / (y2 - y1)
            if px < xi:
                inside = not inside
        ex, ey = x2 - x1, y2 - y1
        u = ((px - x1) * ex + (py - y1) * ey) / (ex * ex + ey * ey)
        u = min(1.0, max(0.0, u))
        best = min(best, math.hypot(px - (x1 + u * ex), py - (y1 + u * ey)))
    return 0.0 if (inside or best == 0.0) else best
