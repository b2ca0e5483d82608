"""Independent reference computations used only by the tests."""

import math

import numpy as np
from scipy.optimize import least_squares


def _lift(ab):
    a, b = ab
    return np.array([math.sqrt(1.0 + a * a + b * b), a, b])


def _dist(p, q):
    c = p[0] * q[0] - p[1] * q[1] - p[2] * q[2]
    return math.acosh(max(1.0, c))


def equidistant_spread(A, B, C, starts=4):
    """Smallest spread (max - min) of distances to A, B, C found by search.

    Polar grid over the chart ``(a, b) -> (sqrt(1 + a^2 + b^2), a, b)``,
    then Levenberg-Marquardt on the two distance differences from the best
    few grid cells.  Knows nothing about bisector planes.
    """
    pts = np.array([A, B, C], dtype=float)
    r = np.concatenate([[0.0], np.geomspace(0.01, 12.0, 40)])
    t = np.linspace(0.0, 2 * math.pi, 48, endpoint=False)
    a = (np.sinh(r)[:, None] * np.cos(t)).ravel()
    b = (np.sinh(r)[:, None] * np.sin(t)).ravel()
    x0 = np.sqrt(1.0 + a * a + b * b)
    c = x0[:, None] * pts[:, 0] - a[:, None] * pts[:, 1] - b[:, None] * pts[:, 2]
    d = np.arccosh(np.maximum(c, 1.0))
    spread = d.max(axis=1) - d.min(axis=1)

    def dists(ab):
        x = _lift(ab)
        return [_dist(x, p) for p in pts]

    def resid(ab):
        d = dists(ab)
        return [d[0] - d[1], d[1] - d[2]]

    best = float(spread.min())
    for rank, k in enumerate(np.argsort(spread)[:starts]):
        # LM is fast but can stall on large circles; the best cell also gets a trust-region run
        for method in ("lm", "trf") if rank == 0 else ("lm",):
            sol = least_squares(resid, np.array([a[k], b[k]]), method=method, xtol=1e-15, ftol=1e-15,
                                gtol=1e-15, max_nfev=400)
            d = dists(sol.x)
            best = min(best, max(d) - min(d))
            if best < 1e-12:
                return best
    return best


def exp_map_oracle(at, v, t):
    """Geodesic flow ``cosh(t) at + sinh(t) v`` with no renormalization."""
    return tuple(math.cosh(t) * a + math.sinh(t) * b for a, b in zip(at, v))


def integrate_poincare_radius(r, steps=20000):
    """Length of the Poincare radius ``[0, r]`` under the metric ``2 / (1 - s^2)``."""
    h = r / steps
    total = 0.0
    for k in range(steps):
        # Simpson on each sub-interval
        s0, s1, s2 = k * h, (k + 0.5) * h, (k + 1) * h
        f = lambda s: 2.0 / (1.0 - s * s)
        total += h / 6.0 * (f(s0) + 4 * f(s1) + f(s2))
    return total


def shoelace(pts):
    return 0.5 * abs(sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1])))
