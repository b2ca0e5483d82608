"""Static SVG scenes in the Poincare disk.

Geodesic edges are drawn as dense polylines by default; ``exact_arcs``
switches to SVG arc commands on the circles orthogonal to the boundary.
Output bytes depend only on the inputs.
"""

from __future__ import annotations

import math

from . import geom
from .circumcircle import Circle
from .curvature import Extremal, build_graph
from .errors import GeometryError
from .evolute import build_evolute, detect_cusps
from .polygon import HPolygon

SIZE = 600
SAMPLES = 64


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _xy(u) -> str:
    # SVG y axis points down
    return f"{_fmt(u[0])},{_fmt(-u[1])}"


def geodesic_samples(p, q, samples: int = SAMPLES) -> list[tuple[float, float]]:
    """Poincare coordinates along the geodesic segment from ``p`` to ``q``."""
    d = geom.hdist(p, q)
    if d == 0.0:
        return [geom.to_poincare(p)]
    v = geom.tangent_direction(p, q).v
    return [geom.to_poincare(geom.geodesic_flow(p, v, d * k / (samples - 1))) for k in range(samples)]


def _polyline(pts) -> str:
    return "M " + " L ".join(_xy(u) for u in pts)


def _arc(p, q) -> str:
    """Exact geodesic: arc of the circle through ``p``, ``q`` orthogonal to the rim."""
    a, b = geom.to_poincare(p), geom.to_poincare(q)
    det = 2.0 * (a[0] * b[1] - a[1] * b[0])
    if abs(det) < 1e-12:
        return f"M {_xy(a)} L {_xy(b)}"
    ra = a[0] ** 2 + a[1] ** 2 + 1.0
    rb = b[0] ** 2 + b[1] ** 2 + 1.0
    cx = (ra * b[1] - rb * a[1]) / det
    cy = (rb * a[0] - ra * b[0]) / det
    r = math.hypot(a[0] - cx, a[1] - cy)
    # sweep decided in screen coordinates (y flipped)
    cross = (a[0] - cx) * (-(b[1] - cy)) - (-(a[1] - cy)) * (b[0] - cx)
    sweep = 1 if cross > 0 else 0
    return f"M {_xy(a)} A {_fmt(r)},{_fmt(r)} 0 0 {sweep} {_xy(b)}"


def _edge_path(p, q, exact: bool) -> str:
    return _arc(p, q) if exact else _polyline(geodesic_samples(p, q))


def circle_samples(c: Circle, samples: int = 2 * SAMPLES) -> list[tuple[float, float]]:
    o = c.center
    # two orthonormal tangents at the center
    e1 = geom.tangent_direction(o, geom.normalize_point((o[0] + 1.0, o[1] + 0.5, o[2] + 0.25))).v
    e2 = geom.mink_cross(o, e1)
    n2 = math.sqrt(geom.mink_dot(e2, e2))
    e2 = (e2[0] / n2, e2[1] / n2, e2[2] / n2)
    pts = []
    for k in range(samples + 1):
        t = 2 * math.pi * k / samples
        v = tuple(math.cos(t) * e1[j] + math.sin(t) * e2[j] for j in range(3))
        pts.append(geom.to_poincare(geom.geodesic_flow(o, v, c.radius)))
    return pts


def render_svg(P: HPolygon, circles: bool = False, exact_arcs: bool = False) -> str:
    n = P.n
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        'viewBox="-1.05 -1.05 2.1 2.1">',
        '<circle class="boundary" cx="0" cy="0" r="1" fill="none" stroke="#444" stroke-width="0.004"/>',
        '<g fill="none" stroke-linejoin="round">',
    ]
    for i in range(n):
        lines.append(f'<path class="edge" d="{_edge_path(P[i], P[i + 1], exact_arcs)}" '
                     'stroke="#1f5fa8" stroke-width="0.006"/>')

    try:
        E = build_evolute(P)
    except GeometryError:
        E = None
    if E is not None:
        for i in range(n):
            p, q = E.centers[i], E.centers[(i + 1) % n]
            lines.append(f'<path class="evolute" d="{_edge_path(p, q, exact_arcs)}" '
                         'stroke="#c2410c" stroke-width="0.004"/>')
    if circles:
        for c in P.circumcircles:
            if isinstance(c, Circle):
                lines.append(f'<path class="circle" d="{_polyline(circle_samples(c))} Z" '
                             'stroke="#999" stroke-width="0.002"/>')
    lines.append("</g>")

    try:
        labels = build_graph(P).extremal
    except GeometryError:
        labels = (Extremal.NONE,) * n
    for i, v in enumerate(P.vertices):
        x, y = geom.to_poincare(v)
        if labels[i] is Extremal.MAX:
            lines.append(f'<rect class="extremal-max" x="{_fmt(x - 0.015)}" y="{_fmt(-y - 0.015)}" '
                         'width="0.03" height="0.03" fill="#b91c1c"/>')
        elif labels[i] is Extremal.MIN:
            lines.append(f'<polygon class="extremal-min" points="{_xy((x, y + 0.018))} '
                         f'{_xy((x - 0.016, y - 0.012))} {_xy((x + 0.016, y - 0.012))}" fill="#15803d"/>')
        else:
            lines.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(-y)}" r="0.008" fill="#1f5fa8"/>')
    if E is not None:
        try:
            cusps = detect_cusps(P, E)
        except GeometryError:
            cusps = [False] * n
        for i, is_cusp in enumerate(cusps):
            if is_cusp:
                x, y = geom.to_poincare(E.centers[i])
                lines.append(f'<circle class="cusp" cx="{_fmt(x)}" cy="{_fmt(-y)}" r="0.012" '
                             'fill="none" stroke="#c2410c" stroke-width="0.004"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
