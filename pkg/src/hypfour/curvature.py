"""Discrete curvature ordering of consecutive vertices and its cycle graph.

Edge ``i`` of the graph joins ``V_i`` and ``V_{i+1}``.  Its arrow points
from the vertex of greater curvature to the lesser one, so a curvature
minimum has every edge entering it and a maximum has every edge exiting.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .circumcircle import Position, point_vs_circle
from .errors import TieError
from .polygon import HPolygon, Sign, is_convex, vertex_sign


class Direction(enum.Enum):
    UP = "up"  # V_i < V_{i+1}
    DOWN = "down"  # V_i > V_{i+1}

    def flipped(self) -> "Direction":
        return Direction.DOWN if self is Direction.UP else Direction.UP


class Extremal(enum.Enum):
    MAX = "max"
    MIN = "min"
    NONE = "none"


def compare(P: HPolygon, i: int) -> Direction:
    """Compare the curvature at ``V_i`` with ``V_{i+1}``.

    Decided by whether ``V_{i+2}`` falls inside or outside the circle
    through ``V_{i-1}, V_i, V_{i+1}``, with the reading flipped according to
    the signs of the two vertices.
    """
    w = point_vs_circle(P.circle(i), P[i + 2], P.tol)
    if w is Position.ON:
        raise TieError(f"vertex {(i + 2) % P.n} lies on the circle through {(i - 1) % P.n}..{(i + 1) % P.n}")
    next_positive = vertex_sign(P, i + 1) is Sign.POSITIVE
    if vertex_sign(P, i) is Sign.POSITIVE:
        greater = (w is Position.OUTSIDE) if next_positive else (w is Position.INSIDE)
        return Direction.DOWN if greater else Direction.UP
    # negative V_i: "greater" reads as "less" and inside/outside swap
    less = (w is Position.INSIDE) if next_positive else (w is Position.OUTSIDE)
    return Direction.UP if less else Direction.DOWN


def radii_compare(P: HPolygon, i: int) -> Direction:
    """Curvature comparison read off the circumradii (convex polygons only)."""
    if not is_convex(P):
        raise ValueError("radii comparison is only meaningful for convex polygons")
    r0, r1 = P.radius(i), P.radius(i + 1)
    if abs(r0 - r1) < P.tol.eps_id:
        raise TieError(f"circumradii at {i % P.n} and {(i + 1) % P.n} are equal within tolerance")
    return Direction.UP if r0 > r1 else Direction.DOWN


@dataclass(frozen=True)
class CurvatureGraph:
    edge_dir: tuple[Direction, ...]
    extremal: tuple[Extremal, ...]
    l_plus: int  # local minima: every edge enters
    l_minus: int  # local maxima: every edge exits

    @property
    def n(self) -> int:
        return len(self.edge_dir)

    @property
    def N(self) -> int:
        return self.l_plus + self.l_minus

    def exits(self, i: int) -> int:
        """Number of arrows leaving vertex ``i``."""
        n = self.n
        out = 0
        if self.edge_dir[(i - 1) % n] is Direction.UP:  # V_{i-1} < V_i
            out += 1
        if self.edge_dir[i % n] is Direction.DOWN:  # V_i > V_{i+1}
            out += 1
        return out


def graph_from_directions(dirs: Sequence[Direction]) -> CurvatureGraph:
    dirs = tuple(dirs)
    n = len(dirs)
    ext = []
    for i in range(n):
        before, after = dirs[i - 1], dirs[i]
        if before is Direction.UP and after is Direction.DOWN:
            ext.append(Extremal.MAX)
        elif before is Direction.DOWN and after is Direction.UP:
            ext.append(Extremal.MIN)
        else:
            ext.append(Extremal.NONE)
    return CurvatureGraph(
        edge_dir=dirs,
        extremal=tuple(ext),
        l_plus=ext.count(Extremal.MIN),
        l_minus=ext.count(Extremal.MAX),
    )


def build_graph(P: HPolygon) -> CurvatureGraph:
    return graph_from_directions([compare(P, i) for i in range(P.n)])


def vertex_index(g: CurvatureGraph, i: int) -> int:
    return 1 - g.exits(i)


def poincare_hopf_check(g: CurvatureGraph) -> bool:
    """Index sum equals the Euler characteristic of a cycle (zero), and l+ = l-."""
    return sum(vertex_index(g, i) for i in range(g.n)) == 0 and g.l_plus == g.l_minus
