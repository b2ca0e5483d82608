"""Closed hyperbolic polygons and their admissibility predicates."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import geom, kernels
from .circumcircle import Circle, Cycle, circumscribe
from .config import DEFAULT, Tolerances
from .errors import DegenerateError, GeometryError
from .geom import HPoint

FLAGS = ("all_non_ideal", "simple", "generic_circle", "generic_line", "coherent", "convex")


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class HPolygon:
    """Closed polygonal curve; vertex ``i`` is joined to ``(i + 1) % n``.

    The closing vertex is not repeated.  Use :meth:`from_points` to get the
    counterclockwise normalization applied to loaded data.
    """

    vertices: tuple[HPoint, ...]
    tol: Tolerances = field(default=DEFAULT, compare=False, repr=False)

    def __post_init__(self):
        verts = tuple(HPoint(*map(float, v)) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise GeometryError(f"a polygon needs at least 3 vertices, got {n}")
        for i in range(n):
            if geom.hdist(verts[i], verts[(i + 1) % n], self.tol) <= self.tol.eps_sep:
                raise DegenerateError(f"consecutive vertices {i} and {(i + 1) % n} coincide")

    @classmethod
    def from_points(cls, points: Iterable[HPoint], tol: Tolerances = DEFAULT,
                    normalize_orientation: bool = True) -> "HPolygon":
        P = cls(tuple(points), tol)
        if normalize_orientation and P.total_turn() < 0:
            P = P.reversed()
        return P

    @classmethod
    def from_poincare(cls, coords: Iterable[Sequence[float]], tol: Tolerances = DEFAULT,
                      normalize_orientation: bool = True) -> "HPolygon":
        return cls.from_points((geom.from_poincare(u, tol) for u in coords), tol, normalize_orientation)

    @classmethod
    def from_hyperboloid(cls, coords: Iterable[Sequence[float]], tol: Tolerances = DEFAULT,
                         normalize_orientation: bool = True) -> "HPolygon":
        return cls.from_points((geom.hpoint(*c, tol=tol) for c in coords), tol, normalize_orientation)

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> HPoint:
        return self.vertices[i % len(self.vertices)]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def triple(self, i: int) -> tuple[HPoint, HPoint, HPoint]:
        return self[i - 1], self[i], self[i + 1]

    def reversed(self) -> "HPolygon":
        return HPolygon(tuple(reversed(self.vertices)), self.tol)

    def rotated(self, k: int) -> "HPolygon":
        k %= self.n
        return HPolygon(self.vertices[k:] + self.vertices[:k], self.tol)

    def map(self, fn) -> "HPolygon":
        return HPolygon(tuple(fn(v) for v in self.vertices), self.tol)

    def poincare(self) -> list[tuple[float, float]]:
        return [geom.to_poincare(v) for v in self.vertices]

    @cached_property
    def coords(self) -> np.ndarray:
        return np.array(self.vertices, dtype=np.float64)

    def total_turn(self) -> float:
        """Sum of signed turns; ``+2 pi`` times the density."""
        return sum(geom.signed_turn(*self.triple(i), self.tol) for i in range(self.n))

    @cached_property
    def left_angles(self) -> tuple[float, ...]:
        return tuple(geom.left_angle(*self.triple(i), self.tol) for i in range(self.n))

    @cached_property
    def circumcircles(self) -> tuple[Cycle, ...]:
        return tuple(circumscribe(*self.triple(i), self.tol) for i in range(self.n))

    def circle(self, i: int) -> Circle:
        c = self.circumcircles[i % self.n]
        if not isinstance(c, Circle):
            raise DegenerateError(f"vertices around {i % self.n} lie on a {c.value}, not a circle")
        return c

    def radius(self, i: int) -> float:
        return self.circle(i).radius


@dataclass(frozen=True)
class ValidationReport:
    all_non_ideal: bool
    simple: bool
    generic_circle: bool
    generic_line: bool
    coherent: bool
    convex: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def generic(self) -> bool:
        return self.generic_circle and self.generic_line

    @property
    def ok(self) -> bool:
        return all(getattr(self, f) for f in FLAGS)

    def failed(self) -> list[str]:
        return [f for f in FLAGS if not getattr(self, f)]

    def to_dict(self) -> dict:
        out = {f: getattr(self, f) for f in FLAGS}
        out["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return out


def _check(P: HPolygon, flag: str, tol: Tolerances, fast_generic: bool, backend):
    k = kernels.get(backend)
    V = P.coords
    if flag == "all_non_ideal":
        for i, v in enumerate(P.vertices):
            if not (all(math.isfinite(c) for c in v) and geom.on_hyperboloid(v, tol)):
                return (i,)
        return None
    if flag == "simple":
        return k.first_intersection(V, tol.eps_side)
    if flag == "generic_circle":
        return k.first_concyclic(V, tol.eps_sep, tol.eps_side, tol.eps_class, tol.eps_id, fast_generic)
    if flag == "generic_line":
        return k.first_collinear(V, tol.eps_side)
    if flag == "coherent":
        return k.first_incoherent(V, tol.eps_side, tol.eps_class)
    if flag == "convex":
        return k.first_reflex(V, tol.eps_side)
    raise KeyError(flag)


def validate(P: HPolygon, tol: Tolerances | None = None, fast_generic: bool = False,
             backend: str | None = None) -> ValidationReport:
    """Run every admissibility check; each failed flag gets its first witness.

    ``fast_generic`` restricts the concyclicity test to quadruples of
    consecutive vertices.
    """
    tol = tol or P.tol
    flags, witnesses = {}, {}
    for f in FLAGS:
        w = _check(P, f, tol, fast_generic, backend)
        flags[f] = w is None
        if w is not None:
            witnesses[f] = tuple(int(i) for i in w)
    return ValidationReport(**flags, witnesses=witnesses)


SCREEN_ORDER = ("simple", "generic_line", "generic_circle", "coherent", "convex")


def screen(P: HPolygon, tol: Tolerances | None = None, fast_generic: bool = False,
           backend: str | None = None) -> str | None:
    """Name of the first failing flag in :data:`SCREEN_ORDER`, or ``None``."""
    tol = tol or P.tol
    for f in SCREEN_ORDER:
        if _check(P, f, tol, fast_generic, backend) is not None:
            return f
    return None


def vertex_sign(P: HPolygon, i: int) -> Sign:
    a, b, c = P.triple(i)
    if abs(geom.scaled_det(a, b, c)) <= P.tol.eps_side:
        raise DegenerateError(f"vertex {i % P.n} is collinear with its neighbours")
    return Sign.POSITIVE if P.left_angles[i % P.n] <= math.pi else Sign.NEGATIVE


def vertex_signs(P: HPolygon) -> tuple[Sign, ...]:
    return tuple(vertex_sign(P, i) for i in range(P.n))


def is_convex(P: HPolygon) -> bool:
    return all(s is Sign.POSITIVE for s in vertex_signs(P))


def edge_midpoints(P: HPolygon) -> list[HPoint]:
    """``M[i]`` is the midpoint of the edge from vertex ``i`` to ``i + 1``."""
    return [geom.midpoint(P[i], P[i + 1], P.tol) for i in range(P.n)]
