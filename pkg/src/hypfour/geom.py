"""Primitives of the hyperbolic plane in the hyperboloid model.

Points are unit timelike vectors on the upper sheet of ``<x, x> = -1`` in
Minkowski space with signature ``(-, +, +)``.  The Poincare disk is used
only for input and output.  Every constructive operation renormalizes its
result back onto the sheet.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .config import DEFAULT, Tolerances
from .errors import BoundaryError, DegenerateError, DomainError

Vec3 = tuple[float, float, float]


class HPoint(NamedTuple):
    x0: float
    x1: float
    x2: float


class TangentVector(NamedTuple):
    base: HPoint
    v: Vec3


class GeodesicNormal(NamedTuple):
    """Unit spacelike normal of the plane cutting out a geodesic."""

    n: Vec3


ORIGIN = HPoint(1.0, 0.0, 0.0)


def mink_dot(a: Sequence[float], b: Sequence[float]) -> float:
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def mink_cross(a: Sequence[float], b: Sequence[float]) -> Vec3:
    """Vector Minkowski-orthogonal to both ``a`` and ``b``."""
    return (
        -(a[1] * b[2] - a[2] * b[1]),
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def det3(a: Sequence[float], b: Sequence[float], c: Sequence[float]) -> float:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def euclid_norm(a: Sequence[float]) -> float:
    return math.sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])


def _sub(a, b) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def normalize_point(x: Sequence[float]) -> HPoint:
    """Project a timelike vector onto the upper sheet."""
    q = -mink_dot(x, x)
    if not q > 0.0:
        raise DomainError(f"vector {tuple(x)} is not timelike")
    s = math.sqrt(q)
    if x[0] < 0:
        s = -s
    return HPoint(x[0] / s, x[1] / s, x[2] / s)


def hpoint(x0: float, x1: float, x2: float, tol: Tolerances = DEFAULT) -> HPoint:
    """Checked constructor: finite, on the upper sheet within ``eps_norm``."""
    if not all(math.isfinite(c) for c in (x0, x1, x2)):
        raise BoundaryError("non-finite coordinates (ideal point)")
    if x0 <= 0:
        raise DomainError("point is not on the upper sheet")
    # relative check; far-out points carry cosh-sized coordinates
    drift = abs(mink_dot((x0, x1, x2), (x0, x1, x2)) + 1.0) / (x0 * x0)
    if drift > tol.eps_norm:
        raise DomainError(f"point off the hyperboloid (drift {drift:.3g})")
    return normalize_point((x0, x1, x2))


def on_hyperboloid(p: Sequence[float], tol: Tolerances = DEFAULT) -> bool:
    return p[0] > 0 and abs(mink_dot(p, p) + 1.0) <= tol.eps_norm * max(1.0, p[0] * p[0])


def hdist(p: Sequence[float], q: Sequence[float], tol: Tolerances = DEFAULT) -> float:
    """Hyperbolic distance.

    Uses ``2 asinh(|p - q|_M / 2)``, which equals ``acosh(-<p, q>)`` but
    keeps full precision for nearby points.
    """
    c = -mink_dot(p, q)
    if c < 1.0 - tol.eps_norm * max(1.0, abs(c)):
        raise DomainError(f"-<p,q> = {c!r} < 1: inputs are off the model")
    d = _sub(p, q)
    s = mink_dot(d, d)
    if s <= 0.0:
        return 0.0
    return 2.0 * math.asinh(0.5 * math.sqrt(s))


def from_poincare(u: Sequence[float], tol: Tolerances = DEFAULT) -> HPoint:
    x, y = float(u[0]), float(u[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise BoundaryError("non-finite Poincare coordinates")
    r2 = x * x + y * y
    if math.sqrt(r2) >= 1.0 - tol.eps_boundary:
        raise BoundaryError(f"Poincare point {(x, y)} is ideal")
    k = 1.0 / (1.0 - r2)
    return normalize_point(((1.0 + r2) * k, 2.0 * x * k, 2.0 * y * k))


def to_poincare(p: Sequence[float]) -> tuple[float, float]:
    return (p[1] / (1.0 + p[0]), p[2] / (1.0 + p[0]))


def geodesic_normal(p: HPoint, q: HPoint, tol: Tolerances = DEFAULT) -> GeodesicNormal:
    if hdist(p, q, tol) <= tol.eps_sep:
        raise DegenerateError("geodesic through coincident points")
    n = mink_cross(p, q)
    s = math.sqrt(mink_dot(n, n))
    return GeodesicNormal((n[0] / s, n[1] / s, n[2] / s))


def side_of(x: Sequence[float], normal: GeodesicNormal, tol: Tolerances = DEFAULT) -> int:
    """Sign of ``<x, n>``: which side of the geodesic ``x`` lies on.

    ``<x, n>`` is the hyperbolic sine of the signed distance to the
    geodesic, so the deadband is an absolute distance.
    """
    v = mink_dot(x, normal.n)
    if abs(v) <= tol.eps_side:
        return 0
    return 1 if v > 0 else -1


def midpoint(p: HPoint, q: HPoint, tol: Tolerances = DEFAULT) -> HPoint:
    if hdist(p, q, tol) <= tol.eps_sep:
        raise DegenerateError("midpoint of coincident points")
    return normalize_point((p[0] + q[0], p[1] + q[1], p[2] + q[2]))


def tangent_direction(at: HPoint, toward: HPoint, tol: Tolerances = DEFAULT) -> TangentVector:
    """Unit tangent at ``at`` of the geodesic heading to ``toward``."""
    d = _sub(toward, at)
    s = mink_dot(d, d)
    if s <= tol.eps_sep * tol.eps_sep:
        raise DegenerateError("tangent direction between coincident points")
    # toward + <toward, at> at, rewritten to avoid cancellation
    h = 0.5 * s
    v = (d[0] - h * at[0], d[1] - h * at[1], d[2] - h * at[2])
    n = math.sqrt(mink_dot(v, v))
    return TangentVector(at, (v[0] / n, v[1] / n, v[2] / n))


def geodesic_flow(at: HPoint, v: Sequence[float], t: float) -> HPoint:
    """Walk distance ``t`` from ``at`` along the unit tangent ``v``."""
    c, s = math.cosh(t), math.sinh(t)
    return normalize_point((c * at[0] + s * v[0], c * at[1] + s * v[1], c * at[2] + s * v[2]))


def local_direction(at: HPoint, toward: Sequence[float]) -> tuple[float, float]:
    """Planar coordinates of ``toward`` after the boost taking ``at`` to the origin.

    At the origin the tangent plane is the ``(x1, x2)`` plane, so the
    returned 2-vector points along the geodesic from ``at`` to ``toward``.
    Measuring angles in this frame avoids the cancellation that plagues
    Minkowski products of large tangent vectors at far-out vertices.
    """
    k = (at[1] * toward[1] + at[2] * toward[2]) / (1.0 + at[0]) - toward[0]
    return (toward[1] + k * at[1], toward[2] + k * at[2])


def _turn(at: HPoint, back: Sequence[float], ahead: Sequence[float], tol: Tolerances) -> float:
    bx, by = local_direction(at, back)
    fx, fy = local_direction(at, ahead)
    nb = math.hypot(bx, by)
    nf = math.hypot(fx, fy)
    if nb <= tol.eps_sep or nf <= tol.eps_sep:
        raise DegenerateError("angle at a vertex coinciding with a neighbour")
    # incoming direction is the reverse of the ray back to the previous point
    return math.atan2(-bx * fy + by * fx, -(bx * fx + by * fy))


def signed_turn(A: HPoint, B: HPoint, C: HPoint, tol: Tolerances = DEFAULT) -> float:
    """Signed turn angle at ``B`` of the path A -> B -> C, in ``(-pi, pi]``.

    Positive for a counterclockwise (leftward) turn.
    """
    return _turn(B, A, C, tol)


def left_angle(A: HPoint, B: HPoint, C: HPoint, tol: Tolerances = DEFAULT) -> float:
    """Angle at ``B`` on the left of the directed path A -> B -> C.

    Lies in ``(0, 2 pi)``: below pi for a left turn, above pi for a right
    turn, exactly pi for straight continuation.  Folding back onto the
    incoming edge is degenerate.
    """
    tau = _turn(B, A, C, tol)
    if math.pi - abs(tau) <= tol.eps_side:
        raise DegenerateError("path folds back on itself (zero angle)")
    return math.pi - tau


def vertex_angle(A: HPoint, B: HPoint, C: HPoint, tol: Tolerances = DEFAULT) -> float:
    """Unsigned angle in ``[0, pi]`` at ``B`` between the rays to ``A`` and ``C``."""
    return math.pi - abs(_turn(B, A, C, tol))


def triangle_area(a: HPoint, b: HPoint, c: HPoint) -> float:
    """Area of a geodesic triangle straight from vertex coordinates.

    Hyperbolic analogue of the Van Oosterom-Strackee solid-angle formula:
    ``tan(A / 2) = |det[a, b, c]| / (1 + cosh ab + cosh bc + cosh ca)``.
    Shares no code with the angle-defect route.
    """
    num = abs(det3(a, b, c))
    den = 1.0 - mink_dot(a, b) - mink_dot(b, c) - mink_dot(c, a)
    return 2.0 * math.atan2(num, den)


def scaled_det(a: Sequence[float], b: Sequence[float], c: Sequence[float]) -> float:
    """``det[a, b, c]`` divided by the product of Euclidean norms."""
    return det3(a, b, c) / (euclid_norm(a) * euclid_norm(b) * euclid_norm(c))
