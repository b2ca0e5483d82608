"""Lorentz transformations used to test isometry invariance.

Not a general isometry API: just rotations, boosts, the reflection that
swaps two points, and a seeded random composition.
"""

from __future__ import annotations

import math
import random

import numpy as np

from . import geom
from .geom import HPoint


def rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def boost(t: float) -> np.ndarray:
    """Translation by distance ``t`` along the ``x1`` geodesic through the origin."""
    c, s = math.cosh(t), math.sinh(t)
    return np.array([[c, s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def random_isometry(rng: random.Random, max_shift: float = 2.0) -> np.ndarray:
    """Orientation-preserving isometry: rotate, boost, rotate."""
    return rotation(rng.uniform(0, 2 * math.pi)) @ boost(rng.uniform(0, max_shift)) @ rotation(
        rng.uniform(0, 2 * math.pi))


def apply(M: np.ndarray, p) -> HPoint:
    return geom.normalize_point(tuple(float(x) for x in M @ np.asarray(p, dtype=float)))


def swap_reflection(p: HPoint, q: HPoint) -> np.ndarray:
    """Reflection in the perpendicular bisector of ``p q``; exchanges them."""
    n = np.asarray(p, dtype=float) - np.asarray(q, dtype=float)
    J = np.diag([-1.0, 1.0, 1.0])
    nn = float(n @ J @ n)
    return np.eye(3) - 2.0 * np.outer(n, J @ n) / nn
