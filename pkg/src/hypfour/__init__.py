"""Curvature extrema, evolutes and density identities of polygons in the hyperbolic plane."""

from .analysis import analyze
from .circumcircle import Circle, CycleKind, circumscribe
from .config import DEFAULT, Tolerances
from .curvature import CurvatureGraph, build_graph
from .evolute import Evolute, build_evolute, theorem3_check
from .generator import GenSpec, generate
from .geom import HPoint, from_poincare, hdist, left_angle, to_poincare
from .identities import density, theorem4_check, theorem5_residual, theorem6_check
from .kernels import BACKEND
from .polygon import HPolygon, validate

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Circle",
    "CurvatureGraph",
    "CycleKind",
    "DEFAULT",
    "Evolute",
    "GenSpec",
    "HPoint",
    "HPolygon",
    "Tolerances",
    "analyze",
    "build_evolute",
    "build_graph",
    "circumscribe",
    "density",
    "from_poincare",
    "generate",
    "hdist",
    "left_angle",
    "theorem3_check",
    "theorem4_check",
    "theorem5_residual",
    "theorem6_check",
    "to_poincare",
    "validate",
    "__version__",
]
