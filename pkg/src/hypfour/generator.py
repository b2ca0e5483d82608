"""Seeded rejection sampling of admissible polygons.

Randomness comes from a SplitMix64 stream: state advances by the golden
gamma ``0x9E3779B97F4A7C15`` per draw and each output is the standard
SplitMix64 finalizer of the new state.  Doubles take the top 53 bits.
The same seed yields bit-identical polygons in any implementation that
follows this rule.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import geom
from .circumcircle import Circle
from .config import DEFAULT, Tolerances
from .errors import ExhaustionError, GeometryError, ValidationError
from .polygon import HPolygon, screen, validate

PRNG_NAME = "splitmix64"
MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MAX_ATTEMPTS = 10_000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform double in ``[0, 1)``."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()


def derive_seed(*parts: int) -> int:
    """Mix integers into one 64-bit seed (used to stride seeds per polygon)."""
    h = 0
    for p in parts:
        h = SplitMix64(h ^ (p & MASK64)).next_u64()
    return h


class Family(enum.Enum):
    CONVEX_RANDOM = "convex_random"
    PERTURBED_REGULAR = "perturbed_regular"


class AngleSampling(enum.Enum):
    STRATIFIED = "stratified"  # one uniform angle per sector of width 2 pi / n
    UNIFORM = "uniform"  # n iid uniform angles, sorted


def default_radial_range(n: int, r_max: float = 0.5, width: float = 8.0) -> tuple[float, float]:
    """Poincare radii ``[r_max (1 - width / n^2), r_max]``.

    Curvature perturbations grow like ``n^2`` times the radial noise, so the
    band narrows with ``n`` to keep convex, coherent candidates common.
    """
    return (r_max * max(0.0, 1.0 - width / (n * n)), r_max)


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int
    radial_range: tuple[float, float] | None = None
    jitter: float = 1e-2
    family: Family = Family.CONVEX_RANDOM
    angle_sampling: AngleSampling = AngleSampling.STRATIFIED

    def __post_init__(self):
        if self.radial_range is None:
            object.__setattr__(self, "radial_range", default_radial_range(self.n))
        object.__setattr__(self, "radial_range", tuple(map(float, self.radial_range)))
        r_min, r_max = self.radial_range
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if not 0.0 <= r_min <= r_max < 1.0 - DEFAULT.eps_boundary:
            raise ValueError(f"radial range {self.radial_range} must lie in [0, 1)")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "seed": self.seed,
            "radial_range": list(self.radial_range),
            "jitter": self.jitter,
            "family": self.family.value,
            "angle_sampling": self.angle_sampling.value,
        }


@dataclass
class GenStats:
    attempts: int = 0
    rejected_simple: int = 0
    rejected_generic: int = 0
    rejected_coherent: int = 0
    rejected_convex: int = 0
    rejected_other: int = field(default=0)  # construction failures (e.g. ideal points)

    def reject(self, reason: str):
        key = {
            "simple": "rejected_simple",
            "generic_line": "rejected_generic",
            "generic_circle": "rejected_generic",
            "radii": "rejected_generic",
            "coherent": "rejected_coherent",
            "convex": "rejected_convex",
        }.get(reason, "rejected_other")
        setattr(self, key, getattr(self, key) + 1)

    @property
    def rejections(self) -> int:
        return (self.rejected_simple + self.rejected_generic + self.rejected_coherent
                + self.rejected_convex + self.rejected_other)

    def to_dict(self) -> dict:
        return dict(vars(self))


def radii_separated(P: HPolygon, gap: float) -> bool:
    """Adjacent circumradii differ by more than ``gap`` (all triples circles)."""
    radii = []
    for c in P.circumcircles:
        if not isinstance(c, Circle):
            return False
        radii.append(c.radius)
    return all(abs(radii[i] - radii[(i + 1) % P.n]) > gap for i in range(P.n))


def _accept(P: HPolygon, tol: Tolerances, backend) -> str | None:
    reason = screen(P, tol, backend=backend)
    if reason is None and not radii_separated(P, 10 * tol.eps_id):
        reason = "radii"
    return reason


def _sample(make, tol: Tolerances, max_attempts: int, backend, what: str):
    stats = GenStats()
    while stats.attempts < max_attempts:
        stats.attempts += 1
        try:
            P = HPolygon.from_poincare(make(), tol, normalize_orientation=False)
        except GeometryError:
            stats.reject("other")
            continue
        reason = _accept(P, tol, backend)
        if reason is None:
            return P, stats
        stats.reject(reason)
    raise ExhaustionError(f"no admissible {what} after {max_attempts} attempts", stats)


def random_convex_polygon(spec: GenSpec, tol: Tolerances = DEFAULT,
                          max_attempts: int = MAX_ATTEMPTS, backend=None):
    """Sample sorted angles and radii until the candidate passes every check.

    Sorted angles make each candidate star-shaped about the origin and
    counterclockwise; convexity and the rest are enforced by rejection.
    Returns ``(polygon, stats)``.
    """
    rng = SplitMix64(spec.seed)
    r_min, r_max = spec.radial_range
    n = spec.n

    def make():
        if spec.angle_sampling is AngleSampling.STRATIFIED:
            offset = rng.uniform(0.0, 2 * math.pi)
            angles = [offset + 2 * math.pi * (k + rng.random()) / n for k in range(n)]
        else:
            angles = sorted(rng.uniform(0.0, 2 * math.pi) for _ in range(n))
        radii = [rng.uniform(r_min, r_max) for _ in range(spec.n)]
        return [(r * math.cos(t), r * math.sin(t)) for r, t in zip(radii, angles)]

    return _sample(make, tol, max_attempts, backend, f"convex {spec.n}-gon")


def perturbed_regular(n: int, jitter: float, seed: int, radius: float = 0.4,
                      tol: Tolerances = DEFAULT, max_attempts: int = MAX_ATTEMPTS, backend=None):
    """Regular ``n``-gon with each vertex moved by at most ``jitter``.

    Regular polygons are concyclic, so with ``jitter == 0`` every candidate
    is rejected.
    """
    if jitter < 0:
        raise ValueError("jitter must be non-negative")
    rng = SplitMix64(seed)

    def make():
        pts = []
        for k in range(n):
            t = 2 * math.pi * k / n
            rho = jitter * math.sqrt(rng.random())
            phi = rng.uniform(0.0, 2 * math.pi)
            pts.append((radius * math.cos(t) + rho * math.cos(phi), radius * math.sin(t) + rho * math.sin(phi)))
        return pts

    return _sample(make, tol, max_attempts, backend, f"perturbed regular {n}-gon")


def generate(spec: GenSpec, tol: Tolerances = DEFAULT, max_attempts: int = MAX_ATTEMPTS, backend=None):
    if spec.family is Family.PERTURBED_REGULAR:
        return perturbed_regular(spec.n, spec.jitter, spec.seed, tol=tol, max_attempts=max_attempts,
                                 backend=backend)
    return random_convex_polygon(spec, tol, max_attempts, backend)


def shrink(P: HPolygon, lam: float) -> HPolygon:
    """Scale Poincare coordinates by ``lam`` and revalidate."""
    if not 0.0 < lam <= 1.0:
        raise ValueError("shrink factor must lie in (0, 1]")
    if lam == 1.0:
        Q = P
    else:
        Q = HPolygon(tuple(geom.from_poincare((lam * x, lam * y), P.tol) for x, y in P.poincare()), P.tol)
    report = validate(Q)
    if not report.ok:
        raise ValidationError(f"shrunk polygon (lambda={lam}) fails: {report.failed()}", report)
    return Q
