"""Exception hierarchy."""


class GeometryError(ValueError):
    """Base class for every geometric failure raised by the package."""


class DomainError(GeometryError):
    """Input lies off the hyperboloid model."""


class BoundaryError(GeometryError):
    """Point is ideal (on or beyond the boundary of the disk)."""


class DegenerateError(GeometryError):
    """Coincident points or a configuration with no well-defined answer."""


class TieError(GeometryError):
    """A comparison landed inside its deadband (non-generic input)."""


class ConstructionError(GeometryError):
    """A derived object (evolute, defect quadrilateral) cannot be built."""


class ValidationError(GeometryError):
    """Polygon failed admissibility checks; carries the report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ExhaustionError(RuntimeError):
    """Rejection sampler ran out of attempts."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats
