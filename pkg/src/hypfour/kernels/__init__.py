"""Hot loops of polygon validation.

The compiled Cython module is used when it was built; otherwise the
pure-Python fallback with identical contracts is selected at import.
"""

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _fallback}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

default = _compiled if _compiled is not None else _fallback
BACKEND = default.NAME


def get(name=None):
    """Return the kernel module called ``name`` (default: best available)."""
    if name is None:
        return default
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available; have {sorted(BACKENDS)}") from None


__all__ = ["BACKEND", "BACKENDS", "get"]
