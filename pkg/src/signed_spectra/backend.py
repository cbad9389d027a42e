"""Backend and worker-count selection.

Two kernel backends exist: "numba" (JIT-compiled hot loops, the default)
and "numpy" (pure-numpy fallbacks).  The active backend is chosen once at
import from the SIGNED_SPECTRA_BACKEND environment variable; tests and the
benchmark may override per call.
"""

import os

from .errors import BadParam

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_VALID = ("numba", "numpy")


def resolve_backend(name=None):
    """Return "numba" or "numpy" from an explicit name or the environment."""
    if name is None:
        name = os.environ.get("SIGNED_SPECTRA_BACKEND", "").strip().lower()
        if not name:
            name = "numba" if HAVE_NUMBA else "numpy"
    if name not in _VALID:
        raise BadParam(f"unknown backend {name!r}, expected one of {_VALID}")
    if name == "numba" and not HAVE_NUMBA:
        raise BadParam("numba backend requested but numba is not importable")
    return name


DEFAULT_BACKEND = resolve_backend()


def worker_count():
    """Worker count for shardable enumerations (SIGNED_SPECTRA_WORKERS)."""
    raw = os.environ.get("SIGNED_SPECTRA_WORKERS", "").strip()
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise BadParam(f"SIGNED_SPECTRA_WORKERS must be an integer, got {raw!r}")
        if n < 1:
            raise BadParam("SIGNED_SPECTRA_WORKERS must be >= 1")
        return n
    return os.cpu_count() or 1
