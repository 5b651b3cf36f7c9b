"""Search kernels with a compiled core and a pure-Python fallback.

At import time the Cython extension is preferred; if it has not been built
the pure implementation takes over with the identical interface.  Both stay
importable so the test suite can check parity and the benchmark can compare
them.
"""

from . import pure
from .common import coboundary_constraints, cocycle_system

try:
    from . import _speedups as _compiled
except ImportError:
    _compiled = None

_active = _compiled if _compiled is not None else pure

BACKEND = "compiled" if _compiled is not None else "pure"

search_coboundary = _active.search_coboundary
count_cocycles = _active.count_cocycles


def backends():
    """Importable backends keyed by name (for parity tests and benchmarks)."""
    table = {"pure": pure}
    if _compiled is not None:
        table["compiled"] = _compiled
    return table


__all__ = [
    "BACKEND",
    "backends",
    "coboundary_constraints",
    "cocycle_system",
    "count_cocycles",
    "search_coboundary",
]
