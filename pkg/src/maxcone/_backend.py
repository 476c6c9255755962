"""Pick the compiled kernels when importable, else the numpy fallback.

Set ``MAXCONE_BACKEND=python`` to force the fallback.
"""
import os

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _fallback}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

if os.environ.get("MAXCONE_BACKEND", "").lower() == "python" or _compiled is None:
    NAME = "python"
else:
    NAME = "compiled"

kernels = BACKENDS[NAME]


def get(name=None):
    """Return the kernel module for ``name`` (``None`` or "auto" for the default)."""
    if name in (None, "auto"):
        return kernels
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
