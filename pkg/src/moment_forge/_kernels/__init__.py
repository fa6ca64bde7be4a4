"""Hot integer kernels, compiled when available.

The Cython build is optional.  Set ``MOMENT_FORGE_PURE=1`` to force the
Python fallback (used by the benchmark and by the kernel-equivalence tests).
"""
import os

from . import _pure

BACKEND = "python"
convolve = _pure.convolve
dot_window = _pure.dot_window

if os.environ.get("MOMENT_FORGE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        _ckernels = None
    if _ckernels is not None:
        BACKEND = "cython"
        convolve = _ckernels.convolve
        dot_window = _ckernels.dot_window

__all__ = ["BACKEND", "convolve", "dot_window"]
