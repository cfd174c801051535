"""Pick the compiled search kernels when available.

Set ``HOOKCONTENT_PURE=1`` to force the pure-Python kernels.
"""
import os

from . import _pykernels

BACKEND = "python"
kernels = _pykernels

if os.environ.get("HOOKCONTENT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        kernels = _kernels
        BACKEND = "cython"


def get_kernels(name=None):
    """Return the kernel module named ``"python"`` or ``"cython"`` (default: active)."""
    if name is None:
        return kernels
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown kernel backend {name!r}")
