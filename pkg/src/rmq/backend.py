"""Decode-kernel backend selection.

Two interchangeable implementations of the batch decoder exist: a numba
@njit-compiled kernel (fast path) and a pure-numpy vectorized one (fallback,
and the path that carries operation counting).  Selection:

* env var RMQ_BACKEND = auto | numba | numpy (read at import; default auto),
* or programmatically via set_backend("numba"/"numpy"/"auto").

"auto" uses numba when it is importable and falls back to numpy otherwise.
Both backends produce identical decode results.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_numpy
from .codec import inverse_roots

__all__ = ["available_backends", "get_backend", "set_backend", "decode_batch"]

_requested = os.environ.get("RMQ_BACKEND", "auto").strip().lower() or "auto"
_resolved: str | None = None


def _numba_importable() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def available_backends() -> tuple[str, ...]:
    """Backends usable in this environment ("numpy" always; "numba" if importable)."""
    return ("numpy", "numba") if _numba_importable() else ("numpy",)


def set_backend(name: str) -> None:
    """Select the decode backend: "auto", "numba", or "numpy"."""
    global _requested, _resolved
    name = name.strip().lower()
    if name not in ("auto", "numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}; choose auto, numba, or numpy")
    if name == "numba" and not _numba_importable():
        raise ValueError("numba backend requested but numba is not importable")
    _requested = name
    _resolved = None


def get_backend() -> str:
    """The backend decode_batch will use ("numba" or "numpy")."""
    global _resolved
    if _resolved is None:
        if _requested == "numpy":
            _resolved = "numpy"
        elif _requested == "numba":
            if not _numba_importable():
                raise ValueError("RMQ_BACKEND=numba but numba is not importable")
            _resolved = "numba"
        elif _requested == "auto":
            _resolved = "numba" if _numba_importable() else "numpy"
        else:
            raise ValueError(
                f"unknown RMQ_BACKEND value {_requested!r}; choose auto, numba, or numpy"
            )
    return _resolved


def decode_batch(Y: np.ndarray, q: int, base_method: str = "auto"):
    """Route a batch decode to the selected backend."""
    if base_method not in ("auto", "full"):
        raise ValueError(f"unknown hard-decision method {base_method!r}")
    if get_backend() == "numba":
        from . import _kernels_numba
        Y = np.ascontiguousarray(Y, np.complex128)
        return _kernels_numba.decode_batch_kernel(
            Y, q, inverse_roots(q), base_method == "auto")
    return _kernels_numpy.decode_batch(Y, q, None, base_method)
