"""Polynomial kernels over Z[gamma, alpha].

Two interchangeable implementations of the same small surface:

``flint``
    python-flint's ``fmpz_mpoly`` (compiled FLINT; multivariate gcd in C).
``python``
    sympy's sparse ``PolyElement`` rings, pure Python.

The compiled backend is picked at import when available. Set
``VFF_BACKEND=python`` (or ``flint``) to force one.
"""

import os

from . import _pure

AVAILABLE = {"python": _pure}

try:
    from . import _flint
except ImportError:  # pragma: no cover - depends on the environment
    _flint = None
else:
    AVAILABLE["flint"] = _flint


def _select():
    wanted = os.environ.get("VFF_BACKEND", "").strip().lower()
    if wanted:
        if wanted not in AVAILABLE:
            raise ImportError(
                f"VFF_BACKEND={wanted!r} requested but not available "
                f"(have: {sorted(AVAILABLE)})"
            )
        return AVAILABLE[wanted]
    return AVAILABLE.get("flint", _pure)


kernel = _select()
NAME = kernel.NAME

__all__ = ["AVAILABLE", "NAME", "kernel"]
