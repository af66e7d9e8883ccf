"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``QFISH_PURE=1`` in the environment to force the pure backend (useful
for benchmarking and for debugging suspected kernel issues).
"""

from __future__ import annotations

import os

from . import _kernels as _pure

_fast = None
if not os.environ.get("QFISH_PURE"):
    try:
        from . import _speedups as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None

_impl = _fast if _fast is not None else _pure

mul = _impl.mul
mul_trunc = _impl.mul_trunc


def backend_name() -> str:
    return "compiled" if _impl is _fast else "pure"


def available_backends() -> dict:
    """Both kernel modules, for benchmarks and cross-checking tests."""
    out = {"pure": _pure}
    if _fast is not None:
        out["compiled"] = _fast
    return out
