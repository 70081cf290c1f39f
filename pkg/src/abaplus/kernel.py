"""Kernel backend selection.

The compiled extension is used when it was built and imports cleanly;
otherwise the pure-Python twin is used.  ``ABAP_KERNEL=python`` forces the
fallback (benchmarks and parity tests rely on it).
"""
import os

from . import _kernel_py

try:
    from . import _kernel as _kernel_c
except ImportError:  # extension not built
    _kernel_c = None

MAX_COMPILED = 63


def backend_module(name=None):
    name = name or os.environ.get("ABAP_KERNEL", "auto")
    if name == "python" or _kernel_c is None:
        if name == "cython":
            raise ImportError("compiled kernel requested but abaplus._kernel is not built")
        return _kernel_py
    return _kernel_c


def make_kernel(n, targets, masks, lowered, backend=None):
    mod = backend_module(backend)
    if mod is not _kernel_py and n > MAX_COMPILED:
        mod = _kernel_py
    return mod.Kernel(n, targets, masks, lowered)


def available_backends():
    return ["python"] + (["cython"] if _kernel_c is not None else [])


def _antichain_module(masks):
    mod = backend_module()
    if mod is not _kernel_py and max(masks, default=0) >> MAX_COMPILED:
        return _kernel_py
    return mod


def maximal(masks):
    masks = list(masks)
    return _antichain_module(masks).maximal(masks)


def minimal(masks):
    masks = list(masks)
    return _antichain_module(masks).minimal(masks)


BACKEND = backend_module().BACKEND
