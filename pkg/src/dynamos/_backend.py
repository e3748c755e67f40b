"""Kernel backend selection: compiled extension when built, pure Python otherwise."""

from __future__ import annotations

from . import _kernel_py

try:
    from . import _kernel  # type: ignore[attr-defined]

    HAS_COMPILED = True
except ImportError:
    _kernel = None  # type: ignore[assignment]
    HAS_COMPILED = False

DEFAULT = _kernel if HAS_COMPILED else _kernel_py


def backend_name() -> str:
    return DEFAULT.BACKEND_NAME


def get_backend(name: str | None = None):
    """Return a kernel module by name ("pure" or "compiled"); default otherwise."""
    if name is None:
        return DEFAULT
    if name == "pure":
        return _kernel_py
    if name == "compiled":
        if not HAS_COMPILED:
            raise RuntimeError("compiled kernel is not available in this install")
        return _kernel
    raise ValueError(f"unknown backend {name!r}")


def graph_handle(g, backend=None):
    """Per-backend preprocessed adjacency, cached on the graph object."""
    backend = backend or DEFAULT
    key = backend.BACKEND_NAME
    handle = g._cache.get(key)
    if handle is None:
        handle = backend.prepare(g.n, g.in_adj, g.out_adj)
        g._cache[key] = handle
    return handle
