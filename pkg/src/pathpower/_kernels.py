"""Kernel dispatch: compiled fast paths when available, pure Python otherwise.

The compiled extension handles graphs with at most 64 vertices; larger
graphs always go through the pure-Python kernels, whose Python-int masks
have no width limit.  Set PATHPOWER_PURE=1 in the environment to force the
pure path (used by the benchmark and the parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("PATHPOWER_PURE"):
    _speedups = None
else:
    try:
        from . import _speedups  # type: ignore[attr-defined]
    except ImportError:
        _speedups = None

HAVE_SPEEDUPS = _speedups is not None
_COMPILED_MAX_BITS = 64


def backend_for(n_vertices: int) -> str:
    if _speedups is not None and n_vertices <= _COMPILED_MAX_BITS:
        return "compiled"
    return "pure"


def scan_min_induced_degree(
    adj: list[int],
    target: int,
    stop_at: int = 1,
    max_nodes: int | None = None,
    time_limit: float | None = None,
    lead: int = -1,
):
    impl = _speedups if backend_for(len(adj)) == "compiled" else _kernels_py
    return impl.scan_min_induced_degree(
        adj,
        target,
        stop_at,
        -1 if max_nodes is None else max_nodes,
        0.0 if time_limit is None else time_limit,
        lead,
    )


def solve_max_independent_set(
    adj: list[int],
    max_nodes: int | None = None,
    time_limit: float | None = None,
    seed_mask: int = 0,
):
    impl = _speedups if backend_for(len(adj)) == "compiled" else _kernels_py
    return impl.solve_max_independent_set(
        adj,
        -1 if max_nodes is None else max_nodes,
        0.0 if time_limit is None else time_limit,
        seed_mask,
    )
