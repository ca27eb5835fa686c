#!/usr/bin/env python3
"""Benchmark the compiled search kernels against the pure-Python fallback.

Runs the subset scan (full enumeration, no early exit) and the
independent-set solver on a few grid instances with both backends and
prints the wall times and speedups.

Usage:
    python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from pathpower import PathPower, alpha_formula
from pathpower import _kernels_py

try:
    from pathpower import _speedups
except ImportError:
    _speedups = None


def time_call(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def bench_scan(m: int, k: int, s: int = 1):
    g = PathPower(m, k)
    adj = g.adjacency_masks()
    target = alpha_formula(m, k) + s
    label = f"scan  [{m}]^{k} target={target}"
    args = (adj, target, 0, -1, 0.0, -1)  # stop_at=0: full pruned enumeration
    return label, args, _kernels_py.scan_min_induced_degree, (
        _speedups.scan_min_induced_degree if _speedups else None
    )


def bench_mis(m: int, k: int):
    g = PathPower(m, k)
    adj = g.adjacency_masks()
    label = f"mis   [{m}]^{k} n={g.n_vertices}"
    args = (adj, -1, 0.0, 0)
    return label, args, _kernels_py.solve_max_independent_set, (
        _speedups.solve_max_independent_set if _speedups else None
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="skip the slowest case")
    opts = parser.parse_args()

    cases = [
        bench_scan(3, 2),
        bench_scan(5, 2),
        bench_scan(3, 3),
        bench_mis(5, 2),
        bench_mis(2, 5),
    ]
    if not opts.quick:
        cases.append(bench_scan(2, 5))  # ~4.6M nodes, the heavy one

    if _speedups is None:
        print("compiled extension not available; timing the pure backend only\n")

    header = f"{'case':<28} {'pure':>10} {'compiled':>10} {'speedup':>8}  result"
    print(header)
    print("-" * len(header))
    for label, args, pure_fn, fast_fn in cases:
        t_pure, out = time_call(pure_fn, *args)
        if fast_fn is not None and len(args[0]) <= 64:
            t_fast, out_fast = time_call(fast_fn, *args)
            if out_fast != out:
                print(f"{label:<28}  MISMATCH pure={out} compiled={out_fast}")
                return 1
            print(f"{label:<28} {t_pure:>9.4f}s {t_fast:>9.4f}s {t_pure / max(t_fast, 1e-9):>7.1f}x  {out[0]}")
        else:
            print(f"{label:<28} {t_pure:>9.4f}s {'-':>10} {'-':>8}  {out[0]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
