"""Wall-clock scaling of the solver on generated instances."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .generate import GenConfig, bench_config, generate_instance
from .solver import solve


@dataclass(frozen=True)
class BenchRecord:
    n: int
    repeat: int
    wall_time: float
    Z: float
    seed: int


def run_bench(n_list: Iterable[int], repeats: int = 3, seed: int = 0, base: GenConfig = GenConfig()) -> Iterator[BenchRecord]:
    """Solve one generated instance per (n, repeat), yielding records as they finish.

    Repeat r of every size uses instance seed ``seed + r``. Sizes are
    interleaved (every n once per repeat) so that slow drift in machine speed
    spreads over all sizes instead of skewing the largest ones.
    """
    sizes = list(n_list)
    for n in sizes:
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
    for r in range(repeats):
        for n in sizes:
            inst = generate_instance(n, seed + r, bench_config(n, base))
            t0 = time.perf_counter()
            sol = solve(inst)
            dt = time.perf_counter() - t0
            yield BenchRecord(n, r, max(dt, 1e-9), sol.total_cost, seed + r)


def fitted_exponent(records: Sequence[BenchRecord]) -> Optional[float]:
    """Slope of log(median wall time) against log(n); None with fewer than two sizes."""
    by_n: dict[int, list[float]] = {}
    for rec in records:
        by_n.setdefault(rec.n, []).append(rec.wall_time)
    if len(by_n) < 2:
        return None
    ns = sorted(by_n)
    x = np.log(ns)
    y = np.log([statistics.median(by_n[n]) for n in ns])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
