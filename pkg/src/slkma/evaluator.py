"""Direct cost evaluation of a schedule with given slack windows.

Nothing here uses the positional-weight algebra. Each job's window is
``[p + q1, p + q2]`` with ``p`` its actual (deteriorated) processing time,
earliness and tardiness are measured against that window, and the cost is
summed term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Instance, Schedule, WindowParams
from .timing import Timeline, build_timeline


@dataclass(frozen=True)
class CostBreakdown:
    d1: tuple[float, ...]
    d2: tuple[float, ...]
    E: tuple[float, ...]
    T: tuple[float, ...]
    earliness_cost: float
    tardiness_cost: float
    window_location_cost: float
    window_size_cost: float

    @property
    def Z(self) -> float:
        return self.earliness_cost + self.tardiness_cost + self.window_location_cost + self.window_size_cost


def windows_from_schedule(inst: Instance, sched: Schedule, k: int, l: int, timeline: Timeline | None = None) -> WindowParams:
    """q1 and q2 at the completion times of positions k and l (0 for index 0)."""
    if timeline is None:
        timeline = build_timeline(inst, sched)
    C = timeline.completion
    q1 = C[k - 1] if k > 0 else 0.0
    q2 = C[l - 1] if l > 0 else 0.0
    return WindowParams(k, l, q1, q2)


def _breakdown(inst: Instance, tl: Timeline, q1: float, q2: float) -> CostBreakdown:
    d1 = tuple(p + q1 for p in tl.p_actual)
    d2 = tuple(p + q2 for p in tl.p_actual)
    E = tuple(max(0.0, d - c) for d, c in zip(d1, tl.completion))
    T = tuple(max(0.0, c - d) for d, c in zip(d2, tl.completion))
    return CostBreakdown(
        d1=d1,
        d2=d2,
        E=E,
        T=T,
        earliness_cost=inst.alpha * math.fsum(E),
        tardiness_cost=inst.beta * math.fsum(T),
        window_location_cost=inst.gamma * math.fsum(d1),
        window_size_cost=inst.n * inst.delta * (q2 - q1),
    )


def cost_direct(inst: Instance, sched: Schedule, windows: WindowParams, timeline: Timeline | None = None) -> CostBreakdown:
    if windows.q1 > windows.q2:
        raise ValueError(f"q1={windows.q1} exceeds q2={windows.q2}")
    if timeline is None:
        timeline = build_timeline(inst, sched)
    return _breakdown(inst, timeline, windows.q1, windows.q2)


def best_windows_exhaustive(inst: Instance, sched: Schedule) -> tuple[float, float, float]:
    """Cheapest (q1, q2) over all pairs drawn from {0} and the completion times.

    Test oracle only: O(n^3) per schedule. Ties keep the first pair in
    ascending candidate order.
    """
    tl = build_timeline(inst, sched)
    cands = (0.0,) + tl.completion
    best = (math.inf, 0.0, 0.0)
    for x, q1 in enumerate(cands):
        for q2 in cands[x:]:
            if q2 < q1:
                continue
            z = _breakdown(inst, tl, q1, q2).Z
            if z < best[0]:
                best = (z, q1, q2)
    return best[1], best[2], best[0]


def tardy_positions(bd: CostBreakdown, completion) -> list[int]:
    """Positions j (1-based) with C_j >= d2_j."""
    return [j for j, (c, d) in enumerate(zip(completion, bd.d2), 1) if c >= d]


def early_positions(bd: CostBreakdown, completion) -> list[int]:
    """Positions j (1-based) with C_j <= d1_j."""
    return [j for j, (c, d) in enumerate(zip(completion, bd.d1), 1) if c <= d]
