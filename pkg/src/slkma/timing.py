"""Actual processing times, maintenance duration and the realized timeline.

A job's actual time is ``a + b * age`` where ``age`` is the machine age at
its start: time elapsed since time zero, or since the end of the maintenance
activity if one has already happened. Wall-clock start time is not used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .model import Instance, Schedule


@dataclass(frozen=True)
class Timeline:
    start: tuple[float, ...]
    p_actual: tuple[float, ...]
    completion: tuple[float, ...]
    maint_start: Optional[float] = None
    maint_end: Optional[float] = None

    @property
    def makespan(self) -> float:
        return self.completion[-1]

    @property
    def maint_duration(self) -> Optional[float]:
        if self.maint_start is None:
            return None
        return self.maint_end - self.maint_start


def job_processing_times(inst: Instance, sched: Schedule) -> list[float]:
    """Actual processing time of each position from the closed-form expansion.

    p[j] = a[j] + b * sum_{t=1}^{m-1} (1+b)^(t-1) * a[j-t], where m counts the
    positions since the machine was last pristine (j itself, or j - i after
    maintenance following position i).
    """
    a = [inst.a[job - 1] for job in sched.order]
    b, i = inst.b, sched.maint_after
    p = []
    for j in range(1, sched.n + 1):
        m = j if j <= i else j - i
        fold = 0.0
        power = 1.0
        for t in range(1, m):
            fold += power * a[j - t - 1]
            power *= 1.0 + b
        p.append(a[j - 1] + b * fold)
    return p


def maintenance_duration(inst: Instance, t_start: float) -> float:
    if t_start < 0:
        raise ValueError(f"maintenance start time must be >= 0, got {t_start}")
    return inst.mu + inst.sigma * t_start


def build_timeline(inst: Instance, sched: Schedule) -> Timeline:
    """Simulate the schedule from time zero with no idle time."""
    start, p_actual, completion = [], [], []
    clock = 0.0
    age = 0.0
    maint_start = maint_end = None
    for pos, job in enumerate(sched.order, 1):
        p = inst.a[job - 1] + inst.b * age
        start.append(clock)
        p_actual.append(p)
        clock += p
        age += p
        completion.append(clock)
        if pos == sched.maint_after and sched.has_maintenance:
            maint_start = clock
            clock += maintenance_duration(inst, clock)
            maint_end = clock
            age = 0.0
    return Timeline(tuple(start), tuple(p_actual), tuple(completion), maint_start, maint_end)
