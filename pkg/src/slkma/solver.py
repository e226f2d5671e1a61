"""Optimal sequencing, maintenance placement and window assignment.

For every maintenance position i the positional weights are computed and the
jobs are matched to positions oppositely ordered (largest normal time to the
smallest weight). The cheapest of the n local optima is the global optimum.
Total work is O(n^2 log n). Candidates are priced as rows of 2-D arrays, a
block of rows per numpy call, so per-position overhead stays small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .evaluator import cost_direct, windows_from_schedule
from .model import Instance, Schedule, Solution
from .timing import build_timeline
from .weights import WeightProfile, compute_kl, fixed_cost_rows, omega_rows, weights_rows

# relative agreement demanded between the weighted cost and the direct evaluation
CROSS_CHECK_RTOL = 1e-9


class InternalInvariantError(RuntimeError):
    pass


@dataclass(frozen=True)
class LocalResult:
    i: int
    order: tuple[int, ...]
    Z: float
    profile: WeightProfile


class _JobOrder:
    """Jobs sorted by decreasing normal time (ties by id) plus the runs of equal times."""

    def __init__(self, a: Sequence[float]):
        a = np.asarray(a, dtype=float)
        n = len(a)
        self.a = a
        self.jobs = np.lexsort((np.arange(n), -a)) + 1
        ranked = a[self.jobs - 1]
        new_run = np.concatenate(([True], ranked[1:] != ranked[:-1]))
        self.has_ties = not new_run.all()
        # slot r belongs to the run that starts at the first slot with the same normal time
        self.run_key = np.maximum.accumulate(np.where(new_run, np.arange(n), 0)) * n

    def match(self, W: np.ndarray) -> np.ndarray:
        """Job id per position, one row per row of W."""
        positions = np.argsort(W, axis=1, kind="stable")  # equal weights keep position order
        if self.has_ties:
            # a run of equal normal times is interchangeable; hand it ascending positions in id order
            positions = np.sort(positions + self.run_key, axis=1) - self.run_key
        order = np.empty_like(positions)
        np.put_along_axis(order, positions, np.broadcast_to(self.jobs, positions.shape), axis=1)
        return order


def assign_by_rearrangement(a: Sequence[float], W: Sequence[float]) -> tuple[int, ...]:
    """Job order minimizing ``sum_j W_j * a[order[j]]``.

    ``a`` is indexed by job id - 1. Among equal normal times, lower job ids
    take earlier positions.
    """
    if len(a) != len(W):
        raise ValueError("a and W differ in length")
    return tuple(_JobOrder(a).match(np.asarray(W, dtype=float)[None, :])[0].tolist())


def window_index_options(n: int, i: int, k: int, l: int) -> list[tuple[int, int]]:
    """Window index pairs that can be optimal when maintenance follows position i.

    The cost is convex in each of q1, q2 with its unconstrained minimum at the
    start time of position k+1 (resp. l+1). That start is C_k unless the
    maintenance sits right after position k, where it is the maintenance end,
    so the best completion-time window start is then C_k or C_{k+1}. The same
    holds for q2 at i = l.
    """
    xs = [k, k + 1] if i == k and k < n else [k]
    ys = [l, l + 1] if i == l and l < n else [l]
    return [(x, y) for x in xs for y in ys if x <= y]


# cap on rows * n for one block of candidates (about 2 MB per float array)
_CHUNK_ELEMENTS = 1 << 18


@dataclass
class _Batch:
    I: np.ndarray
    X: np.ndarray
    Y: np.ndarray
    omega: np.ndarray
    W: np.ndarray
    M: np.ndarray
    order: np.ndarray
    Z: np.ndarray

    def result(self, r: int) -> LocalResult:
        i = int(self.I[r])
        profile = WeightProfile(i, int(self.X[r]), int(self.Y[r]), tuple(self.omega[r].tolist()),
                                tuple(self.W[r].tolist()), float(self.M[r]))
        return LocalResult(i, tuple(self.order[r].tolist()), float(self.Z[r]), profile)


def _candidates(n: int, positions: Sequence[int], k: int, l: int, refine: bool) -> tuple[np.ndarray, ...]:
    rows = [(i, x, y) for i in positions for x, y in (window_index_options(n, i, k, l) if refine else [(k, l)])]
    return tuple(np.array(col, dtype=np.int64) for col in zip(*rows))


def _batches(inst: Instance, positions: Sequence[int], k: int, l: int, refine: bool) -> Iterator[_Batch]:
    """Price every candidate (i, x, y) in order of i, a chunk of rows at a time."""
    jobs = _JobOrder(inst.a)
    I, X, Y = _candidates(inst.n, positions, k, l, refine)
    step = max(1, _CHUNK_ELEMENTS // inst.n)
    for lo in range(0, len(I), step):
        Ic, Xc, Yc = I[lo:lo + step], X[lo:lo + step], Y[lo:lo + step]
        omega = omega_rows(inst, Ic, Xc, Yc)
        W = weights_rows(inst.b, Ic, omega)
        M = fixed_cost_rows(inst, Ic, Xc, Yc)
        order = jobs.match(W)
        Z = M + np.sum(W * jobs.a[order - 1], axis=1)
        yield _Batch(Ic, Xc, Yc, omega, W, M, order, Z)


def _per_position(inst: Instance, positions: Sequence[int], k: int, l: int, refine: bool) -> list[LocalResult]:
    best: dict[int, LocalResult] = {}
    for batch in _batches(inst, positions, k, l, refine):
        for r in range(len(batch.I)):
            i = int(batch.I[r])
            if i not in best or batch.Z[r] < best[i].Z:  # strict: the (k, l) pair wins ties
                best[i] = batch.result(r)
    return [best[i] for i in positions]


def solve_for_position(inst: Instance, i: int, k: int, l: int, refine: bool = True) -> LocalResult:
    """Best schedule among those with maintenance right after position i.

    With ``refine=False`` the windows are pinned to positions k and l even
    when i equals k or l (see window_index_options).
    """
    if not 1 <= i <= inst.n:
        raise ValueError(f"maintenance position {i} not in 1..{inst.n}")
    return _per_position(inst, [i], k, l, refine)[0]


def solve_all_positions(inst: Instance, refine: bool = True) -> list[LocalResult]:
    """Local optimum for each maintenance position 1..n, in order of i."""
    k, l = compute_kl(inst)
    return _per_position(inst, range(1, inst.n + 1), k, l, refine)


def best_local(results: Sequence[LocalResult]) -> LocalResult:
    best = results[0]
    for r in results[1:]:
        if r.Z < best.Z:  # strict: ties go to the smallest i
            best = r
    return best


def build_solution(inst: Instance, local: LocalResult) -> Solution:
    """Realize a local result: timeline, windows at the profile's indices, direct cost.

    Raises InternalInvariantError if the direct evaluation disagrees with the
    weighted cost.
    """
    sched = Schedule(local.order, local.i)
    tl = build_timeline(inst, sched)
    windows = windows_from_schedule(inst, sched, local.profile.k, local.profile.l, tl)
    bd = cost_direct(inst, sched, windows, tl)
    if not math.isclose(bd.Z, local.Z, rel_tol=CROSS_CHECK_RTOL, abs_tol=1e-9):
        raise InternalInvariantError(
            f"weighted cost {local.Z!r} disagrees with direct cost {bd.Z!r} at i={local.i}"
        )
    return Solution(
        schedule=sched,
        windows=windows,
        timeline=tl,
        earliness=bd.E,
        tardiness=bd.T,
        fixed_cost=local.profile.M,
        total_cost=local.Z,
        breakdown=bd,
    )


def solve(inst: Instance, refine: bool = True) -> Solution:
    """Globally optimal schedule, maintenance position and windows.

    Raises DegenerateCostConfig when the window indices cross.
    """
    k, l = compute_kl(inst)
    best = None
    # rows arrive in order of i, so a strict comparison keeps the smallest i among ties
    for batch in _batches(inst, range(1, inst.n + 1), k, l, refine):
        r = int(np.argmin(batch.Z))
        if best is None or batch.Z[r] < best.Z:
            best = batch.result(r)
    return build_solution(inst, best)
