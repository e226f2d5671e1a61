"""Brute-force global optimum for small instances.

Every permutation and every maintenance position is simulated from scratch,
and for each resulting schedule every window pair (q1, q2) drawn from
{0, C_1, ..., C_n} with q1 <= q2 is priced term by term. None of the
structural results the solver relies on (window indices, positional weights,
the matching rule) is used in the search.

The enumeration is batched over permutations with numpy; the winner is then
re-priced with the scalar evaluator.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .evaluator import cost_direct
from .model import Instance, Schedule, Solution, WindowParams
from .timing import build_timeline
from .weights import compute_kl, fixed_cost

DEFAULT_N_CAP = 8
TIE_RTOL = 1e-9
_CHUNK = 5040


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    best: Solution
    enumerated_count: int
    ties: int


def _batch_timeline(inst: Instance, A: np.ndarray, i: int):
    """Actual times and completions for a batch of orders (rows of normal times)."""
    rows, n = A.shape
    p = np.empty_like(A)
    C = np.empty_like(A)
    clock = np.zeros(rows)
    age = np.zeros(rows)
    for r in range(n):
        p[:, r] = A[:, r] + inst.b * age
        clock = clock + p[:, r]
        age = age + p[:, r]
        C[:, r] = clock
        if r + 1 == i and i < n:
            clock = clock + (inst.mu + inst.sigma * clock)
            age = np.zeros(rows)
    return p, C


def _batch_best_windows(inst: Instance, p: np.ndarray, C: np.ndarray):
    """Per row: minimal cost over candidate window pairs and the chosen candidate indices."""
    rows, n = p.shape
    Q = np.concatenate([np.zeros((rows, 1)), C], axis=1)  # candidate index 0 is q = 0
    q1 = Q[:, :, None, None]
    q2 = Q[:, None, :, None]
    pj = p[:, None, None, :]
    Cj = C[:, None, None, :]
    d1 = pj + q1
    d2 = pj + q2
    E = np.maximum(0.0, d1 - Cj)
    T = np.maximum(0.0, Cj - d2)
    Z = (inst.alpha * E + inst.beta * T + inst.gamma * d1).sum(axis=3) + n * inst.delta * (Q[:, None, :] - Q[:, :, None])
    Z = np.where(Q[:, :, None] <= Q[:, None, :], Z, np.inf)
    flat = Z.reshape(rows, -1)
    idx = flat.argmin(axis=1)  # first minimum: smallest q1 index, then q2 index
    return flat[np.arange(rows), idx], idx // (n + 1), idx % (n + 1)


def brute_force_solve(inst: Instance, n_cap: int = DEFAULT_N_CAP) -> OracleResult:
    n = inst.n
    if n > n_cap:
        raise TooLarge(f"n={n} exceeds the brute-force cap of {n_cap}")
    k, l = compute_kl(inst)  # DegenerateCostConfig surfaces here, as for the solver

    a = np.asarray(inst.a, dtype=float)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    best_z = math.inf
    best = None  # (i, perm row, q1 index, q2 index)
    all_z = []
    for i in range(1, n + 1):
        for lo in range(0, len(perms), _CHUNK):
            block = perms[lo:lo + _CHUNK]
            p, C = _batch_timeline(inst, a[block], i)
            z, x, y = _batch_best_windows(inst, p, C)
            all_z.append(z)
            r = int(z.argmin())
            if z[r] < best_z:  # strict: keep the smallest i, then the first permutation
                best_z = float(z[r])
                best = (i, block[r], int(x[r]), int(y[r]))

    i, row, x, y = best
    x, y = min(x, y), max(x, y)  # equal candidate values may appear out of index order
    sched = Schedule(tuple(int(j) + 1 for j in row), i)
    tl = build_timeline(inst, sched)
    q = (0.0,) + tl.completion
    windows = WindowParams(x, y, q[x], q[y])
    bd = cost_direct(inst, sched, windows, tl)
    z_all = np.concatenate(all_z)
    ties = int(np.count_nonzero(z_all <= best_z + TIE_RTOL * abs(best_z)))
    solution = Solution(
        schedule=sched,
        windows=windows,
        timeline=tl,
        earliness=bd.E,
        tardiness=bd.T,
        fixed_cost=fixed_cost(inst, i, k, l),
        total_cost=bd.Z,
        breakdown=bd,
    )
    return OracleResult(solution, enumerated_count=len(perms) * n, ties=ties)
