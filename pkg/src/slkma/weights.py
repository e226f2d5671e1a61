"""Window indices, per-position cost coefficients and positional weights.

For a fixed maintenance position i the total cost is linear in the actual
processing times, ``Z = M + sum_j omega_j * p[j]``, and after unfolding the
deterioration it is linear in the normal times, ``Z = M + sum_j W_j * a[j]``.
Which formula applies for omega and M depends on where i falls relative to the
window indices k and l (i < k, k <= i < l, or l <= i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.signal import lfilter

from .model import Instance


class DegenerateCostConfig(ValueError):
    """Cost rates for which the window start index exceeds the window end index."""

    def __init__(self, k_raw: int, l_raw: int, k: int, l: int):
        self.k_raw, self.l_raw = k_raw, l_raw
        super().__init__(
            f"window indices cross: k={k} > l={l} after clamping "
            f"(raw floor values k={k_raw}, l={l_raw})"
        )


@dataclass(frozen=True)
class WeightProfile:
    i: int
    k: int
    l: int
    omega: tuple[float, ...]
    W: tuple[float, ...]
    M: float


def raw_kl(inst: Instance) -> tuple[int, int]:
    n = inst.n
    k = math.floor(n * (inst.delta - inst.gamma) / inst.alpha)
    l = math.floor(n * (inst.beta - inst.delta) / inst.beta)
    return k, l


def compute_kl(inst: Instance) -> tuple[int, int]:
    """Positions whose completion times give the optimal q1 and q2, clamped to [0, n]."""
    k_raw, l_raw = raw_kl(inst)
    k = min(max(k_raw, 0), inst.n)
    l = min(max(l_raw, 0), inst.n)
    if k > l:
        raise DegenerateCostConfig(k_raw, l_raw, k, l)
    return k, l


def regime(i: int, k: int, l: int) -> int:
    """1 if maintenance precedes the window start index, 2 if it sits inside, 3 after."""
    if i < k:
        return 1
    if i < l:
        return 2
    return 3


def omega_rows(inst: Instance, I, X, Y) -> np.ndarray:
    """Cost coefficient of each position's actual processing time, one row per (i, x, y).

    Every regime shares the same base: alpha*j + gamma*(n+1) up to the window
    start index, gamma + n*delta inside the window, beta*(n-j) + gamma after it.
    The maintenance adds a constant to positions 1..i whose size depends on the
    regime, because a longer maintenance delays every later completion.
    """
    n = inst.n
    al, be, ga, de, sg = inst.alpha, inst.beta, inst.gamma, inst.delta, inst.sigma
    I, X, Y = (np.asarray(v, dtype=np.int64)[:, None] for v in (I, X, Y))
    j = np.arange(1, n + 1)
    jf = j.astype(float)
    base = np.where(j <= X, al * jf + ga * (n + 1), np.where(j <= Y, ga + n * de, be * (n - jf) + ga))
    shift = np.where(I < X, al * I * sg + ga * n * sg, np.where(I < Y, n * de * sg, be * (n - I) * sg))
    return base + np.where(j <= I, shift, 0.0)


def omega_array(inst: Instance, i: int, k: int, l: int) -> np.ndarray:
    return omega_rows(inst, [i], [k], [l])[0]


def omega_vector(inst: Instance, i: int, k: int, l: int) -> list[float]:
    """Coefficient of each position's actual processing time in the total cost."""
    return omega_array(inst, i, k, l).tolist()


def weights_rows(b: float, I, omega: np.ndarray) -> np.ndarray:
    """Fold each position's influence on later processing times into its weight.

    W_j = omega_j + b * R_j with R_j = sum_{t=j+1}^{m'} omega_t (1+b)^(t-j-1),
    m' = i for positions up to the maintenance and m' = n after it. Row r of
    ``omega`` belongs to maintenance position I[r].
    """
    W = omega.copy()
    if b == 0:
        return W
    rows, n = omega.shape
    g = 1.0 + b
    I = np.asarray(I, dtype=np.int64)[:, None]
    with np.errstate(over="ignore"):
        powers = np.cumprod(np.concatenate(([1.0], np.full(n - 1, g))))  # running product of (1+b)
        overflow = not np.isfinite(powers[-1] * omega.max())
    if overflow:
        for r in range(rows):
            W[r] = _weights_recurrence(b, int(I[r, 0]), omega[r])
        return W
    # R_j = g^-(j+1) * (suffix sum of omega_t g^t within j's block); positive terms, no cancellation
    before = np.arange(n) < I
    scaled = omega * powers
    S_before = np.cumsum(np.where(before, scaled, 0.0)[:, ::-1], axis=1)[:, ::-1]
    S_after = np.cumsum(np.where(before, 0.0, scaled)[:, ::-1], axis=1)[:, ::-1]
    suffix = np.where(before[:, :-1], S_before[:, 1:], S_after[:, 1:])
    W[:, :-1] += b * (suffix / powers[1:])
    return W


def _weights_recurrence(b: float, i: int, omega: np.ndarray) -> np.ndarray:
    # R_j = omega_{j+1} + g R_{j+1} run backward as a first-order filter; used when powers overflow
    W = omega.copy()
    for lo, hi in ((0, i), (i, len(omega))):
        if hi - lo >= 2:
            W[lo:hi - 1] += b * lfilter([1.0], [1.0, -(1.0 + b)], omega[lo + 1:hi][::-1])[::-1]
    return W


def weights_array(b: float, i: int, omega: np.ndarray) -> np.ndarray:
    return weights_rows(b, [i], np.asarray(omega, dtype=float)[None, :])[0]


def positional_weights(inst: Instance, i: int, omega: Sequence[float]) -> list[float]:
    """Weights W with ``Z = M + sum_j W_j * a[j]`` for maintenance after position i."""
    return weights_array(inst.b, i, omega).tolist()


def fixed_cost_rows(inst: Instance, I, X, Y) -> np.ndarray:
    n, mu = inst.n, inst.mu
    I, X, Y = (np.asarray(v, dtype=np.int64) for v in (I, X, Y))
    return np.where(I < X, n * mu * inst.gamma + inst.alpha * I * mu, np.where(I < Y, n * inst.delta * mu, (n - I) * inst.beta * mu))


def fixed_cost(inst: Instance, i: int, k: int, l: int) -> float:
    n, mu = inst.n, inst.mu
    which = regime(i, k, l)
    if which == 1:
        return n * mu * inst.gamma + inst.alpha * i * mu
    if which == 2:
        return n * inst.delta * mu
    return (n - i) * inst.beta * mu


def weighted_cost(W: Sequence[float], M: float, assignment: Sequence[float]) -> float:
    """``M + sum_j W_j * a[j]`` for normal times listed by position.

    Summed the way the solver sums each candidate row, so a LocalResult's Z
    is reproduced bit for bit.
    """
    if len(W) != len(assignment):
        raise ValueError("weights and assignment differ in length")
    return float(M + np.sum(np.multiply(W, assignment, dtype=float)))


def weight_profile(inst: Instance, i: int, k: int, l: int) -> WeightProfile:
    omega = omega_array(inst, i, k, l)
    W = weights_array(inst.b, i, omega)
    return WeightProfile(i, k, l, tuple(omega.tolist()), tuple(W.tolist()), fixed_cost(inst, i, k, l))
