"""Reproducible random instances.

Numbers come from SplitMix64 so that a (n, seed, config) triple yields the
same instance bytes on any platform or language:

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

A uniform draw is ``(output >> 11) * 2**-53``. Integers in [lo, hi] are
``lo + floor(u * (hi - lo + 1))``; reals in [lo, hi] are
``floor((lo + u * (hi - lo)) * 10**d + 0.5) / 10**d`` with d = 2 by default
(delta and beta are rounded the same way after adding their gap).

Draw order: a_1..a_n, b, then the cost block (alpha, gamma, delta - gamma,
beta - delta), then mu, sigma. In the default mode the cost block is redrawn
until the window indices do not cross.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .model import Instance
from .weights import DegenerateCostConfig, compute_kl

_MASK = (1 << 64) - 1
MAX_COST_DRAWS = 10_000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def integer(self, lo: int, hi: int) -> int:
        return lo + math.floor(self.uniform() * (hi - lo + 1))

    def real(self, lo: float, hi: float, decimals: int = 2) -> float:
        return _round(lo + self.uniform() * (hi - lo), decimals)


def _round(x: float, decimals: int) -> float:
    scale = 10**decimals
    return math.floor(x * scale + 0.5) / scale


@dataclass(frozen=True)
class GenConfig:
    a_min: int = 1
    a_max: int = 100
    b_min: float = 0.0
    b_max: float = 0.1
    cost_min: float = 1.0  # alpha and gamma
    cost_max: float = 10.0
    delta_gap: tuple[float, float] = (0.5, 5.0)  # delta - gamma
    beta_gap: tuple[float, float] = (0.5, 10.0)  # beta - delta
    mu_min: float = 1.0
    mu_max: float = 20.0
    sigma_min: float = 0.0
    sigma_max: float = 0.2
    unconstrained: bool = False  # draw all four cost rates from [cost_min, cost_max], no index check
    decimals: int = 2  # rounding of every real-valued draw

    def check(self) -> None:
        pairs = {
            "a": (self.a_min, self.a_max),
            "b": (self.b_min, self.b_max),
            "cost": (self.cost_min, self.cost_max),
            "delta_gap": self.delta_gap,
            "beta_gap": self.beta_gap,
            "mu": (self.mu_min, self.mu_max),
            "sigma": (self.sigma_min, self.sigma_max),
        }
        for name, (lo, hi) in pairs.items():
            if lo > hi:
                raise ValueError(f"invalid range for {name}: min {lo} > max {hi}")
        if self.a_min < 0 or self.b_min < 0 or self.sigma_min < 0:
            raise ValueError("a, b and sigma ranges must be non-negative")
        if not 0 <= self.decimals <= 12:
            raise ValueError(f"decimals must be in 0..12, got {self.decimals}")
        step = 10.0**-self.decimals
        if self.cost_min < step or self.mu_min < step:
            raise ValueError(f"cost and mu ranges must be at least {step:g} so rounded draws stay positive")
        if not self.unconstrained and (self.delta_gap[0] < step or self.beta_gap[0] < step):
            raise ValueError(f"gaps must be at least {step:g} to keep gamma < delta < beta")


def _cost_block(rng: SplitMix64, cfg: GenConfig) -> dict[str, float]:
    if cfg.unconstrained:
        draw = [rng.real(cfg.cost_min, cfg.cost_max, cfg.decimals) for _ in range(4)]
        return dict(zip(("alpha", "gamma", "delta", "beta"), draw))
    d = cfg.decimals
    alpha = rng.real(cfg.cost_min, cfg.cost_max, d)
    gamma = rng.real(cfg.cost_min, cfg.cost_max, d)
    delta = _round(gamma + rng.real(*cfg.delta_gap, d), d)
    beta = _round(delta + rng.real(*cfg.beta_gap, d), d)
    return {"alpha": alpha, "gamma": gamma, "delta": delta, "beta": beta}


def generate_instance(n: int, seed: int, cfg: GenConfig = GenConfig()) -> Instance:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    cfg.check()
    rng = SplitMix64(seed)
    a = [rng.integer(cfg.a_min, cfg.a_max) for _ in range(n)]
    b = rng.real(cfg.b_min, cfg.b_max, cfg.decimals)
    for _ in range(MAX_COST_DRAWS):
        costs = _cost_block(rng, cfg)
        if cfg.unconstrained:
            break
        probe = Instance(a, b, mu=1.0, sigma=0.0, **costs)
        try:
            compute_kl(probe)
            break
        except DegenerateCostConfig:
            continue
    else:
        raise ValueError("could not draw cost rates with non-crossing window indices; widen the ranges")
    mu = rng.real(cfg.mu_min, cfg.mu_max, cfg.decimals)
    sigma = rng.real(cfg.sigma_min, cfg.sigma_max, cfg.decimals)
    return Instance(a, b, mu=mu, sigma=sigma, **costs)


def bench_config(n: int, base: GenConfig = GenConfig()) -> GenConfig:
    """Default ranges with b capped at 1/n so deterioration stays finite for large n.

    Draws keep six decimals; at two, b would round to zero once n exceeds 200.
    """
    return replace(base, b_min=0.0, b_max=min(base.b_max, 1.0 / n), decimals=max(base.decimals, 6))
