"""Compare the solver with brute force on generated instances.

Both the refined solver and the variant that pins the windows to positions
k and l are checked; the second one misses the optimum whenever the
maintenance directly follows position k or l and shifts the best window edge.
"""

import argparse
import math
import time
from collections import Counter
from dataclasses import dataclass

from slkma.generate import GenConfig, generate_instance
from slkma.oracle import brute_force_solve
from slkma.solver import solve
from slkma.weights import compute_kl


@dataclass(frozen=True)
class SweepConfig:
    seeds: int = 300
    n_min: int = 3
    n_max: int = 7
    rtol: float = 1e-9
    gen: GenConfig = GenConfig()


def run(cfg: SweepConfig) -> dict:
    span = cfg.n_max - cfg.n_min + 1
    refined_miss, pinned_miss, where = [], [], Counter()
    t0 = time.perf_counter()
    for seed in range(cfg.seeds):
        inst = generate_instance(cfg.n_min + seed % span, seed, cfg.gen)
        best = brute_force_solve(inst).best
        if not math.isclose(solve(inst).Z, best.Z, rel_tol=cfg.rtol):
            refined_miss.append(seed)
        if not math.isclose(solve(inst, refine=False).Z, best.Z, rel_tol=cfg.rtol):
            pinned_miss.append(seed)
            k, l = compute_kl(inst)
            i = best.schedule.maint_after
            where["i=k" if i == k else "i=l" if i == l else "other"] += 1
    return {
        "instances": cfg.seeds,
        "refined_mismatches": refined_miss,
        "pinned_mismatches": pinned_miss,
        "pinned_mismatch_positions": dict(where),
        "seconds": time.perf_counter() - t0,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=SweepConfig.seeds)
    ap.add_argument("--n-min", type=int, default=SweepConfig.n_min)
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    args = ap.parse_args()
    out = run(SweepConfig(seeds=args.seeds, n_min=args.n_min, n_max=args.n_max))
    print(f"instances                {out['instances']}")
    print(f"refined mismatches       {len(out['refined_mismatches'])} {out['refined_mismatches']}")
    print(f"pinned (k, l) mismatches {len(out['pinned_mismatches'])} {out['pinned_mismatches']}")
    print(f"  oracle optimum at      {out['pinned_mismatch_positions']}")
    print(f"elapsed                  {out['seconds']:.1f}s")


if __name__ == "__main__":
    main()
