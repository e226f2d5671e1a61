"""Solver wall time against n, with the fitted log-log exponent.

Optionally writes the raw records as CSV.
"""

import argparse
import csv
from dataclasses import asdict, dataclass

from slkma.bench import fitted_exponent, run_bench


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple[int, ...] = (500, 1000, 2000, 4000)
    repeats: int = 5
    seed: int = 0
    csv_path: str | None = None


def main() -> None:
    d = BenchConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=list(d.sizes))
    ap.add_argument("--repeats", type=int, default=d.repeats)
    ap.add_argument("--seed", type=int, default=d.seed)
    ap.add_argument("--csv")
    args = ap.parse_args()
    cfg = BenchConfig(tuple(args.n), args.repeats, args.seed, args.csv)

    records = []
    for rec in run_bench(cfg.sizes, cfg.repeats, cfg.seed):
        records.append(rec)
        print(f"n={rec.n:>6} repeat={rec.repeat} {rec.wall_time:8.3f}s")
    slope = fitted_exponent(records)
    print(f"fitted exponent {slope:.3f}" if slope is not None else "fitted exponent n/a")

    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(asdict(records[0])))
            w.writeheader()
            w.writerows(asdict(r) for r in records)


if __name__ == "__main__":
    main()
