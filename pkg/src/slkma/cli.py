"""Command-line front end: solve, evaluate, oracle, gen, bench.

Exit codes: 0 success, 1 parse/validation/argument error, 2 degenerate cost
configuration, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict
from typing import Optional, Sequence

from . import report
from .bench import fitted_exponent, run_bench
from .evaluator import cost_direct, windows_from_schedule
from .generate import GenConfig, generate_instance
from .model import InstanceSyntaxError, Schedule, ScheduleError, ValidationError, WindowParams, load_instance, serialize_instance
from .oracle import DEFAULT_N_CAP, TooLarge, brute_force_solve
from .solver import InternalInvariantError, best_local, build_solution, solve_all_positions
from .timing import build_timeline
from .weights import DegenerateCostConfig, compute_kl

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse defaults to exit status 2, which is reserved for degenerate cost rates
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace("(", "").replace(")", "").split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    trace = solve_all_positions(inst, refine=not args.no_refine)
    sol = build_solution(inst, best_local(trace))
    shown = trace if args.trace else None
    if args.format == "json":
        sys.stdout.write(report.dumps(report.solution_to_dict(inst, sol, shown)))
    else:
        sys.stdout.write(report.render_solution(inst, sol, shown))
    return EXIT_OK


def cmd_evaluate(args) -> int:
    inst = load_instance(args.instance)
    if len(args.order) != inst.n:
        raise ScheduleError("InvalidPermutation", f"order has {len(args.order)} entries, instance has {inst.n} jobs")
    sched = Schedule(tuple(args.order), args.maint_after)
    tl = build_timeline(inst, sched)
    if (args.q1 is None) != (args.q2 is None):
        raise UsageError("give both --q1 and --q2, or neither")
    if args.q1 is None:
        k, l = compute_kl(inst)
        windows = windows_from_schedule(inst, sched, k, l, tl)
    else:
        if args.q1 > args.q2:
            raise ScheduleError("WindowOrder", f"q1={args.q1} exceeds q2={args.q2}")
        # user windows: report as index the number of completions at or before each q
        k = sum(c <= args.q1 for c in tl.completion)
        l = sum(c <= args.q2 for c in tl.completion)
        windows = WindowParams(k, l, args.q1, args.q2)
    bd = cost_direct(inst, sched, windows, tl)
    if args.format == "json":
        sys.stdout.write(report.dumps({
            "schedule": {"order": list(sched.order), "maint_after": sched.maint_after},
            "windows": report.windows_to_dict(windows),
            "timeline": report.timeline_to_dict(tl),
            "breakdown": report.breakdown_to_dict(bd),
            "total_cost": bd.Z,
        }))
    else:
        sys.stdout.write(report.render_breakdown(inst, sched, windows, tl, bd))
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = load_instance(args.instance)
    res = brute_force_solve(inst, n_cap=args.n_cap)
    if args.format == "json":
        d = report.solution_to_dict(inst, res.best)
        d["enumerated_count"] = res.enumerated_count
        d["ties"] = res.ties
        sys.stdout.write(report.dumps(d))
    else:
        sys.stdout.write(report.render_solution(inst, res.best))
        sys.stdout.write(f"enumerated       {res.enumerated_count}\nties             {res.ties}\n")
    return EXIT_OK


def _gen_config(args) -> GenConfig:
    return GenConfig(
        a_min=args.a_min,
        a_max=args.a_max,
        b_min=args.b_min,
        b_max=args.b_max,
        cost_min=args.cost_min,
        cost_max=args.cost_max,
        mu_min=args.mu_min,
        mu_max=args.mu_max,
        sigma_min=args.sigma_min,
        sigma_max=args.sigma_max,
        unconstrained=args.unconstrained,
        decimals=args.decimals,
    )


def cmd_gen(args) -> int:
    if args.n < 1:
        raise UsageError(f"n must be >= 1, got {args.n}")
    sys.stdout.write(serialize_instance(generate_instance(args.n, args.seed, _gen_config(args))))
    return EXIT_OK


def cmd_bench(args) -> int:
    records = []
    if args.format == "text":
        print(f"{'n':>7} {'repeat':>6} {'wall_time_s':>12} {'Z':>22} {'seed':>6}")
    for rec in run_bench(args.n, args.repeats, args.seed):
        records.append(rec)
        if args.format == "text":
            print(f"{rec.n:>7} {rec.repeat:>6} {rec.wall_time:>12.4f} {rec.Z:>22.2f} {rec.seed:>6}", flush=True)
    slope = fitted_exponent(records)
    if args.format == "json":
        sys.stdout.write(report.dumps({
            "records": [asdict(r) for r in records],
            "fitted_exponent": slope,
        }))
    else:
        print("fitted exponent  " + ("n/a (need two sizes)" if slope is None else f"{slope:.3f}"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="slkma",
        description="Slack due-window scheduling with deteriorating jobs and one maintenance activity.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("solve", help="optimal schedule, maintenance position and windows")
    p.add_argument("instance")
    p.add_argument("--trace", action="store_true", help="also list the local optimum for every maintenance position")
    p.add_argument("--no-refine", action="store_true",
                   help="always place the windows at positions k and l, even when maintenance follows k or l")
    fmt(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("evaluate", help="cost of a given schedule")
    p.add_argument("instance")
    p.add_argument("--order", type=_int_list, required=True, help="job ids by position, e.g. 7,8,6,3,5,1,2,4,9")
    p.add_argument("--maint-after", type=int, required=True, help="position followed by maintenance (n = none)")
    p.add_argument("--q1", type=float)
    p.add_argument("--q2", type=float)
    fmt(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("oracle", help="brute-force optimum (small n only)")
    p.add_argument("instance")
    p.add_argument("--n-cap", type=int, default=DEFAULT_N_CAP)
    fmt(p)
    p.set_defaults(func=cmd_oracle)

    d = GenConfig()
    p = sub.add_parser("gen", help="random instance on standard output")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a-min", type=int, default=d.a_min)
    p.add_argument("--a-max", type=int, default=d.a_max)
    p.add_argument("--b-min", type=float, default=d.b_min)
    p.add_argument("--b-max", type=float, default=d.b_max)
    p.add_argument("--cost-min", type=float, default=d.cost_min)
    p.add_argument("--cost-max", type=float, default=d.cost_max)
    p.add_argument("--mu-min", type=float, default=d.mu_min)
    p.add_argument("--mu-max", type=float, default=d.mu_max)
    p.add_argument("--sigma-min", type=float, default=d.sigma_min)
    p.add_argument("--sigma-max", type=float, default=d.sigma_max)
    p.add_argument("--decimals", type=int, default=d.decimals, help="rounding of real-valued draws")
    p.add_argument("--unconstrained", action="store_true",
                   help="draw all four cost rates independently; the result may have crossing window indices")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="solver wall time against n")
    p.add_argument("--n", type=int, nargs="+", default=[500, 1000, 2000, 4000])
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    fmt(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateCostConfig as exc:
        print(f"error: degenerate cost configuration: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except InternalInvariantError as exc:
        print(f"error: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValidationError, InstanceSyntaxError, ScheduleError, TooLarge, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
