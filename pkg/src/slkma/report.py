"""Machine (JSON) and text renderings of solutions, evaluations and traces."""

from __future__ import annotations

import json
from dataclasses import asdict
from typing import Any, Optional, Sequence

from .evaluator import CostBreakdown
from .model import Instance, Schedule, Solution, WindowParams, instance_to_dict, validate_instance
from .solver import LocalResult
from .timing import Timeline

SOLUTION_FORMAT = "slkma-solution/1"


def timeline_to_dict(tl: Timeline) -> dict[str, Any]:
    return {
        "start": list(tl.start),
        "p_actual": list(tl.p_actual),
        "completion": list(tl.completion),
        "maint_start": tl.maint_start,
        "maint_end": tl.maint_end,
        "makespan": tl.makespan,
    }


def breakdown_to_dict(bd: CostBreakdown) -> dict[str, Any]:
    d = {name: list(v) if isinstance(v, tuple) else v for name, v in asdict(bd).items()}
    d["Z"] = bd.Z
    return d


def windows_to_dict(w: WindowParams) -> dict[str, Any]:
    return {"k": w.k, "l": w.l, "q1": w.q1, "q2": w.q2, "D": w.D}


def local_to_dict(r: LocalResult) -> dict[str, Any]:
    return {"i": r.i, "order": list(r.order), "Z": r.Z, "k": r.profile.k, "l": r.profile.l}


def solution_to_dict(inst: Instance, sol: Solution, trace: Optional[Sequence[LocalResult]] = None) -> dict[str, Any]:
    d: dict[str, Any] = {
        "format": SOLUTION_FORMAT,
        "instance": instance_to_dict(inst),
        "schedule": {"order": list(sol.schedule.order), "maint_after": sol.schedule.maint_after},
        "windows": windows_to_dict(sol.windows),
        "timeline": timeline_to_dict(sol.timeline),
        "earliness": list(sol.earliness),
        "tardiness": list(sol.tardiness),
        "fixed_cost": sol.fixed_cost,
        "total_cost": sol.total_cost,
    }
    if sol.breakdown is not None:
        d["breakdown"] = breakdown_to_dict(sol.breakdown)
    if trace is not None:
        d["trace"] = [local_to_dict(r) for r in trace]
    return d


def solution_from_dict(d: dict[str, Any]) -> tuple[Instance, Solution]:
    """Inverse of solution_to_dict (the trace, if any, is not restored)."""
    if d.get("format") != SOLUTION_FORMAT:
        raise ValueError(f"not a {SOLUTION_FORMAT} document")
    inst = validate_instance(d["instance"])
    t = d["timeline"]
    tl = Timeline(tuple(t["start"]), tuple(t["p_actual"]), tuple(t["completion"]), t["maint_start"], t["maint_end"])
    w = d["windows"]
    bd = None
    if "breakdown" in d:
        b = d["breakdown"]
        bd = CostBreakdown(
            tuple(b["d1"]), tuple(b["d2"]), tuple(b["E"]), tuple(b["T"]),
            b["earliness_cost"], b["tardiness_cost"], b["window_location_cost"], b["window_size_cost"],
        )
    sol = Solution(
        schedule=Schedule(tuple(d["schedule"]["order"]), d["schedule"]["maint_after"]),
        windows=WindowParams(w["k"], w["l"], w["q1"], w["q2"]),
        timeline=tl,
        earliness=tuple(d["earliness"]),
        tardiness=tuple(d["tardiness"]),
        fixed_cost=d["fixed_cost"],
        total_cost=d["total_cost"],
        breakdown=bd,
    )
    return inst, sol


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _seq(xs: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _f(x: Optional[float]) -> str:
    return "-" if x is None else f"{x:.2f}"


def render_breakdown(inst: Instance, sched: Schedule, windows: WindowParams, tl: Timeline, bd: CostBreakdown) -> str:
    lines = [
        f"order            {_seq(sched.order)}",
        f"maint_after      {sched.maint_after}" + ("" if sched.has_maintenance else "  (no maintenance)"),
    ]
    if tl.maint_start is not None:
        lines.append(f"maintenance      [{_f(tl.maint_start)}, {_f(tl.maint_end)}]")
    lines += [
        f"q1, q2           {_f(windows.q1)}, {_f(windows.q2)}   (k={windows.k}, l={windows.l}, D={_f(windows.D)})",
        "",
        f"{'pos':>4} {'job':>4} {'start':>12} {'p':>12} {'C':>12} {'d1':>12} {'d2':>12} {'E':>10} {'T':>10}",
    ]
    for r, job in enumerate(sched.order):
        lines.append(
            f"{r + 1:>4} {job:>4} {tl.start[r]:>12.2f} {tl.p_actual[r]:>12.2f} {tl.completion[r]:>12.2f} "
            f"{bd.d1[r]:>12.2f} {bd.d2[r]:>12.2f} {bd.E[r]:>10.2f} {bd.T[r]:>10.2f}"
        )
    lines += [
        "",
        f"earliness cost   {bd.earliness_cost:.2f}",
        f"tardiness cost   {bd.tardiness_cost:.2f}",
        f"window location  {bd.window_location_cost:.2f}",
        f"window size      {bd.window_size_cost:.2f}",
        f"Z                {bd.Z:.2f}",
    ]
    return "\n".join(lines) + "\n"


def render_trace(trace: Sequence[LocalResult], best_i: int) -> str:
    width = max(len(_seq(r.order)) for r in trace)
    lines = [f"{'i':>4}  {'job sequence':<{width}}  {'Z':>14}  k,l"]
    for r in trace:
        flag = "  *" if r.i == best_i else ""
        lines.append(f"{r.i:>4}  {_seq(r.order):<{width}}  {r.Z:>14.2f}  {r.profile.k},{r.profile.l}{flag}")
    return "\n".join(lines) + "\n"


def render_solution(inst: Instance, sol: Solution, trace: Optional[Sequence[LocalResult]] = None) -> str:
    out = render_breakdown(inst, sol.schedule, sol.windows, sol.timeline, sol.breakdown)
    out += f"fixed cost M     {sol.fixed_cost:.2f}\n"
    if trace is not None:
        out += "\n" + render_trace(trace, sol.schedule.maint_after)
    return out
