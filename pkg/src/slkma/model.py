"""Domain types and instance I/O.

An instance is a set of jobs with normal processing times ``a``, a common
deterioration rate ``b``, the four cost rates (earliness, tardiness, window
start, window size) and the maintenance parameters ``mu`` (basic duration)
and ``sigma`` (duration growth per unit of start time).

All position and job indices are 1-based.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Mapping, Optional, Sequence

if TYPE_CHECKING:
    from .evaluator import CostBreakdown
    from .timing import Timeline

INSTANCE_FIELDS = ("a", "b", "alpha", "beta", "gamma", "delta", "mu", "sigma")
COST_FIELDS = ("alpha", "beta", "gamma", "delta")


class ValidationError(ValueError):
    """Raised when an instance violates one or more model constraints.

    ``issues`` holds every violation found as ``(code, message)`` pairs, where
    code is one of ``NonPositiveCost``, ``NegativeTime``, ``EmptyJobSet`` or
    ``LengthMismatch``.
    """

    def __init__(self, issues: Sequence[tuple[str, str]]):
        self.issues = list(issues)
        super().__init__("; ".join(f"{code}: {msg}" for code, msg in self.issues))

    @property
    def codes(self) -> set[str]:
        return {code for code, _ in self.issues}


class InstanceSyntaxError(ValueError):
    """Malformed instance text. ``line`` and ``field`` locate the problem when known."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.detail = message
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class ScheduleError(ValueError):
    """Invalid schedule or window arguments (bad permutation, position out of range, q1 > q2)."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"{code}: {message}")


@dataclass(frozen=True)
class Instance:
    a: tuple[float, ...]
    b: float
    alpha: float
    beta: float
    gamma: float
    delta: float
    mu: float
    sigma: float

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(x) for x in self.a))
        for name in INSTANCE_FIELDS[1:]:
            object.__setattr__(self, name, float(getattr(self, name)))
        issues = _check_fields(self.as_dict(), n=None)
        if issues:
            raise ValidationError(issues)

    @property
    def n(self) -> int:
        return len(self.a)

    def as_dict(self) -> dict[str, Any]:
        return {name: (list(self.a) if name == "a" else getattr(self, name)) for name in INSTANCE_FIELDS}


@dataclass(frozen=True)
class Schedule:
    """``order[r-1]`` is the job in position r; maintenance follows position ``maint_after``.

    ``maint_after == n`` means no maintenance is performed.
    """

    order: tuple[int, ...]
    maint_after: int

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(j) for j in self.order))
        n = len(self.order)
        if sorted(self.order) != list(range(1, n + 1)):
            raise ScheduleError("InvalidPermutation", f"{list(self.order)} is not a permutation of 1..{n}")
        if not 1 <= self.maint_after <= n:
            raise ScheduleError("MaintenanceOutOfRange", f"maint_after={self.maint_after} not in 1..{n}")

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def has_maintenance(self) -> bool:
        return self.maint_after < self.n


@dataclass(frozen=True)
class WindowParams:
    k: int
    l: int
    q1: float
    q2: float

    def __post_init__(self):
        if not 0 <= self.k <= self.l:
            raise ScheduleError("InvalidWindowIndex", f"need 0 <= k <= l, got k={self.k}, l={self.l}")
        if self.q1 > self.q2:
            raise ScheduleError("WindowOrder", f"q1={self.q1} exceeds q2={self.q2}")
        if self.q1 < 0:
            raise ScheduleError("WindowOrder", f"q1={self.q1} is negative")

    @property
    def D(self) -> float:
        return self.q2 - self.q1


@dataclass(frozen=True)
class Solution:
    schedule: Schedule
    windows: WindowParams
    timeline: "Timeline"
    earliness: tuple[float, ...]
    tardiness: tuple[float, ...]
    fixed_cost: float
    total_cost: float
    breakdown: Optional["CostBreakdown"] = field(default=None, compare=False)

    @property
    def Z(self) -> float:
        return self.total_cost

    @property
    def M(self) -> float:
        return self.fixed_cost


def _is_number(x: Any) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def _check_fields(raw: Mapping[str, Any], n: Optional[int]) -> list[tuple[str, str]]:
    issues: list[tuple[str, str]] = []
    a = list(raw["a"])
    if n is None:
        n = len(a)
    if n == 0 or len(a) == 0:
        issues.append(("EmptyJobSet", "at least one job is required"))
    if len(a) != n:
        issues.append(("LengthMismatch", f"n={n} but {len(a)} processing times given"))
    neg = [j for j, x in enumerate(a, 1) if x < 0]
    if neg:
        issues.append(("NegativeTime", f"negative normal processing time for job(s) {neg}"))
    bad_costs = [c for c in COST_FIELDS if not raw[c] > 0]
    if bad_costs:
        issues.append(("NonPositiveCost", f"cost rate(s) must be > 0: {', '.join(bad_costs)}"))
    if raw["b"] < 0:
        issues.append(("NegativeTime", f"deterioration factor b={raw['b']} is negative"))
    if raw["sigma"] < 0:
        issues.append(("NegativeTime", f"maintenance factor sigma={raw['sigma']} is negative"))
    if not raw["mu"] > 0:
        issues.append(("NegativeTime", f"basic maintenance time mu={raw['mu']} must be > 0"))
    return issues


def validate_instance(raw: Mapping[str, Any]) -> Instance:
    """Build an Instance from a plain record, or raise ValidationError listing every violation.

    ``raw`` carries the instance fields; an explicit ``n`` is optional and is
    checked against the length of ``a``. Missing or non-numeric fields are
    reported as InstanceSyntaxError since they are not model violations.
    """
    allowed = set(INSTANCE_FIELDS) | {"n"}
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise InstanceSyntaxError(f"unknown field(s) {unknown}", field=unknown[0])
    for name in INSTANCE_FIELDS:
        if name not in raw:
            raise InstanceSyntaxError("missing required field", field=name)
    a = raw["a"]
    if not isinstance(a, (list, tuple)) or not all(_is_number(x) for x in a):
        raise InstanceSyntaxError("expected an array of finite numbers", field="a")
    for name in INSTANCE_FIELDS[1:]:
        if not _is_number(raw[name]):
            raise InstanceSyntaxError(f"expected a finite number, got {raw[name]!r}", field=name)
    n = raw.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool)):
        raise InstanceSyntaxError(f"expected an integer, got {n!r}", field="n")

    issues = _check_fields(raw, n)
    if issues:
        raise ValidationError(issues)
    return Instance(**{name: raw[name] for name in INSTANCE_FIELDS})


def _field_line(text: str, name: str) -> Optional[int]:
    key = f'"{name}"'
    for lineno, line in enumerate(text.splitlines(), 1):
        if key in line:
            return lineno
    return None


def parse_instance(text: str) -> Instance:
    """Parse the JSON instance format (see README) and validate it."""
    if not text.strip():
        raise InstanceSyntaxError("empty instance", line=1)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceSyntaxError(exc.msg, line=exc.lineno) from None
    if not isinstance(raw, dict):
        raise InstanceSyntaxError("top level must be an object", line=1)
    if "n" in raw:
        raise InstanceSyntaxError("n is implied by the length of a", line=_field_line(text, "n"), field="n")
    try:
        return validate_instance(raw)
    except InstanceSyntaxError as exc:
        if exc.field is not None and exc.line is None:
            raise InstanceSyntaxError(exc.detail, _field_line(text, exc.field), exc.field) from None
        raise


def load_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _plain(x: float) -> float | int:
    # integral values print without a trailing ".0"; parse maps them back to the same float
    if float(x).is_integer() and abs(x) < 2**53:
        return int(x)
    return x


def instance_to_dict(inst: Instance) -> dict[str, Any]:
    d = inst.as_dict()
    d["a"] = [_plain(x) for x in d["a"]]
    for name in INSTANCE_FIELDS[1:]:
        d[name] = _plain(d[name])
    return d


def serialize_instance(inst: Instance) -> str:
    """Render an instance in the file format. Byte-stable for equal instances."""
    d = instance_to_dict(inst)
    lines = ["{", '  "a": ' + json.dumps(d["a"]) + ","]
    rest = [f'  "{name}": {json.dumps(d[name])}' for name in INSTANCE_FIELDS[1:]]
    lines.append(",\n".join(rest))
    lines.append("}")
    return "\n".join(lines) + "\n"


EXAMPLE_1 = Instance(
    a=(62, 81, 25, 82, 26, 19, 55, 9, 91),
    b=0.05,
    alpha=4,
    beta=15,
    gamma=5,
    delta=6,
    mu=10,
    sigma=0.1,
)
