"""Single-machine slack due-window scheduling with linearly deteriorating jobs
and one optional deteriorating maintenance activity."""

from .evaluator import CostBreakdown, best_windows_exhaustive, cost_direct, windows_from_schedule
from .model import (
    EXAMPLE_1,
    Instance,
    InstanceSyntaxError,
    Schedule,
    ScheduleError,
    Solution,
    ValidationError,
    WindowParams,
    load_instance,
    parse_instance,
    serialize_instance,
    validate_instance,
)
from .oracle import OracleResult, TooLarge, brute_force_solve
from .solver import LocalResult, assign_by_rearrangement, solve, solve_all_positions, solve_for_position
from .timing import Timeline, build_timeline, job_processing_times, maintenance_duration
from .weights import (
    DegenerateCostConfig,
    WeightProfile,
    compute_kl,
    fixed_cost,
    omega_vector,
    positional_weights,
    weighted_cost,
)

__version__ = "0.1.0"
