from controllers.types import (BarrierValues, ControllerMode, ControllerSpec, DutyDecision,
    EffectiveCurrentBounds, NodeObservation)
from controllers.barriers import (barrier_values, constraint_interval, constraint_residuals, current_references,
    effective_current_bounds, node_current_bounds)
from controllers.qp import decide_duty, relaxed_objective, solve_relaxed, solve_strict
from controllers.monitor import MonitorResult, current_barrier_margins, induced_voltage_margins, zcbf_monitor
__all__ = ["BarrierValues","ControllerMode","ControllerSpec","DutyDecision","EffectiveCurrentBounds","NodeObservation",
    "barrier_values","constraint_interval","constraint_residuals","current_references","effective_current_bounds",
    "node_current_bounds","decide_duty","relaxed_objective","solve_relaxed","solve_strict",
    "MonitorResult","current_barrier_margins","induced_voltage_margins","zcbf_monitor"]
