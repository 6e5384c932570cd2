"""Runtime checks of the zeroing-CBF condition h' + alpha * h >= 0."""
from dataclasses import dataclass

import numpy as np

from config.defaults import MONITOR_TOLERANCE
from controllers.barriers import current_references
from controllers.types import ControllerSpec, NodeObservation
from grid.dynamics import effective_conductance
from grid.parameters import GridParameters, GridState, NodeParameters


@dataclass(frozen=True)
class MonitorResult:
    passed: bool
    margin: float | np.ndarray


def zcbf_monitor(h_value, h_dot, alpha_gain: float, tolerance: float = MONITOR_TOLERANCE,
                 allow_zero_gain: bool = False) -> MonitorResult:
    """Linear class-K check; arrays are checked elementwise and pass only if every entry does.

    The gain must be positive. ``allow_zero_gain`` admits a zero gain for controllers built with
    eta = 0, which ControllerSpec accepts with a warning; the check then reduces to h' >= 0.
    """
    gain = np.asarray(alpha_gain, dtype=float)
    if np.any(gain < 0) or (not allow_zero_gain and np.any(gain == 0)):
        raise ValueError(f"alpha_gain must be positive, got {alpha_gain}")
    margin = np.asarray(h_dot, dtype=float) + alpha_gain * np.asarray(h_value, dtype=float)
    passed = bool(np.all(margin >= -tolerance))
    return MonitorResult(passed, float(margin) if margin.ndim == 0 else margin)


def current_barrier_margins(obs: NodeObservation, a: float, node: NodeParameters,
                            spec: ControllerSpec) -> tuple[MonitorResult, MonitorResult]:
    """Monitors for B_l and B_h at one node with class-K gain eta / L and dI/dt = (V_s a - V) / L."""
    ref_l, ref_h = current_references(node, spec.mode)
    i_dot = (node.V_s * a - obs.V) / node.L
    lower = zcbf_monitor(obs.I - ref_l, i_dot, spec.eta_l / node.L, allow_zero_gain=True)
    upper = zcbf_monitor(ref_h - obs.I, -i_dot, spec.eta_h / node.L, allow_zero_gain=True)
    return lower, upper


def induced_voltage_margins(state: GridState, params: GridParameters, B: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """C V' + G_p (V - v_l) and -C V' + G_p (v_h - V), the voltage-barrier conditions.

    Since C V' = I - G_p V these reduce to I - G_p v_l and G_p v_h - I, which equal
    I - G v_l and G v_h - I whenever the bounds are uniform (G_p 1 = G 1).
    """
    Gp = effective_conductance(params, B)
    c_v_dot = state.I - Gp @ state.V
    lower = c_v_dot + Gp @ (state.V - params.v_l)
    upper = -c_v_dot + Gp @ (params.v_h - state.V)
    return lower, upper
