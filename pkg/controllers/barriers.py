"""Barrier functions and the per-node duty-ratio constraint interval."""
from controllers.types import (BarrierValues, ControllerMode, ControllerSpec, EffectiveCurrentBounds,
    NodeObservation)
from errors import EmptyJointSafeSet
from grid.parameters import NodeParameters


def effective_current_bounds(v_l: float, v_h: float, G_l_i: float, G_h_i: float, I_l_i: float, I_h_i: float,
                             node: int | None = None) -> EffectiveCurrentBounds:
    """I~_l = max(v_l G_l, I_l), I~_h = min(v_h G_h, I_h)."""
    lower = max(v_l * G_l_i, I_l_i)
    upper = min(v_h * G_h_i, I_h_i)
    if lower > upper:
        raise EmptyJointSafeSet(node, lower, upper)
    return EffectiveCurrentBounds(lower, upper)


def node_current_bounds(node: NodeParameters) -> EffectiveCurrentBounds:
    return effective_current_bounds(node.v_l, node.v_h, node.G_l, node.G_h, node.I_l, node.I_h, node=node.index)


def current_references(node: NodeParameters, mode: ControllerMode) -> tuple[float, float]:
    """Current levels the barriers B_l, B_h are measured against for each mode."""
    if mode is ControllerMode.KNOWN_LOAD:
        return node.G * node.v_l, node.G * node.v_h
    if mode is ControllerMode.LOAD_INTERVAL:
        return node.G_l * node.v_l, node.G_h * node.v_h
    bounds = node_current_bounds(node)
    return bounds.I_tilde_l, bounds.I_tilde_h


def barrier_values(obs: NodeObservation, node: NodeParameters, mode: ControllerMode) -> BarrierValues:
    ref_l, ref_h = current_references(node, mode)
    return BarrierValues(b_l=obs.V - node.v_l, b_h=node.v_h - obs.V, B_l=obs.I - ref_l, B_h=ref_h - obs.I)


def constraint_interval(obs: NodeObservation, node: NodeParameters, spec: ControllerSpec,
                        mode: ControllerMode | None = None) -> tuple[float, float]:
    """Raw (lb, ub) on the duty ratio from the two barrier constraints, before meeting [0, 1].

    a V_s - V + eta_l (I - ref_l) >= 0   gives  a >= lb
    -a V_s + V - eta_h (I - ref_h) >= 0  gives  a <= ub
    """
    ref_l, ref_h = current_references(node, mode or spec.mode)
    lb = (obs.V - spec.eta_l * (obs.I - ref_l)) / node.V_s
    ub = (obs.V - spec.eta_h * (obs.I - ref_h)) / node.V_s
    return lb, ub


def constraint_residuals(a: float, obs: NodeObservation, node: NodeParameters, spec: ControllerSpec,
                         mode: ControllerMode | None = None) -> tuple[float, float]:
    """(g_l, g_h) at duty ratio a; both >= 0 when a satisfies the barrier constraints."""
    ref_l, ref_h = current_references(node, mode or spec.mode)
    g_l = a * node.V_s - obs.V + spec.eta_l * (obs.I - ref_l)
    g_h = -a * node.V_s + obs.V - spec.eta_h * (obs.I - ref_h)
    return g_l, g_h
