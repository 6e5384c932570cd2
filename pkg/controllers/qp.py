"""Exact solvers for the per-node CBF quadratic programs.

Each QP has a single scalar decision a in [0, 1], so both are solved in closed
form: the strict QP by projecting 0 onto the feasible interval, the
slack-penalized QP by enumerating the candidate minimizers of a convex
piecewise-quadratic function of a.
"""
from controllers.barriers import constraint_interval
from controllers.types import ControllerMode, ControllerSpec, DutyDecision, NodeObservation
from errors import ControllerInfeasible
from grid.parameters import NodeParameters


def solve_strict(interval: tuple[float, float]) -> DutyDecision:
    """argmin a^2 over [max(lb, 0), min(ub, 1)]; raises ControllerInfeasible when that set is empty."""
    lb, ub = interval
    lo, hi = max(lb, 0.0), min(ub, 1.0)
    if lo > hi:
        raise ControllerInfeasible(lb, ub)
    return DutyDecision(a=lo)


def _objective(a: float, lb: float, ub: float, V_s: float, spec: ControllerSpec) -> tuple[float, float, float]:
    # eps = max(0, -g) written through the interval, so eps is exactly 0 at a = lb and a = ub.
    eps_l = V_s * max(0.0, lb - a)
    eps_h = V_s * max(0.0, a - ub)
    return a * a + spec.P_l * eps_l * eps_l + spec.P_h * eps_h * eps_h, eps_l, eps_h


def relaxed_objective(a: float, obs: NodeObservation, node: NodeParameters, spec: ControllerSpec) -> tuple[float, float, float]:
    """(J, eps_l, eps_h) at a with the optimal slacks eps = max(0, -g)."""
    lb, ub = constraint_interval(obs, node, spec, mode=ControllerMode.RELAXED)
    return _objective(a, lb, ub, node.V_s, spec)


def solve_relaxed(obs: NodeObservation, node: NodeParameters, spec: ControllerSpec) -> DutyDecision:
    """Slack-penalized QP on the joint current references; always feasible."""
    lb, ub = constraint_interval(obs, node, spec, mode=ControllerMode.RELAXED)
    # Slack in duty units: eps_l = V_s * max(0, lb - a), so the penalties scale by V_s^2.
    w_l = spec.P_l * node.V_s * node.V_s
    w_h = spec.P_h * node.V_s * node.V_s
    candidates = {0.0, 1.0, lb, ub}
    for on_l in (0.0, 1.0):
        for on_h in (0.0, 1.0):
            candidates.add((on_l * w_l * lb + on_h * w_h * ub) / (1.0 + on_l * w_l + on_h * w_h))
    best_key, best = None, None
    for a in sorted(min(max(c, 0.0), 1.0) for c in candidates):
        J, eps_l, eps_h = _objective(a, lb, ub, node.V_s, spec)
        if best_key is None or J < best_key:
            best_key, best = J, (a, eps_l, eps_h)
    a, eps_l, eps_h = best
    return DutyDecision(a=a, eps_l=eps_l, eps_h=eps_h, feasible=eps_l == 0.0 and eps_h == 0.0)


def decide_duty(obs: NodeObservation, node: NodeParameters, spec: ControllerSpec, strict: bool) -> DutyDecision:
    """Duty decision for one node: strict QP in the node's configured mode, or the relaxed QP."""
    if not strict or spec.mode is ControllerMode.RELAXED:
        return solve_relaxed(obs, node, spec)
    try:
        return solve_strict(constraint_interval(obs, node, spec))
    except ControllerInfeasible as e:
        raise ControllerInfeasible(e.lb, e.ub, node=node.index) from None
