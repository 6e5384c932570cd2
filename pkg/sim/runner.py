"""Fixed-step closed-loop simulation with per-node decentralized control."""
import logging

import numpy as np

from config.defaults import DT_RESOLUTION_FACTOR
from controllers.barriers import current_references, node_current_bounds
from controllers.monitor import zcbf_monitor
from controllers.qp import decide_duty, solve_relaxed
from controllers.types import ControllerMode, NodeObservation
from errors import AssumptionError, ControllerInfeasible, DimensionError
from grid.dynamics import fastest_time_scale
from grid.parameters import GridParameters
from grid.topology import GridTopology, incidence_matrix
from grid.validation import validate_assumptions
from sim.events import apply_event
from sim.integrator import Rk4Stepper
from sim.report import SafetyReport, safety_report
from sim.scenario import Scenario, SwitchPolicy, default_initial_state
from sim.trace import Trace

logger = logging.getLogger("sim")


def _check_dimensions(scenario: Scenario, params: GridParameters, topology: GridTopology):
    if topology.n != params.n or topology.m != params.m:
        raise DimensionError(f"Topology is {topology.n} nodes / {topology.m} lines, "
                             f"parameters are {params.n} nodes / {params.m} lines")
    if len(scenario.controllers) != params.n:
        raise DimensionError(f"{len(scenario.controllers)} controller specs for {params.n} nodes")


def run_scenario(scenario: Scenario, params: GridParameters, topology: GridTopology,
                 plant_load=None) -> tuple[Trace, SafetyReport]:
    """Simulate `scenario` and compile its safety report.

    `params` is what every node controller sees for the whole run. The plant
    starts from the same data, with the true load replaced by `plant_load` when
    given, and is then modified by the scenario's events.
    """
    _check_dimensions(scenario, params, topology)
    state0 = scenario.initial_state if scenario.initial_state is not None else default_initial_state(params)
    if state0.n != params.n:
        raise DimensionError(f"Initial state has {state0.n} nodes, parameters have {params.n}")
    validation = validate_assumptions(params, state0)
    if not validation.passed:
        raise AssumptionError(validation)

    B = incidence_matrix(topology)
    n, dt, steps = params.n, scenario.dt, scenario.steps
    specs = scenario.controllers
    nodes = params.nodes()
    joint = [node_current_bounds(node) for node in nodes]

    eta = np.array([max(s.eta_l, s.eta_h) for s in specs])
    resolution = DT_RESOLUTION_FACTOR * fastest_time_scale(params, B, eta)
    if dt > resolution:
        logger.warning(f"dt={dt:.3g}s exceeds {DT_RESOLUTION_FACTOR} x fastest time scale ({resolution:.3g}s)")

    plant = params if plant_load is None else params.with_load(plant_load)
    stepper = Rk4Stepper(plant, B, dt)
    pending = list(scenario.events)

    K = steps + 1
    t = np.arange(K) * dt
    I_col, V_col = np.empty((K, n)), np.empty((K, n))
    u_col, eps_l_col, eps_h_col = np.empty((K, n)), np.empty((K, n)), np.empty((K, n))
    strict_col = np.zeros((K, n), dtype=bool)

    latching = scenario.switch_policy is SwitchPolicy.RELAXED_UNTIL_FEASIBLE
    latched = [(not latching) and s.mode.strict for s in specs]
    latch_time = np.full(n, np.nan)

    logger.info(f"Running {steps} steps of dt={dt:.3g}s on {n} nodes ({scenario.switch_policy.value})")
    x = state0.stacked()
    for k in range(K):
        tk = float(t[k])
        while pending and pending[0].time <= tk + 1e-6 * dt:
            event = pending.pop(0)
            plant = apply_event(plant, event)
            stepper = Rk4Stepper(plant, B, dt)
            logger.info(f"t={tk:.6g}s: load scaled by {event.factor}")

        I, V = x[:n].tolist(), x[n:].tolist()
        u = [0.0] * n
        for i in range(n):
            obs = NodeObservation(I[i], V[i])
            node, spec = nodes[i], specs[i]
            if latching and not latched[i] and spec.mode.strict:
                bounds = joint[i]
                if bounds.I_tilde_l <= obs.I <= bounds.I_tilde_h and node.v_l <= obs.V <= node.v_h:
                    latched[i] = True
                    latch_time[i] = tk
                    logger.info(f"Node {node.index} entered the joint safe set at t={tk:.6g}s; strict QP from now on")
            if latched[i]:
                try:
                    decision = decide_duty(obs, node, spec, strict=True)
                except ControllerInfeasible as e:
                    logger.error(f"Strict QP infeasible at node {node.index}, t={tk:.6g}s")
                    raise ControllerInfeasible(e.lb, e.ub, node=node.index, t=tk) from None
            else:
                decision = solve_relaxed(obs, node, spec)
            u[i] = decision.a
            eps_l_col[k, i] = decision.eps_l
            eps_h_col[k, i] = decision.eps_h
        I_col[k], V_col[k], u_col[k] = I, V, u
        strict_col[k] = latched
        if k < steps:
            x = stepper.step(x, u_col[k], step=k + 1)

    if latching:
        never = [nodes[i].index for i in range(n) if specs[i].mode.strict and not latched[i]]
        if never:
            logger.warning(f"Nodes {never} never entered the joint safe set and stayed on the relaxed QP")

    trace = _derive_columns(t, I_col, V_col, u_col, eps_l_col, eps_h_col, strict_col, latch_time, params, specs)
    return trace, safety_report(trace, params)


def _derive_columns(t, I, V, u, eps_l, eps_h, strict, latch_time, params: GridParameters, specs) -> Trace:
    """Barrier values and ZCBF margins of each sample's active law, plus objective flags."""
    nodes = params.nodes()
    relaxed_refs = np.array([current_references(node, ControllerMode.JOINT) for node in nodes])
    strict_refs = np.array([current_references(node, spec.mode) for node, spec in zip(nodes, specs)])
    ref_l = np.where(strict, strict_refs[:, 0], relaxed_refs[:, 0])
    ref_h = np.where(strict, strict_refs[:, 1], relaxed_refs[:, 1])
    B_l, B_h = I - ref_l, ref_h - I

    eta_l = np.array([s.eta_l for s in specs])
    eta_h = np.array([s.eta_h for s in specs])
    i_dot = (params.V_s * u - V) / params.L
    margin_l = zcbf_monitor(B_l, i_dot, eta_l / params.L, allow_zero_gain=True).margin
    margin_h = zcbf_monitor(B_h, -i_dot, eta_h / params.L, allow_zero_gain=True).margin

    return Trace(t=t, I=I, V=V, u=u, eps_l=eps_l, eps_h=eps_h, strict=strict,
                 b_l=V - params.v_l, b_h=params.v_h - V, B_l=B_l, B_h=B_h,
                 margin_l=margin_l, margin_h=margin_h,
                 voltage_violation=(V < params.v_l) | (V > params.v_h),
                 current_violation=(I < params.I_l) | (I > params.I_h),
                 latch_time=latch_time)
