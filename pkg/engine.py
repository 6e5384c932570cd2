"""Microgrid Safety Lab: orchestration. Config -> simulation -> trace, report and plots."""
from dataclasses import replace
import logging
from pathlib import Path
import time

import numpy as np

from config.defaults import TRACE_FILE
from config.loader import build_grid, build_scenario, load_config
from controllers.barriers import node_current_bounds
from controllers.types import ControllerMode
from errors import ParameterError
from grid.dynamics import dynamics, forced_equilibrium
from grid.topology import incidence_matrix
from grid.validation import validate_assumptions
from sim.runner import run_scenario
from sim.scenario import default_initial_state
from tools.plotter import emit_plots
from tools.report_writer import node_bounds, write_report
from tools.trace_io import write_trace

logger = logging.getLogger("engine")


class MicrogridEngine:
    """Runs simulations, equilibrium queries and assumption checks for one scenario file."""
    def __init__(self, config_path):
        self.config_path = Path(config_path)
        self.config = load_config(self.config_path)
        self.params, self.topology = build_grid(self.config)
        self._scenario = None

    @property
    def scenario(self):
        if self._scenario is None:
            self._scenario, _, _ = build_scenario(self.config)
        return self._scenario

    def run_simulation(self, dt=None, duration=None, mode=None, seed=None, randomize_load=False):
        """Closed-loop run; the returned dict carries the in-memory trace under "trace"."""
        start = time.time()
        scenario = self.scenario
        changes = {}
        if dt is not None:
            changes["dt"] = dt
        if duration is not None:
            changes["duration"] = duration
            kept = tuple(e for e in scenario.events if e.time <= duration)
            if len(kept) < len(scenario.events):
                logger.info(f"Dropping {len(scenario.events) - len(kept)} events after t={duration}s")
            changes["events"] = kept
        if mode is not None:
            changes["controllers"] = tuple(s.with_mode(ControllerMode(mode)) for s in scenario.controllers)
        if changes:
            scenario = replace(scenario, **changes)

        plant_load = None
        if randomize_load:
            rng = np.random.default_rng(seed)
            plant_load = rng.uniform(self.params.G_l, self.params.G_h)
            logger.info(f"Plant load resampled in [G_l, G_h] with seed={seed}")

        trace, report = run_scenario(scenario, self.params, self.topology, plant_load=plant_load)
        violations = report.post_entry_violations()
        return {
            "scenario": self.config.name, "duration": scenario.duration, "dt": scenario.dt, "steps": scenario.steps,
            "switch_policy": scenario.switch_policy.value, "modes": [s.mode.value for s in scenario.controllers],
            "seed": seed, "plant_load": None if plant_load is None else plant_load.tolist(),
            "final_state": {"I": trace.I[-1].tolist(), "V": trace.V[-1].tolist()},
            "latch": trace.latch_time.tolist(), "bounds": node_bounds(self.params), "safety": report.to_dict(),
            "trace": trace,
            "metrics": {"nodes": self.params.n, "lines": self.params.m, "samples": len(trace),
                        "post_entry_violations": len(violations), "latency_seconds": round(time.time() - start, 2)},
        }

    def save_outputs(self, result, out_dir, plots=True):
        out_dir = Path(out_dir)
        trace_path = write_trace(result["trace"], out_dir / TRACE_FILE)
        paths = {"trace": trace_path, **write_report({k: v for k, v in result.items() if k != "trace"}, out_dir)}
        if plots:
            paths["plots"] = emit_plots(trace_path, out_dir, bounds=result["bounds"])
        return paths

    def run_equilibrium(self, target):
        """Forced equilibrium for a uniform voltage target: u = target / V_s, I = G_p (target 1)."""
        start = time.time()
        if not 0.0 < target < float(self.params.V_s.min()):
            raise ParameterError(f"Target {target} V must lie in (0, {self.params.V_s.min()})")
        u_bar = target / self.params.V_s
        B = incidence_matrix(self.topology)
        eq = forced_equilibrium(u_bar, self.params, B)
        dI, dV = dynamics(eq, u_bar, self.params, B)
        outside = []
        for node in self.params.nodes():
            bounds = node_current_bounds(node)
            I_bar = float(eq.I[node.index - 1])
            if not bounds.I_tilde_l <= I_bar <= bounds.I_tilde_h:
                outside.append(node.index)
                logger.warning(f"Node {node.index}: equilibrium current {I_bar:.4f} A is outside "
                               f"[{bounds.I_tilde_l:.4f}, {bounds.I_tilde_h:.4f}]")
        return {
            "target": target, "u_bar": u_bar.tolist(), "I_bar": eq.I.tolist(), "V_bar": eq.V.tolist(),
            "outside_joint_band": outside,
            "metrics": {"residual": float(max(np.abs(dI).max(), np.abs(dV).max())),
                        "latency_seconds": round(time.time() - start, 2)},
        }

    def run_validation(self):
        start = time.time()
        report = validate_assumptions(self.params)
        if report.passed:
            state = self.scenario.initial_state
            if state is None:
                state = default_initial_state(self.params)
            report = validate_assumptions(self.params, state)
        return {"scenario": self.config.name, **report.to_dict(),
                "metrics": {"checks": len(report.checks), "latency_seconds": round(time.time() - start, 2)}}
