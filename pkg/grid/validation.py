"""Assumption checks on a parameter set. Failures are report entries, never exceptions."""
from dataclasses import dataclass, field
import logging

import numpy as np

from grid.parameters import GridParameters, GridState

logger = logging.getLogger("grid")


@dataclass(frozen=True)
class AssumptionCheck:
    name: str
    passed: bool
    nodes: tuple[int, ...] = ()
    detail: str = ""
    blocking: bool = True


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AssumptionCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.blocking)

    @property
    def failures(self) -> list[AssumptionCheck]:
        return [c for c in self.checks if c.blocking and not c.passed]

    def check(self, name: str) -> AssumptionCheck:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {"passed": self.passed,
                "checks": [{"name": c.name, "passed": c.passed, "nodes": list(c.nodes), "detail": c.detail, "blocking": c.blocking} for c in self.checks]}


def _offenders(mask: np.ndarray) -> tuple[int, ...]:
    return tuple(int(i) + 1 for i in np.flatnonzero(mask))


def _make(name: str, mask: np.ndarray, detail: str) -> AssumptionCheck:
    nodes = _offenders(mask)
    return AssumptionCheck(name, not nodes, nodes, detail if nodes else "")


def validate_assumptions(params: GridParameters, state: GridState | None = None) -> ValidationReport:
    """Positivity, load interval, voltage ordering, current ordering, joint-set and (optionally) initial-state checks."""
    positive = np.zeros(params.n, dtype=bool)
    for name in ("L", "C", "G", "G_l", "G_h"):
        positive |= getattr(params, name) <= 0
    checks = [_make("positive_parameters", positive, "L, C, G, G_l, G_h must be strictly positive")]
    bad_lines = tuple(int(k) + 1 for k in np.flatnonzero(params.R <= 0))
    checks.append(AssumptionCheck("positive_line_resistance", not bad_lines, bad_lines,
                                  "line resistances must be strictly positive (indices are lines)" if bad_lines else ""))
    checks.append(_make("load_interval", (params.G_l > params.G) | (params.G > params.G_h),
                        "G_l <= G <= G_h violated"))
    checks.append(_make("voltage_ordering", (params.v_l > params.v_h) | (params.v_h >= params.V_s),
                        "v_l <= v_h < V_s violated"))
    checks.append(_make("current_ordering", params.I_l > params.I_h, "I_l <= I_h violated"))
    tilde_l = np.maximum(params.v_l * params.G_l, params.I_l)
    tilde_h = np.minimum(params.v_h * params.G_h, params.I_h)
    checks.append(_make("joint_safe_set", tilde_l > tilde_h, "I~_l > I~_h: no state meets both objectives"))
    if state is not None:
        outside = ((state.V < params.v_l) | (state.V > params.v_h)
                   | (state.I < params.I_l) | (state.I > params.I_h))
        check = _make("initial_state_in_safe_set", outside, "initial state outside the voltage/current bounds")
        # Relaxed start-up begins outside the safe set on purpose.
        checks.append(AssumptionCheck(check.name, check.passed, check.nodes, check.detail, blocking=False))
    report = ValidationReport(tuple(checks))
    for c in report.checks:
        if not c.passed:
            log = logger.warning if c.blocking else logger.info
            log(f"Assumption check {c.name} failed at {list(c.nodes)}: {c.detail}")
    return report
