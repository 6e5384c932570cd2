"""Read and write scenario files."""
import json
import logging
from pathlib import Path

from pydantic import ValidationError

from config.schema import ScenarioConfig
from controllers.types import ControllerSpec
from errors import AssumptionError, ConfigError, ConfigNotFound
from grid.parameters import GridParameters, GridState
from grid.topology import GridTopology
from grid.validation import validate_assumptions
from sim.events import LoadScale
from sim.scenario import Scenario, default_initial_state

logger = logging.getLogger("config")


def _field_errors(exc: ValidationError) -> list[tuple[str, str]]:
    return [(".".join(str(p) for p in err["loc"]) or "<root>", err["msg"]) for err in exc.errors()]


def load_config(path) -> ScenarioConfig:
    path = Path(path)
    if not path.is_file():
        raise ConfigNotFound(f"Config file not found: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigError([("<file>", f"invalid JSON: {e}")]) from None
    try:
        return ScenarioConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(_field_errors(e)) from None


def write_config(config: ScenarioConfig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(config.model_dump_json(indent=2, exclude_none=True) + "\n", encoding="utf-8")
    return path


def _per_node(value, n: int) -> list[float]:
    return list(value) if isinstance(value, list) else [value] * n


def build_grid(config: ScenarioConfig) -> tuple[GridParameters, GridTopology]:
    topology = GridTopology(config.topology.nodes, tuple((e.head, e.tail) for e in config.topology.edges))
    delta = config.load_uncertainty
    nodes = []
    for node in config.nodes:
        G = node.conductance
        nodes.append({"L": node.L, "C": node.C, "G": G,
                      "G_l": node.G_l if node.G_l is not None else (1.0 - delta) * G,
                      "G_h": node.G_h if node.G_h is not None else (1.0 + delta) * G,
                      "V_s": node.V_s, "v_l": node.v_l, "v_h": node.v_h, "I_l": node.I_l, "I_h": node.I_h})
    params = GridParameters.from_nodes(nodes, R=[e.resistance for e in config.topology.edges])
    return params, topology


def build_scenario(config: ScenarioConfig) -> tuple[Scenario, GridParameters, GridTopology]:
    """Validated objects for a schema-checked config; failing assumptions raise AssumptionError."""
    params, topology = build_grid(config)
    n = params.n
    ctrl = config.controller
    specs = tuple(ControllerSpec(ctrl.mode, eta_l, eta_h, P_l, P_h) for eta_l, eta_h, P_l, P_h in
                  zip(_per_node(ctrl.eta_l, n), _per_node(ctrl.eta_h, n), _per_node(ctrl.P_l, n), _per_node(ctrl.P_h, n)))

    report = validate_assumptions(params)
    if not report.passed:
        raise AssumptionError(report)

    sim = config.simulation
    initial_state = None
    if sim.initial_I is not None or sim.initial_V is not None:
        default = default_initial_state(params)
        initial_state = GridState(I=sim.initial_I if sim.initial_I is not None else default.I,
                                  V=sim.initial_V if sim.initial_V is not None else default.V)
    scenario = Scenario(duration=sim.duration, dt=sim.dt, controllers=specs, initial_state=initial_state,
                        events=tuple(LoadScale(e.time, e.load_scale) for e in sim.events),
                        switch_policy=sim.switch_policy)
    logger.info(f"Loaded scenario {config.name!r}: {n} nodes, {topology.m} lines, {scenario.steps} steps")
    return scenario, params, topology


def parse_config(path) -> tuple[Scenario, GridParameters, GridTopology]:
    return build_scenario(load_config(path))
