"""Scenario file schema. Unknown keys are rejected at every level."""
from pydantic import (BaseModel, ConfigDict, Field, NonNegativeFloat, PositiveFloat, PositiveInt,
    model_validator)

from config.defaults import DEFAULT_DT, DEFAULT_SLACK_PENALTY, DEFAULT_SOURCE_VOLTAGE
from controllers.types import ControllerMode
from sim.scenario import SwitchPolicy


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class EdgeConfig(_Strict):
    head: PositiveInt
    tail: PositiveInt
    resistance: PositiveFloat


class TopologyConfig(_Strict):
    nodes: PositiveInt
    edges: list[EdgeConfig] = Field(default_factory=list)


class NodeConfig(_Strict):
    """One DGU. Give the load either as G (S) or as load_resistance (Ohm)."""
    L: PositiveFloat
    C: PositiveFloat
    G: PositiveFloat | None = None
    load_resistance: PositiveFloat | None = None
    G_l: PositiveFloat | None = None
    G_h: PositiveFloat | None = None
    V_s: PositiveFloat = DEFAULT_SOURCE_VOLTAGE
    v_l: PositiveFloat
    v_h: PositiveFloat
    I_l: NonNegativeFloat
    I_h: PositiveFloat

    @model_validator(mode="after")
    def _one_load(self):
        if (self.G is None) == (self.load_resistance is None):
            raise ValueError("give exactly one of G and load_resistance")
        return self

    @property
    def conductance(self) -> float:
        return self.G if self.G is not None else 1.0 / self.load_resistance


PerNode = NonNegativeFloat | list[NonNegativeFloat]
PerNodePositive = PositiveFloat | list[PositiveFloat]


class ControllerConfig(_Strict):
    mode: ControllerMode = ControllerMode.JOINT
    eta_l: PerNode = 0.5
    eta_h: PerNode = 0.5
    P_l: PerNodePositive = DEFAULT_SLACK_PENALTY
    P_h: PerNodePositive = DEFAULT_SLACK_PENALTY


class EventConfig(_Strict):
    time: NonNegativeFloat
    load_scale: PositiveFloat


class SimulationConfig(_Strict):
    duration: PositiveFloat
    dt: PositiveFloat = DEFAULT_DT
    initial_I: list[float] | None = None
    initial_V: list[float] | None = None
    events: list[EventConfig] = Field(default_factory=list)
    switch_policy: SwitchPolicy = SwitchPolicy.RELAXED_UNTIL_FEASIBLE


class OutputConfig(_Strict):
    directory: str = "output"
    plots: bool = True


class ScenarioConfig(_Strict):
    name: str = "scenario"
    description: str = ""
    load_uncertainty: float | None = Field(default=None, ge=0.0, lt=1.0)
    topology: TopologyConfig
    nodes: list[NodeConfig] = Field(min_length=1)
    controller: ControllerConfig = Field(default_factory=ControllerConfig)
    simulation: SimulationConfig
    output: OutputConfig = Field(default_factory=OutputConfig)

    @model_validator(mode="after")
    def _consistent_sizes(self):
        n = self.topology.nodes
        if len(self.nodes) != n:
            raise ValueError(f"topology declares {n} nodes but {len(self.nodes)} node entries are given")
        for key in ("eta_l", "eta_h", "P_l", "P_h"):
            value = getattr(self.controller, key)
            if isinstance(value, list) and len(value) != n:
                raise ValueError(f"controller.{key} has {len(value)} entries, expected {n}")
        for key in ("initial_I", "initial_V"):
            value = getattr(self.simulation, key)
            if value is not None and len(value) != n:
                raise ValueError(f"simulation.{key} has {len(value)} entries, expected {n}")
        if self.load_uncertainty is None:
            missing = [i + 1 for i, node in enumerate(self.nodes) if node.G_l is None or node.G_h is None]
            if missing:
                raise ValueError(f"nodes {missing} need G_l and G_h (or set load_uncertainty)")
        return self
