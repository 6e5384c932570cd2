"""Scenario description: horizon, step, initial state, per-node controllers, events."""
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from config.defaults import INITIAL_CURRENT_FACTOR, STEP_COUNT_SLACK
from controllers.barriers import node_current_bounds
from controllers.types import ControllerSpec
from errors import ParameterError
from grid.parameters import GridParameters, GridState
from sim.events import LoadScale


class SwitchPolicy(str, Enum):
    ALWAYS_STRICT = "always_strict"
    RELAXED_UNTIL_FEASIBLE = "relaxed_until_feasible"


@dataclass(frozen=True)
class Scenario:
    duration: float
    dt: float
    controllers: tuple[ControllerSpec, ...]
    initial_state: GridState | None = None
    events: tuple[LoadScale, ...] = field(default_factory=tuple)
    switch_policy: SwitchPolicy = SwitchPolicy.RELAXED_UNTIL_FEASIBLE

    def __post_init__(self):
        object.__setattr__(self, "controllers", tuple(self.controllers))
        object.__setattr__(self, "events", tuple(sorted(self.events, key=lambda e: e.time)))
        object.__setattr__(self, "switch_policy", SwitchPolicy(self.switch_policy))
        if not self.dt > 0:
            raise ParameterError(f"dt must be positive, got {self.dt}")
        if self.duration < self.dt:
            raise ParameterError(f"duration {self.duration} is shorter than dt {self.dt}")
        for e in self.events:
            if not 0.0 <= e.time <= self.duration:
                raise ParameterError(f"Event at t={e.time} lies outside [0, {self.duration}]")

    @property
    def steps(self) -> int:
        """Whole steps that fit in the horizon; the last sample never lies past ``duration``."""
        return int(math.floor(self.duration / self.dt + STEP_COUNT_SLACK))


def default_initial_state(params: GridParameters) -> GridState:
    """V(0) at the middle of each voltage band, I(0) just below each joint current band."""
    V0 = 0.5 * (params.v_l + params.v_h)
    I0 = np.array([INITIAL_CURRENT_FACTOR * node_current_bounds(node).I_tilde_l for node in params.nodes()])
    return GridState(I=I0, V=V0)
