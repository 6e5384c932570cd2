"""Node-local controller types. Nothing here can hold another node's state."""
from dataclasses import dataclass
from enum import Enum
import logging
import math

from config.defaults import DEFAULT_SLACK_PENALTY
from errors import ParameterError

logger = logging.getLogger("controller")


class ControllerMode(str, Enum):
    KNOWN_LOAD = "known_load"
    LOAD_INTERVAL = "load_interval"
    JOINT = "joint"
    RELAXED = "relaxed"

    @property
    def strict(self) -> bool:
        return self is not ControllerMode.RELAXED


@dataclass(frozen=True)
class NodeObservation:
    """Local measurements at one DGU: inductor current I and load voltage V."""
    I: float
    V: float

    def __post_init__(self):
        if not (math.isfinite(self.I) and math.isfinite(self.V)):
            raise ParameterError(f"Non-finite observation I={self.I}, V={self.V}")


@dataclass(frozen=True)
class ControllerSpec:
    """Barrier gains and slack penalties of one node's controller."""
    mode: ControllerMode = ControllerMode.JOINT
    eta_l: float = 0.5
    eta_h: float = 0.5
    P_l: float = DEFAULT_SLACK_PENALTY
    P_h: float = DEFAULT_SLACK_PENALTY

    def __post_init__(self):
        object.__setattr__(self, "mode", ControllerMode(self.mode))
        if self.eta_l < 0 or self.eta_h < 0:
            raise ParameterError(f"Barrier gains must be positive, got eta_l={self.eta_l}, eta_h={self.eta_h}")
        if self.eta_l == 0 or self.eta_h == 0:
            logger.warning("Zero barrier gain: the current barrier loses its class-K term")
        if self.P_l <= 0 or self.P_h <= 0:
            raise ParameterError(f"Slack penalties must be positive, got P_l={self.P_l}, P_h={self.P_h}")

    def with_mode(self, mode: ControllerMode) -> "ControllerSpec":
        return ControllerSpec(ControllerMode(mode), self.eta_l, self.eta_h, self.P_l, self.P_h)


@dataclass(frozen=True)
class EffectiveCurrentBounds:
    I_tilde_l: float
    I_tilde_h: float


@dataclass(frozen=True)
class DutyDecision:
    a: float
    eps_l: float = 0.0
    eps_h: float = 0.0
    feasible: bool = True


@dataclass(frozen=True)
class BarrierValues:
    """Voltage barriers b (V) and current barriers B (A); each is >= 0 inside its safe set."""
    b_l: float
    b_h: float
    B_l: float
    B_h: float

    @property
    def inside(self) -> bool:
        return min(self.b_l, self.b_h, self.B_l, self.B_h) >= 0.0
