"""Scheduled plant events."""
from dataclasses import dataclass

from errors import ParameterError
from grid.parameters import GridParameters


@dataclass(frozen=True)
class LoadScale:
    """At `time`, every node's true load conductance is multiplied by `factor`."""
    time: float
    factor: float

    def __post_init__(self):
        if not self.factor > 0:
            raise ParameterError(f"Load scale factor must be positive, got {self.factor}")


def apply_event(params: GridParameters, event: LoadScale) -> GridParameters:
    """Scale the plant load only; the controller's G_l, G_h stay as configured."""
    if event.factor == 1.0:
        return params
    return params.with_load(event.factor * params.G)
