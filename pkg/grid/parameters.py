"""Electrical parameters and state of the microgrid.

Diagonal matrices (L, C, G, bounds) are stored as n-vectors; line resistances as
an m-vector. Every array is copied and frozen on construction so a parameter set
can be shared read-only between the plant model and the node controllers.
"""
from dataclasses import dataclass, fields, replace

import numpy as np

from errors import DimensionError, ParameterError

NODE_FIELDS = ("L", "C", "G", "G_l", "G_h", "V_s", "v_l", "v_h", "I_l", "I_h")


def _frozen_vector(name: str, value) -> np.ndarray:
    arr = np.array(value, dtype=float, copy=True).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise ParameterError(f"Parameter {name} has non-finite entries")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class NodeParameters:
    """Constants available to the controller of a single DGU."""
    index: int
    L: float
    C: float
    G: float
    G_l: float
    G_h: float
    V_s: float
    v_l: float
    v_h: float
    I_l: float
    I_h: float


@dataclass(frozen=True, eq=False)
class GridParameters:
    L: np.ndarray
    C: np.ndarray
    G: np.ndarray
    G_l: np.ndarray
    G_h: np.ndarray
    V_s: np.ndarray
    v_l: np.ndarray
    v_h: np.ndarray
    I_l: np.ndarray
    I_h: np.ndarray
    R: np.ndarray

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _frozen_vector(f.name, getattr(self, f.name)))
        n = self.L.size
        bad = [name for name in NODE_FIELDS if getattr(self, name).size != n]
        if bad:
            raise DimensionError(f"Node parameters {bad} do not have length n={n}")

    @property
    def n(self) -> int:
        return self.L.size

    @property
    def m(self) -> int:
        return self.R.size

    def node(self, i: int) -> NodeParameters:
        """Node-local view, 0-based i; `index` is reported 1-based."""
        return NodeParameters(index=i + 1, **{name: float(getattr(self, name)[i]) for name in NODE_FIELDS})

    def nodes(self) -> list[NodeParameters]:
        return [self.node(i) for i in range(self.n)]

    def with_load(self, G) -> "GridParameters":
        """Copy with the true plant load replaced; controller bounds G_l, G_h are kept."""
        G = np.asarray(G, dtype=float).reshape(-1)
        if G.size != self.n:
            raise DimensionError(f"Load vector has length {G.size}, expected {self.n}")
        return replace(self, G=G)

    def __eq__(self, other):
        if not isinstance(other, GridParameters):
            return NotImplemented
        return all(np.array_equal(getattr(self, f.name), getattr(other, f.name)) for f in fields(self))

    __hash__ = None

    @classmethod
    def from_nodes(cls, nodes: list[dict], R) -> "GridParameters":
        return cls(**{name: [node[name] for node in nodes] for name in NODE_FIELDS}, R=R)


@dataclass(frozen=True, eq=False)
class GridState:
    """Stacked inductor currents I and load voltages V."""
    I: np.ndarray
    V: np.ndarray

    def __post_init__(self):
        I = _frozen_vector("I", self.I)
        V = _frozen_vector("V", self.V)
        if I.size != V.size:
            raise DimensionError(f"State has {I.size} currents but {V.size} voltages")
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "V", V)

    @property
    def n(self) -> int:
        return self.I.size

    def stacked(self) -> np.ndarray:
        return np.concatenate([self.I, self.V])

    @classmethod
    def from_stacked(cls, x: np.ndarray) -> "GridState":
        n = x.size // 2
        return cls(I=x[:n], V=x[n:])

    def __eq__(self, other):
        if not isinstance(other, GridState):
            return NotImplemented
        return np.array_equal(self.I, other.I) and np.array_equal(self.V, other.V)

    __hash__ = None
