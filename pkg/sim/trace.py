"""Column-wise simulation trace.

The runner fills one row per sample. Columns that only the runner can derive
(barrier values, monitor margins, objective flags) are None for a trace that
was read back from a trace file.
"""
from dataclasses import dataclass

import numpy as np

from grid.parameters import GridState


@dataclass(frozen=True)
class TraceRecord:
    t: float
    I: np.ndarray
    V: np.ndarray
    u: np.ndarray
    eps_l: np.ndarray
    eps_h: np.ndarray
    strict: np.ndarray
    b_l: np.ndarray | None = None
    b_h: np.ndarray | None = None
    B_l: np.ndarray | None = None
    B_h: np.ndarray | None = None
    voltage_violation: np.ndarray | None = None
    current_violation: np.ndarray | None = None

    @property
    def modes(self) -> list[str]:
        return ["strict" if s else "relaxed" for s in self.strict]


@dataclass(frozen=True, eq=False)
class Trace:
    t: np.ndarray
    I: np.ndarray
    V: np.ndarray
    u: np.ndarray
    eps_l: np.ndarray
    eps_h: np.ndarray
    strict: np.ndarray
    b_l: np.ndarray | None = None
    b_h: np.ndarray | None = None
    B_l: np.ndarray | None = None
    B_h: np.ndarray | None = None
    margin_l: np.ndarray | None = None
    margin_h: np.ndarray | None = None
    voltage_violation: np.ndarray | None = None
    current_violation: np.ndarray | None = None
    latch_time: np.ndarray | None = None

    def __len__(self) -> int:
        return self.t.size

    @property
    def n(self) -> int:
        return self.I.shape[1]

    def record(self, k: int) -> TraceRecord:
        def row(col):
            return None if col is None else col[k]

        return TraceRecord(t=float(self.t[k]), I=self.I[k], V=self.V[k], u=self.u[k], eps_l=self.eps_l[k],
                           eps_h=self.eps_h[k], strict=self.strict[k], b_l=row(self.b_l), b_h=row(self.b_h),
                           B_l=row(self.B_l), B_h=row(self.B_h), voltage_violation=row(self.voltage_violation),
                           current_violation=row(self.current_violation))

    def records(self):
        for k in range(len(self)):
            yield self.record(k)

    def final_state(self) -> GridState:
        return GridState(I=self.I[-1], V=self.V[-1])

    def first_strict_time(self) -> np.ndarray:
        """Per node, the first sample time run by the strict law (NaN if never)."""
        out = np.full(self.n, np.nan)
        for i in range(self.n):
            hits = np.flatnonzero(self.strict[:, i])
            if hits.size:
                out[i] = self.t[hits[0]]
        return out
