"""Safety report: bound violations per node, located by barrier sign changes."""
from dataclasses import dataclass, field

import numpy as np

from config.defaults import REPORT_TOLERANCE
from controllers.barriers import node_current_bounds
from grid.parameters import GridParameters

Interval = tuple[float, float]


@dataclass(frozen=True)
class NodeSafety:
    node: int
    V_min: float
    V_max: float
    I_min: float
    I_max: float
    voltage_violations: tuple[Interval, ...] = field(default_factory=tuple)
    current_violations: tuple[Interval, ...] = field(default_factory=tuple)
    first_entry_time: float | None = None

    def post_entry(self, intervals: tuple[Interval, ...]) -> list[Interval]:
        if self.first_entry_time is None:
            return []
        return [iv for iv in intervals if iv[1] > self.first_entry_time]

    def to_dict(self) -> dict:
        return {"node": self.node, "V_min": self.V_min, "V_max": self.V_max, "I_min": self.I_min, "I_max": self.I_max,
                "voltage_violations": [list(iv) for iv in self.voltage_violations],
                "current_violations": [list(iv) for iv in self.current_violations],
                "first_entry_time": self.first_entry_time}


@dataclass(frozen=True)
class SafetyReport:
    nodes: tuple[NodeSafety, ...]
    tolerance: float = REPORT_TOLERANCE

    def post_entry_violations(self) -> list[dict]:
        """Violation intervals that end after the node first entered the joint safe set."""
        found = []
        for ns in self.nodes:
            for objective, intervals in (("voltage", ns.voltage_violations), ("current", ns.current_violations)):
                for start, end in ns.post_entry(intervals):
                    found.append({"node": ns.node, "objective": objective, "start": start, "end": end})
        return found

    @property
    def violation_free(self) -> bool:
        return not any(ns.voltage_violations or ns.current_violations for ns in self.nodes)

    def to_dict(self) -> dict:
        return {"tolerance": self.tolerance, "violation_free": self.violation_free,
                "post_entry_violations": self.post_entry_violations(),
                "nodes": [ns.to_dict() for ns in self.nodes]}


def _crossing(t0: float, t1: float, h0: float, h1: float) -> float:
    if h0 == h1:
        return t0
    return t0 + (t1 - t0) * h0 / (h0 - h1)


def negative_intervals(t: np.ndarray, h: np.ndarray) -> list[Interval]:
    """Time intervals where h < 0, with ends placed at the linearly interpolated zero crossings."""
    neg = h < 0
    if not neg.any():
        return []
    edges = np.diff(neg.astype(np.int8))
    starts = list(np.flatnonzero(edges == 1) + 1)
    ends = list(np.flatnonzero(edges == -1))
    if neg[0]:
        starts.insert(0, 0)
    if neg[-1]:
        ends.append(len(h) - 1)
    out = []
    for s, e in zip(starts, ends):
        start = float(t[0]) if s == 0 else _crossing(t[s - 1], t[s], h[s - 1], h[s])
        end = float(t[-1]) if e == len(h) - 1 else _crossing(t[e], t[e + 1], h[e], h[e + 1])
        out.append((float(start), float(end)))
    return out


def merge_intervals(intervals: list[Interval]) -> tuple[Interval, ...]:
    merged: list[list[float]] = []
    for start, end in sorted(intervals):
        if merged and start <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], end)
        else:
            merged.append([start, end])
    return tuple((s, e) for s, e in merged)


def safety_report(trace, params: GridParameters, tolerance: float = REPORT_TOLERANCE) -> SafetyReport:
    """Objective-1 (voltage) and Objective-2 (current) violations, extrema and joint-set entry per node.

    A sample counts as a violation when a barrier is below -tolerance.
    """
    if len(trace) == 0:
        raise ValueError("Cannot report on an empty trace")
    t = np.asarray(trace.t, dtype=float)
    nodes = []
    for i, node in enumerate(params.nodes()):
        V, I = trace.V[:, i], trace.I[:, i]
        voltage = merge_intervals(negative_intervals(t, V - node.v_l + tolerance)
                                  + negative_intervals(t, node.v_h - V + tolerance))
        current = merge_intervals(negative_intervals(t, I - node.I_l + tolerance)
                                  + negative_intervals(t, node.I_h - I + tolerance))
        bounds = node_current_bounds(node)
        inside = (I >= bounds.I_tilde_l) & (I <= bounds.I_tilde_h) & (V >= node.v_l) & (V <= node.v_h)
        hits = np.flatnonzero(inside)
        nodes.append(NodeSafety(node=node.index, V_min=float(V.min()), V_max=float(V.max()),
                                I_min=float(I.min()), I_max=float(I.max()),
                                voltage_violations=voltage, current_violations=current,
                                first_entry_time=float(t[hits[0]]) if hits.size else None))
    return SafetyReport(nodes=tuple(nodes), tolerance=tolerance)
