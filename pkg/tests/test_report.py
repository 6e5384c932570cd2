import numpy as np
import pytest

from sim.report import merge_intervals, negative_intervals, safety_report
from sim.trace import Trace
from tests.factories import case_params


def _trace(t, I, V):
    k, n = I.shape
    zeros = np.zeros((k, n))
    return Trace(t=t, I=I, V=V, u=zeros + 0.6, eps_l=zeros, eps_h=zeros, strict=np.zeros((k, n), dtype=bool))


def _steady(t):
    I = np.tile([13.5, 4.6, 13.5, 11.5], (t.size, 1))
    V = np.full((t.size, 4), 230.0)
    return I, V


def test_trace_inside_bounds_has_no_violations():
    t = np.linspace(0.0, 0.3, 301)
    report = safety_report(_trace(t, *_steady(t)), case_params())
    assert report.violation_free
    assert all(ns.first_entry_time == 0.0 for ns in report.nodes)
    assert report.post_entry_violations() == []


def test_voltage_dip_on_node_1():
    t = np.linspace(0.0, 0.3, 301)
    I, V = _steady(t)
    V[(t >= 0.1 - 1e-12) & (t <= 0.2 + 1e-12), 0] = 228.0
    report = safety_report(_trace(t, I, V), case_params())
    node1 = report.nodes[0]
    assert len(node1.voltage_violations) == 1
    start, end = node1.voltage_violations[0]
    assert start == pytest.approx(0.1, abs=1e-3)
    assert end == pytest.approx(0.2, abs=1e-3)
    assert node1.V_min == 228.0
    assert all(not ns.voltage_violations for ns in report.nodes[1:])
    assert report.post_entry_violations() == [{"node": 1, "objective": "voltage", "start": start, "end": end}]


def test_violation_before_entry_is_not_post_entry():
    t = np.linspace(0.0, 0.1, 101)
    I, V = _steady(t)
    I[:20, 1] = 4.0
    report = safety_report(_trace(t, I, V), case_params())
    node2 = report.nodes[1]
    assert node2.current_violations and node2.first_entry_time == pytest.approx(t[20])
    assert report.post_entry_violations() == []


def test_interpolated_crossings():
    t = np.array([0.0, 1.0, 2.0, 3.0])
    h = np.array([1.0, -1.0, -3.0, 1.0])
    assert negative_intervals(t, h) == [(0.5, 2.75)]
    assert negative_intervals(t, -np.ones(4)) == [(0.0, 3.0)]


def test_merge_sorts_and_joins():
    assert merge_intervals([(0.5, 0.7), (0.1, 0.2), (0.15, 0.3)]) == ((0.1, 0.3), (0.5, 0.7))


def test_tolerance_absorbs_small_dips():
    t = np.linspace(0.0, 0.1, 11)
    I, V = _steady(t)
    V[5, 2] = 228.9995
    assert safety_report(_trace(t, I, V), case_params(), tolerance=1e-3).violation_free
    assert not safety_report(_trace(t, I, V), case_params()).violation_free


def test_empty_trace_rejected():
    empty = np.zeros((0, 4))
    with pytest.raises(ValueError):
        safety_report(_trace(np.zeros(0), empty, empty), case_params())
