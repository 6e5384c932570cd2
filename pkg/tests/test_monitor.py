import numpy as np
import pytest

from controllers.barriers import constraint_interval, constraint_residuals
from controllers.monitor import current_barrier_margins, induced_voltage_margins, zcbf_monitor
from controllers.qp import solve_strict
from controllers.types import ControllerMode, ControllerSpec, NodeObservation
from grid.parameters import GridState
from grid.topology import incidence_matrix
from tests.factories import random_grid


def test_interior_point_passes():
    result = zcbf_monitor(1.0, 0.0, 0.5)
    assert result.passed and result.margin == 0.5


def test_boundary_with_outward_flow_fails():
    result = zcbf_monitor(0.0, -0.1, 0.5)
    assert not result.passed
    assert result.margin == pytest.approx(-0.1)


def test_tolerance_and_arrays():
    assert zcbf_monitor(0.0, -5e-7, 1.0).passed
    result = zcbf_monitor(np.array([1.0, 0.0]), np.array([0.0, -0.1]), 2.0)
    assert not result.passed
    assert result.margin.tolist() == pytest.approx([2.0, -0.1])


@pytest.mark.parametrize("gain", [-1.0, 0.0, np.array([0.5, 0.0])])
def test_non_positive_gain_rejected(gain):
    with pytest.raises(ValueError, match="positive"):
        zcbf_monitor(np.array([1.0, 1.0]), np.zeros(2), gain)


def test_zero_gain_allowed_only_on_request():
    result = zcbf_monitor(5.0, -0.1, 0.0, allow_zero_gain=True)
    assert not result.passed and result.margin == pytest.approx(-0.1)
    with pytest.raises(ValueError):
        zcbf_monitor(5.0, 0.0, -1.0, allow_zero_gain=True)


def test_strict_decision_margins_equal_scaled_residuals(case_params):
    node, obs = case_params.node(0), NodeObservation(13.5, 230.0)
    spec = ControllerSpec(ControllerMode.JOINT, eta_l=0.5, eta_h=0.4)
    a = solve_strict(constraint_interval(obs, node, spec)).a
    lower, upper = current_barrier_margins(obs, a, node, spec)
    g_l, g_h = constraint_residuals(a, obs, node, spec)
    assert lower.passed and upper.passed
    assert lower.margin == pytest.approx(g_l / node.L, abs=1e-6)
    assert upper.margin == pytest.approx(g_h / node.L, abs=1e-6)


def test_voltage_chain_sign_equivalence(rng):
    for _ in range(50):
        params, topo = random_grid(rng, int(rng.integers(2, 8)))
        B = incidence_matrix(topo)
        state = GridState(I=rng.uniform(0.9, 1.1, params.n) * params.G * params.v_l,
                          V=rng.uniform(0.98, 1.02, params.n) * params.v_l)
        lower, upper = induced_voltage_margins(state, params, B)
        assert np.allclose(lower, state.I - params.G * params.v_l, rtol=1e-9, atol=1e-9)
        assert np.allclose(upper, params.G * params.v_h - state.I, rtol=1e-9, atol=1e-9)
        assert np.array_equal(lower >= 1e-9, state.I - params.G * params.v_l >= 1e-9)
