import numpy as np
import pytest

from errors import DimensionError
from grid.dynamics import (dynamics, effective_conductance, fastest_time_scale, forced_equilibrium,
    line_laplacian, state_matrix)
from grid.parameters import GridParameters, GridState
from grid.topology import GridTopology, incidence_matrix, ring_topology
from tests.factories import random_grid


def _single_node(G=0.05):
    params = GridParameters(L=[2e-3], C=[2e-3], G=[G], G_l=[0.9 * G], G_h=[1.1 * G], V_s=[380.0], v_l=[229.0],
                            v_h=[231.0], I_l=[10.0], I_h=[13.0], R=[])
    return params, incidence_matrix(ring_topology(1))


class TestEffectiveConductance:
    def test_single_node_has_no_line_term(self):
        params, B = _single_node()
        assert effective_conductance(params, B).tolist() == [[0.05]]

    def test_two_nodes_one_line(self, two_node_grid):
        params, topo = two_node_grid
        Gp = effective_conductance(params, incidence_matrix(topo))
        expected = np.diag([0.05, 0.04]) + 2.0 * np.array([[1.0, -1.0], [-1.0, 1.0]])
        assert np.allclose(Gp, expected, rtol=0, atol=1e-15)

    def test_case_ring_is_positive_definite(self, case_params, case_B):
        Gp = effective_conductance(case_params, case_B)
        np.linalg.cholesky(Gp)
        assert np.all(np.linalg.eigvalsh(Gp) > 0)

    def test_wrong_incidence_shape(self, case_params):
        with pytest.raises(DimensionError):
            line_laplacian(case_params, np.zeros((4, 3)))

    def test_orientation_does_not_matter(self, case_params):
        flipped = incidence_matrix(GridTopology(4, ((2, 1), (3, 2), (3, 4), (1, 4))))
        assert np.allclose(effective_conductance(case_params, flipped),
                           effective_conductance(case_params, incidence_matrix(ring_topology(4))), rtol=0, atol=0)


class TestDynamics:
    def test_single_node_full_duty_from_rest(self):
        params, B = _single_node()
        dI, dV = dynamics(GridState(I=[0.0], V=[0.0]), [1.0], params, B)
        assert dI[0] == pytest.approx(380.0 / 2e-3)
        assert dV[0] == 0.0

    def test_uniform_voltage_has_no_line_current(self, case_params, case_B):
        I = np.array([13.0, 4.5, 13.5, 11.5])
        state = GridState(I=I, V=np.full(4, 230.0))
        _, dV = dynamics(state, np.full(4, 0.6), case_params, case_B)
        expected = (I - case_params.G * 230.0) / case_params.C
        assert np.allclose(dV, expected, rtol=1e-12, atol=1e-9)

    def test_superposition_of_state_terms(self, case_params, case_B, rng):
        u = np.full(4, 0.6)
        zero = GridState(I=np.zeros(4), V=np.zeros(4))
        bias = np.concatenate(dynamics(zero, u, case_params, case_B))
        x1, x2 = rng.normal(size=8), rng.normal(size=8)
        a, b = rng.normal(size=2)

        def f(x):
            return np.concatenate(dynamics(GridState.from_stacked(x), u, case_params, case_B)) - bias

        assert np.allclose(f(a * x1 + b * x2), a * f(x1) + b * f(x2), rtol=1e-9, atol=1e-6)

    def test_matches_state_matrix(self, case_params, case_B, rng):
        x, u = rng.normal(size=8) * 100, rng.uniform(0.1, 1.0, 4)
        A = state_matrix(case_params, case_B)
        rhs = A @ x + np.concatenate([case_params.V_s * u / case_params.L, np.zeros(4)])
        assert np.allclose(np.concatenate(dynamics(GridState.from_stacked(x), u, case_params, case_B)), rhs,
                           rtol=1e-12, atol=1e-6)

    @pytest.mark.parametrize("u", [[0.5, 0.5, 0.5, 1.5], [-0.1, 0.5, 0.5, 0.5]])
    def test_rejects_duty_outside_unit_interval(self, case_params, case_B, u):
        with pytest.raises(ValueError):
            dynamics(GridState(I=np.zeros(4), V=np.zeros(4)), u, case_params, case_B)

    def test_dimension_mismatch(self, case_params, case_B):
        with pytest.raises(DimensionError):
            dynamics(GridState(I=np.zeros(3), V=np.zeros(3)), np.full(3, 0.5), case_params, case_B)
        with pytest.raises(DimensionError):
            dynamics(GridState(I=np.zeros(4), V=np.zeros(4)), np.full(3, 0.5), case_params, case_B)


class TestForcedEquilibrium:
    def test_full_duty_gives_source_voltage(self, case_params, case_B):
        eq = forced_equilibrium(np.ones(4), case_params, case_B)
        assert np.array_equal(eq.V, case_params.V_s)

    def test_uniform_target_on_case_ring(self, case_params, case_B):
        eq = forced_equilibrium(230.0 / case_params.V_s, case_params, case_B)
        assert np.allclose(eq.V, 230.0, rtol=1e-15)
        assert np.allclose(eq.I, 230.0 * case_params.G, rtol=1e-12)
        assert eq.I[1] == pytest.approx(4.6)

    def test_rejects_zero_duty(self, case_params, case_B):
        with pytest.raises(ValueError):
            forced_equilibrium(np.array([0.0, 0.5, 0.5, 0.5]), case_params, case_B)

    def test_residual_vanishes_for_random_duty(self, rng):
        params, topo = random_grid(rng, 6)
        B = incidence_matrix(topo)
        for _ in range(1000):
            u = rng.uniform(1e-3, 1.0, params.n)
            eq = forced_equilibrium(u, params, B)
            dI, dV = dynamics(eq, u, params, B)
            assert np.linalg.norm(dI * params.L) <= 1e-12 * np.linalg.norm(eq.V)
            assert np.linalg.norm(dV * params.C) <= 1e-12 * np.linalg.norm(eq.I)


def test_fastest_time_scale(case_params, case_B):
    gp = np.diag(effective_conductance(case_params, case_B))
    expected = min(np.min(case_params.C / gp), np.min(case_params.L / 0.5))
    assert fastest_time_scale(case_params, case_B, np.full(4, 0.5)) == pytest.approx(expected)
