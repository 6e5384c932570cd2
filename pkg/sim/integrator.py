"""Classical RK4 with the duty ratios held over the step."""
import numpy as np

from errors import NumericalDivergence
from grid.dynamics import dynamics, state_matrix
from grid.parameters import GridParameters, GridState


def integrate_step(state: GridState, u, params: GridParameters, B: np.ndarray, dt: float,
                   step: int | None = None) -> GridState:
    """One fourth-order Runge-Kutta step of the network dynamics."""
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")

    def f(I, V):
        return dynamics(GridState(I=I, V=V), u, params, B)

    I, V = state.I, state.V
    kI1, kV1 = f(I, V)
    kI2, kV2 = f(I + 0.5 * dt * kI1, V + 0.5 * dt * kV1)
    kI3, kV3 = f(I + 0.5 * dt * kI2, V + 0.5 * dt * kV2)
    kI4, kV4 = f(I + dt * kI3, V + dt * kV3)
    I_next = I + dt / 6.0 * (kI1 + 2 * kI2 + 2 * kI3 + kI4)
    V_next = V + dt / 6.0 * (kV1 + 2 * kV2 + 2 * kV3 + kV4)
    if not (np.all(np.isfinite(I_next)) and np.all(np.isfinite(V_next))):
        raise NumericalDivergence(step)
    return GridState(I=I_next, V=V_next)


class Rk4Stepper:
    """RK4 for x' = A x + E u written as one propagator, x+ = Phi x + Gamma u.

    For an affine field with u held constant the four RK4 stages collapse to
    Phi = T4(hA) and Gamma = h S(hA) E with the truncated series below, so this is the
    same scheme as `integrate_step`, just precomputed once per parameter set.
    """

    def __init__(self, params: GridParameters, B: np.ndarray, dt: float):
        if not dt > 0:
            raise ValueError(f"dt must be positive, got {dt}")
        n = params.n
        hA = dt * state_matrix(params, B)
        eye = np.eye(2 * n)
        hA2 = hA @ hA
        hA3 = hA2 @ hA
        self.phi = eye + hA + hA2 / 2.0 + hA3 / 6.0 + hA3 @ hA / 24.0
        series = eye + hA / 2.0 + hA2 / 6.0 + hA3 / 24.0
        E = np.zeros((2 * n, n))
        E[:n, :] = np.diag(params.V_s / params.L)
        self.gamma = dt * series @ E
        self.dt = dt

    def step(self, x: np.ndarray, u: np.ndarray, step: int | None = None) -> np.ndarray:
        x_next = self.phi @ x + self.gamma @ u
        if not np.all(np.isfinite(x_next)):
            raise NumericalDivergence(step)
        return x_next
