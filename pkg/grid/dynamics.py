"""Averaged buck-converter network dynamics and forced equilibria.

    L dI/dt = V_s * u - V
    C dV/dt = I - G V - B R^-1 B^T V
"""
import numpy as np

from errors import DimensionError
from grid.parameters import GridParameters, GridState


def _check_incidence(params: GridParameters, B: np.ndarray):
    if B.shape != (params.n, params.m):
        raise DimensionError(f"Incidence matrix is {B.shape}, expected ({params.n}, {params.m})")


def line_laplacian(params: GridParameters, B: np.ndarray) -> np.ndarray:
    """B R^-1 B^T, symmetrized so the result is exactly symmetric in floating point."""
    _check_incidence(params, B)
    lap = (B * (1.0 / params.R)) @ B.T
    return 0.5 * (lap + lap.T)


def effective_conductance(params: GridParameters, B: np.ndarray) -> np.ndarray:
    """G_p = G + B R^-1 B^T (symmetric positive definite for positive G and R)."""
    return np.diag(params.G) + line_laplacian(params, B)


def state_matrix(params: GridParameters, B: np.ndarray) -> np.ndarray:
    """A in d[I; V]/dt = A [I; V] + [V_s u / L; 0]."""
    n = params.n
    A = np.zeros((2 * n, 2 * n))
    A[:n, n:] = -np.diag(1.0 / params.L)
    A[n:, :n] = np.diag(1.0 / params.C)
    A[n:, n:] = -effective_conductance(params, B) / params.C[:, None]
    return A


def _check_duty(u: np.ndarray, n: int) -> np.ndarray:
    u = np.asarray(u, dtype=float).reshape(-1)
    if u.size != n:
        raise DimensionError(f"Duty vector has length {u.size}, expected {n}")
    if np.any(u < 0.0) or np.any(u > 1.0):
        raise ValueError(f"Duty ratios must lie in [0, 1], got min={u.min():.6g}, max={u.max():.6g}")
    return u


def dynamics(state: GridState, u, params: GridParameters, B: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(dI/dt, dV/dt) at `state` under duty ratios `u`."""
    if state.n != params.n:
        raise DimensionError(f"State has {state.n} nodes, parameters have {params.n}")
    u = _check_duty(u, params.n)
    dI = (params.V_s * u - state.V) / params.L
    dV = (state.I - params.G * state.V - line_laplacian(params, B) @ state.V) / params.C
    return dI, dV


def forced_equilibrium(u_bar, params: GridParameters, B: np.ndarray) -> GridState:
    """Steady state for a constant duty ratio: V = V_s * u_bar, I = G_p V."""
    u_bar = np.asarray(u_bar, dtype=float).reshape(-1)
    if u_bar.size != params.n:
        raise DimensionError(f"Duty vector has length {u_bar.size}, expected {params.n}")
    if np.any(u_bar <= 0.0) or np.any(u_bar > 1.0):
        raise ValueError("Forced equilibria need 0 < u_bar <= 1 at every node")
    V_bar = params.V_s * u_bar
    I_bar = effective_conductance(params, B) @ V_bar
    return GridState(I=I_bar, V=V_bar)


def fastest_time_scale(params: GridParameters, B: np.ndarray, eta) -> float:
    """min over nodes of C_i / G_p,ii and L_i / eta_i, the dt resolution yardstick."""
    gp_diag = np.diag(effective_conductance(params, B))
    scales = [np.min(params.C / gp_diag)]
    eta = np.asarray(eta, dtype=float)
    if np.any(eta > 0):
        scales.append(np.min(params.L[eta > 0] / eta[eta > 0]))
    return float(min(scales))
