"""Brute-force reference propagator built on the 25x25 Liouvillian

Density matrices are vectorized by column stacking, so that
vec(A X B) = (B^T kron A) vec(X).
"""
import logging
import math
from typing import Literal

import numpy as np
from scipy.linalg import expm

from dynamics import NoiseSpec, Trajectory, check_density_matrix, step_count
from netmodel import N_LEVELS, SINK_INDEX, NetworkConfig, hamiltonian_at, site_index

logger = logging.getLogger(__name__)

Scheme = Literal['midpoint', 'magnus4']

_IDENTITY = np.eye(N_LEVELS, dtype=complex)

# Gauss-Legendre nodes for the fourth-order Magnus step
_GAUSS_OFFSET = math.sqrt(3.0) / 6.0
_MAGNUS_COMMUTATOR_WEIGHT = math.sqrt(3.0) / 12.0


def vec(rho: np.ndarray) -> np.ndarray:
    """Column-stack a matrix into a vector"""
    return np.asarray(rho).reshape(-1, order='F')


def unvec(vector: np.ndarray) -> np.ndarray:
    """Inverse of vec for a square matrix"""
    dim = int(round(math.sqrt(vector.shape[0])))
    return np.asarray(vector).reshape((dim, dim), order='F')


def commutator_superoperator(H: np.ndarray) -> np.ndarray:
    """Superoperator of rho -> -i[H, rho]"""
    return -1j * (np.kron(_IDENTITY, H) - np.kron(H.T, _IDENTITY))


def dissipator_superoperator(jump: np.ndarray, rate: float) -> np.ndarray:
    """Superoperator of rho -> rate (2 A rho A^dagger - {A^dagger A, rho})"""
    AdA = jump.conj().T @ jump
    return rate * (
        2.0 * np.kron(jump.conj(), jump)
        - np.kron(_IDENTITY, AdA)
        - np.kron(AdA.T, _IDENTITY)
    )


def _jump_operators(noise: NoiseSpec) -> list[tuple[float, np.ndarray]]:
    """(rate, jump operator) pairs: dephasing n_2, n_3 and the sink decay"""
    jumps = []
    for site, rate in ((2, noise.gamma2), (3, noise.gamma3)):
        n = np.zeros((N_LEVELS, N_LEVELS), dtype=complex)
        n[site_index(site), site_index(site)] = 1.0
        jumps.append((rate, n))

    decay = np.zeros((N_LEVELS, N_LEVELS), dtype=complex)
    decay[SINK_INDEX, site_index(4)] = 1.0
    jumps.append((noise.Gamma, decay))
    return jumps


def _dissipative_part(noise: NoiseSpec) -> np.ndarray:
    D = np.zeros((N_LEVELS ** 2, N_LEVELS ** 2), dtype=complex)
    for rate, jump in _jump_operators(noise):
        if rate:
            D += dissipator_superoperator(jump, rate)
    return D


def assemble_liouvillian(config: NetworkConfig, noise: NoiseSpec, t: float) -> np.ndarray:
    """25x25 generator L(t) with L vec(rho) = vec(master_rhs(t, rho))"""
    return commutator_superoperator(hamiltonian_at(config, t)) + _dissipative_part(noise)


def trace_residual(L: np.ndarray) -> float:
    """max |vec(I)^T L|; zero for a trace-preserving generator"""
    return float(np.abs(vec(_IDENTITY) @ L).max())


def _midpoint_generator(config: NetworkConfig, D: np.ndarray, t: float, h: float) -> np.ndarray:
    return (commutator_superoperator(hamiltonian_at(config, t + 0.5 * h)) + D) * h


def _magnus4_generator(config: NetworkConfig, D: np.ndarray, t: float, h: float) -> np.ndarray:
    L1 = commutator_superoperator(hamiltonian_at(config, t + (0.5 - _GAUSS_OFFSET) * h)) + D
    L2 = commutator_superoperator(hamiltonian_at(config, t + (0.5 + _GAUSS_OFFSET) * h)) + D
    return 0.5 * h * (L1 + L2) + _MAGNUS_COMMUTATOR_WEIGHT * h * h * (L2 @ L1 - L1 @ L2)


_GENERATORS = {
    'midpoint': _midpoint_generator,
    'magnus4': _magnus4_generator,
}


def propagate_exponential(
    config: NetworkConfig,
    noise: NoiseSpec,
    rho0: np.ndarray,
    t_max: float,
    h_oracle: float,
    scheme: Scheme = 'midpoint',
) -> Trajectory:
    """Propagate with piecewise-constant matrix exponentials

    'midpoint' freezes L at the step midpoint (second order); 'magnus4'
    uses two Gauss-Legendre samples and one commutator (fourth order).
    For time-independent networks one exponential serves every step and
    both schemes are exact up to the Pade error of scipy's expm.
    """
    if scheme not in _GENERATORS:
        raise ValueError(f"unknown scheme {scheme!r}, expected one of {sorted(_GENERATORS)}")
    rho0 = np.asarray(rho0, dtype=complex)
    is_valid, error_msg = check_density_matrix(rho0)
    if not is_valid:
        raise ValueError(f"invalid initial state: {error_msg}")

    n_steps = step_count(t_max, h_oracle)
    times = np.linspace(0.0, t_max, n_steps + 1)
    states = np.empty((n_steps + 1, N_LEVELS, N_LEVELS), dtype=complex)
    states[0] = rho0
    if n_steps == 0:
        return Trajectory(times=times, states=states, noise=noise)

    dt = t_max / n_steps
    D = _dissipative_part(noise)
    generator = _GENERATORS[scheme]
    fixed_propagator = None
    if not config.is_time_dependent:
        fixed_propagator = expm(generator(config, D, 0.0, dt))

    logger.debug(f"Oracle ({scheme}): {n_steps} exponential steps of {dt:.3g}")
    state = vec(rho0)
    for k in range(n_steps):
        propagator = fixed_propagator
        if propagator is None:
            propagator = expm(generator(config, D, times[k], dt))
        state = propagator @ state
        rho = unvec(state)
        rho = 0.5 * (rho + rho.conj().T)
        states[k + 1] = rho
        state = vec(rho)

    return Trajectory(times=times, states=states, noise=noise)
