"""Time-dependent Lindblad master equation and its RK4 propagation"""
import logging
import math

import numpy as np

from config import BREACH_TOLERANCE, DEFAULT_STEP
from netmodel import N_LEVELS, NetworkConfig, hamiltonian_at
from .dissipators import NoiseSpec, dephasing_mask, sink_dissipator
from .states import InvariantBreach, check_density_matrix, min_eigenvalue, trace_drift
from .trajectory import Trajectory

logger = logging.getLogger(__name__)


def _lindblad_rhs(H: np.ndarray, rho: np.ndarray, mask: np.ndarray, noise: NoiseSpec) -> np.ndarray:
    return -1j * (H @ rho - rho @ H) + mask * rho + sink_dissipator(rho, noise)


def master_rhs(t: float, rho: np.ndarray, config: NetworkConfig, noise: NoiseSpec) -> np.ndarray:
    """d rho/dt = -i[H(t), rho] + L_deph(rho) + L_sink(rho)"""
    return _lindblad_rhs(hamiltonian_at(config, t), rho, dephasing_mask(noise), noise)


def step_count(t_max: float, h: float) -> int:
    """Number of uniform steps covering [0, t_max] with step close to h"""
    if h <= 0:
        raise ValueError(f"step must be positive, got {h}")
    if t_max < 0:
        raise ValueError(f"t_max must be non-negative, got {t_max}")
    if t_max == 0:
        return 0
    return max(1, int(round(t_max / h)))


def _check_step(t: float, rho: np.ndarray):
    drift = trace_drift(rho)
    if drift > BREACH_TOLERANCE:
        raise InvariantBreach(t, 'trace', drift)
    lowest = min_eigenvalue(rho)
    if lowest < -BREACH_TOLERANCE:
        raise InvariantBreach(t, 'negativity', lowest)


def evolve(
    config: NetworkConfig,
    noise: NoiseSpec,
    rho0: np.ndarray,
    t_max: float,
    h: float = DEFAULT_STEP,
    check_invariants: bool = True,
) -> Trajectory:
    """Propagate rho0 with classical RK4 on a uniform grid

    H(t) is sampled at the stage times t, t+h/2 and t+h; each new state is
    re-symmetrized to (rho + rho^dagger)/2. The grid step is t_max/n with
    n = round(t_max/h), so the last snapshot lands exactly on t_max.

    Args:
        config: Network (possibly with time-dependent couplings)
        noise: Dephasing and sink rates
        rho0: Initial density matrix
        t_max: Final time (0 gives a single snapshot)
        h: Requested step
        check_invariants: Abort on trace drift or negativity beyond 1e-6

    Returns:
        Trajectory: All snapshots including rho0

    Raises:
        ValueError: If rho0 is not a valid density matrix or h/t_max are invalid
        InvariantBreach: On the first step leaving the physical set
    """
    rho0 = np.asarray(rho0, dtype=complex)
    is_valid, error_msg = check_density_matrix(rho0)
    if not is_valid:
        raise ValueError(f"invalid initial state: {error_msg}")

    n_steps = step_count(t_max, h)
    times = np.linspace(0.0, t_max, n_steps + 1)
    states = np.empty((n_steps + 1, N_LEVELS, N_LEVELS), dtype=complex)
    states[0] = rho0
    if n_steps == 0:
        return Trajectory(times=times, states=states, noise=noise)

    dt = t_max / n_steps
    if not math.isclose(dt, h, rel_tol=1e-9):
        logger.debug(f"Step adjusted from {h} to {dt} to land on t_max={t_max}")

    mask = dephasing_mask(noise)
    time_dependent = config.is_time_dependent
    H_now = hamiltonian_at(config, 0.0)
    H_mid = H_next = H_now
    rho = states[0].copy()

    logger.debug(
        f"RK4: {n_steps} steps of {dt:.3g} to t={t_max} "
        f"(config {config.configuration}, time-dependent={time_dependent})"
    )
    for k in range(n_steps):
        t = times[k]
        if time_dependent:
            H_mid = hamiltonian_at(config, t + 0.5 * dt)
            H_next = hamiltonian_at(config, t + dt)

        k1 = _lindblad_rhs(H_now, rho, mask, noise)
        k2 = _lindblad_rhs(H_mid, rho + 0.5 * dt * k1, mask, noise)
        k3 = _lindblad_rhs(H_mid, rho + 0.5 * dt * k2, mask, noise)
        k4 = _lindblad_rhs(H_next, rho + dt * k3, mask, noise)
        rho = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        rho = 0.5 * (rho + rho.conj().T)

        if check_invariants:
            _check_step(times[k + 1], rho)
        states[k + 1] = rho
        H_now = H_next

    return Trajectory(times=times, states=states, noise=noise)
