"""Single-excitation Hamiltonian and the collective-basis transforms"""
import logging
import math

import numpy as np

from .topology import Edge, NetworkConfig, ZETA1_PAIR, ZETA2_PAIR

logger = logging.getLogger(__name__)

# Basis ordering: |1>, |2>, |3>, |4>, |sink>
N_LEVELS = 5
N_SITES = 4
SINK_INDEX = 4

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def site_index(site: int) -> int:
    """Matrix index of a site label 1..4"""
    if not 1 <= site <= N_SITES:
        raise ValueError(f"site must be in 1..{N_SITES}, got {site}")
    return site - 1


def coupling_at(edge: Edge, t: float) -> float:
    """Signed coupling of an edge at time t (units of J0)

    Examples:
        undeformed, base 1, sign +1 -> 1.0
        a=1/4, omega0=1, phase 0, t=pi/2 -> 8.0
    """
    value = edge.sign * edge.base_coupling
    if edge.deformation is None:
        return value
    return value * edge.deformation.coupling_factor(t)


def zeta_at(config: NetworkConfig, t: float) -> tuple[float, float]:
    """Coupling magnitudes (zeta1, zeta2) of the two edge pairs"""
    return (
        abs(coupling_at(config.edge(*ZETA1_PAIR[0]), t)),
        abs(coupling_at(config.edge(*ZETA2_PAIR[0]), t)),
    )


def coupling_series(config: NetworkConfig, times) -> tuple[np.ndarray, np.ndarray]:
    """zeta1(t) and zeta2(t) sampled on a time grid"""
    values = np.array([zeta_at(config, float(t)) for t in np.asarray(times, dtype=float)])
    if values.size == 0:
        return np.empty(0), np.empty(0)
    return values[:, 0], values[:, 1]


def hamiltonian_at(config: NetworkConfig, t: float) -> np.ndarray:
    """5x5 Hamiltonian over {|1>..|4>, |sink>} with hbar = 1

    The sink row and column stay zero; the sink is reached only through
    the dissipative channel.
    """
    H = np.zeros((N_LEVELS, N_LEVELS), dtype=complex)
    for k in range(N_SITES):
        H[k, k] = config.omega
    for edge in config.edges:
        a, b = site_index(edge.i), site_index(edge.j)
        value = coupling_at(edge, t)
        H[a, b] = value
        H[b, a] = value
    return H


def four_site_block(H: np.ndarray) -> np.ndarray:
    """Site block of a 5x5 operator (sink removed)"""
    return H[:N_SITES, :N_SITES]


def collective_basis(configuration: str) -> np.ndarray:
    """Unitary whose columns are the collective states

    Configuration A columns: |s1>=|1>, |s2>=(|2>+|3>)/sqrt2, |s3>=|4>,
    the decoupled (|2>-|3>)/sqrt2, |sink>.

    Configuration B columns: |s1>=|1>, |s1+>=(|2>+|3>)/sqrt2,
    |s1->=(|2>-|3>)/sqrt2, |s2>=|4>, |sink>.
    """
    U = np.zeros((N_LEVELS, N_LEVELS), dtype=complex)
    plus = np.array([0, _INV_SQRT2, _INV_SQRT2, 0, 0])
    minus = np.array([0, _INV_SQRT2, -_INV_SQRT2, 0, 0])
    U[0, 0] = 1.0
    U[:, 1] = plus
    U[SINK_INDEX, 4] = 1.0
    if configuration == 'A':
        U[3, 2] = 1.0
        U[:, 3] = minus
    elif configuration == 'B':
        U[:, 2] = minus
        U[3, 3] = 1.0
    else:
        raise ValueError(f"unknown configuration {configuration!r}, expected 'A' or 'B'")
    return U


def transform_hamiltonian(config: NetworkConfig, t: float) -> np.ndarray:
    """H(t) expressed in the collective basis of its configuration"""
    U = collective_basis(config.configuration)
    return U.conj().T @ hamiltonian_at(config, t) @ U


def to_chain_basis(config: NetworkConfig, t: float) -> np.ndarray:
    """Three-site chain Hamiltonian over {|s1>, |s2>, |s3>}

    Off-diagonals are sqrt2*zeta1 (s1-s2) and sqrt2*zeta2 (s2-s3).

    Raises:
        ValueError: If the network is not configuration A
    """
    if config.configuration != 'A':
        raise ValueError(
            f"chain reduction needs configuration A, got {config.configuration}; "
            "use to_split_basis for configuration B"
        )
    return transform_hamiltonian(config, t)[:3, :3]


def to_split_basis(config: NetworkConfig, t: float) -> tuple[np.ndarray, np.ndarray]:
    """Invariant-subspace blocks (H1 over {|s1>,|s1+>}, H2 over {|s1->,|s2>})

    Raises:
        ValueError: If the network is not configuration B
    """
    if config.configuration != 'B':
        raise ValueError(
            f"invariant-subspace split needs configuration B, got {config.configuration}; "
            "use to_chain_basis for configuration A"
        )
    transformed = transform_hamiltonian(config, t)
    return transformed[0:2, 0:2], transformed[2:4, 2:4]
