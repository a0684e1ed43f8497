"""Density-matrix helpers, validation and the invariant-breach error"""
import logging
from typing import Literal

import numpy as np

from netmodel import N_LEVELS, collective_basis, site_index

logger = logging.getLogger(__name__)

Subspace = Literal['H1', 'H2']

# Columns of the configuration-B collective basis spanning each subspace
_SUBSPACE_COLUMNS = {'H1': (0, 1), 'H2': (2, 3)}


class InvariantBreach(RuntimeError):
    """Raised when a propagated state leaves the physical set"""

    def __init__(self, time: float, kind: str, value: float):
        self.time = time
        self.kind = kind
        self.value = value
        super().__init__(f"{kind} breach at t={time:.6g}: {value:.3e}")


def initial_state(site: int = 1) -> np.ndarray:
    """Excitation localized on one site, |site><site|"""
    rho = np.zeros((N_LEVELS, N_LEVELS), dtype=complex)
    k = site_index(site)
    rho[k, k] = 1.0
    return rho


def projector(vectors: np.ndarray) -> np.ndarray:
    """Orthogonal projector onto the span of orthonormal columns"""
    return vectors @ vectors.conj().T


def trace_drift(rho: np.ndarray) -> float:
    return abs(np.trace(rho).real - 1.0)


def hermiticity_drift(rho: np.ndarray) -> float:
    return float(np.max(np.abs(rho - rho.conj().T)))


def min_eigenvalue(rho: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0])


def check_density_matrix(rho: np.ndarray, tol: float = 1e-8) -> tuple[bool, str]:
    """Validate shape, Hermiticity, unit trace and positivity

    Returns:
        (is_valid, error_message)
    """
    rho = np.asarray(rho)
    if rho.shape != (N_LEVELS, N_LEVELS):
        return False, f"expected a {N_LEVELS}x{N_LEVELS} matrix, got shape {rho.shape}"

    drift = hermiticity_drift(rho)
    if drift > tol:
        return False, f"not Hermitian (max |rho - rho^dagger| = {drift:.3e})"

    drift = trace_drift(rho)
    if drift > tol:
        return False, f"trace differs from 1 by {drift:.3e}"

    lowest = min_eigenvalue(rho)
    if lowest < -tol:
        return False, f"negative eigenvalue {lowest:.3e}"

    return True, ""


def subspace_population(rho: np.ndarray, which: Subspace) -> float:
    """Population tr(P rho P) of an invariant subspace of configuration B

    H1 = span{|s1>, |s1+>}, H2 = span{|s1->, |s2>}.
    """
    if which not in _SUBSPACE_COLUMNS:
        raise ValueError(f"unknown subspace {which!r}, expected 'H1' or 'H2'")
    U = collective_basis('B')
    P = projector(U[:, list(_SUBSPACE_COLUMNS[which])])
    return float(np.trace(P @ rho @ P).real)
