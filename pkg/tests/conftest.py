"""Shared fixtures for the transport simulator tests"""
import numpy as np
import pytest

from analysis import scenario_network
from netmodel import DeformationSpec, build_network


def random_density_matrix(rng: np.random.Generator, dim: int = 5) -> np.ndarray:
    """Random full-rank density matrix (A A^dagger normalized)"""
    A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = A @ A.conj().T
    return rho / np.trace(rho).real


def random_hermitian(rng: np.random.Generator, dim: int = 5) -> np.ndarray:
    A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (A + A.conj().T)


def random_deformation(rng: np.random.Generator) -> DeformationSpec:
    return DeformationSpec(
        amplitude=rng.uniform(0.0, 0.3),
        omega0=rng.uniform(0.1, 3.0),
        phase=rng.uniform(0.0, 2 * np.pi),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def coherent_fixed():
    return build_network('A')


@pytest.fixture
def incoherent_fixed():
    return build_network('B')


@pytest.fixture
def antiphase_b():
    return scenario_network('antiphase', 'B')
