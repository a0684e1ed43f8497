import math

import numpy as np
import pytest
from pydantic import ValidationError

from analysis import scenario_network
from netmodel import (
    DeformationSpec, Edge, NetworkConfig, build_network, collective_basis,
    coupling_at, coupling_series, four_site_block, hamiltonian_at, to_chain_basis,
    to_split_basis, transform_hamiltonian, zeta_at,
)
from tests.conftest import random_deformation

SQRT2 = math.sqrt(2.0)
QUARTER = DeformationSpec(amplitude=0.25, omega0=1.0, phase=0.0)


class TestCouplingAt:
    def test_undeformed_edge_is_constant(self):
        edge = Edge(i=1, j=2)
        for t in (0.0, 0.7, 13.0):
            assert coupling_at(edge, t) == 1.0

    def test_zero_phase_start(self):
        assert coupling_at(Edge(i=1, j=2, deformation=QUARTER), 0.0) == pytest.approx(1.0)

    def test_peak_compression(self):
        assert coupling_at(Edge(i=1, j=2, deformation=QUARTER), math.pi / 2) == pytest.approx(8.0)

    def test_negative_edge_at_peak_stretch(self):
        edge = Edge(i=3, j=4, sign=-1, deformation=QUARTER)
        assert coupling_at(edge, 3 * math.pi / 2) == pytest.approx(-1 / 1.5 ** 3, abs=1e-6)

    @pytest.mark.parametrize('omega0', [0.5, 1.0, 2.0])
    def test_periodicity(self, rng, omega0):
        deformation = DeformationSpec(amplitude=0.25, omega0=omega0, phase=0.4)
        edge = Edge(i=2, j=4, deformation=deformation)
        for t in rng.uniform(0, 10, size=20):
            assert abs(coupling_at(edge, t) - coupling_at(edge, t + deformation.period)) < 1e-12

    def test_sign_never_flips(self, rng):
        deformation = DeformationSpec(amplitude=0.49, omega0=2.0, phase=0.3)
        for sign in (-1, 1):
            edge = Edge(i=3, j=4, sign=sign, deformation=deformation)
            values = np.array([coupling_at(edge, t) for t in rng.uniform(0, 20, size=200)])
            assert np.all(np.sign(values) == sign)


class TestTypes:
    def test_amplitude_must_stay_below_half(self):
        with pytest.raises(ValidationError):
            DeformationSpec(amplitude=0.5, omega0=1.0)

    def test_negative_frequency_rejected(self):
        with pytest.raises(ValidationError):
            DeformationSpec(amplitude=0.1, omega0=-1.0)

    def test_edge_endpoints_are_ordered(self):
        edge = Edge(i=4, j=2)
        assert edge.key == (2, 4)

    def test_self_loop_rejected(self):
        with pytest.raises(ValidationError):
            Edge(i=3, j=3)

    def test_nonpositive_coupling_rejected(self):
        with pytest.raises(ValidationError):
            Edge(i=1, j=2, base_coupling=0.0)

    def test_configuration_sign_mismatch_rejected(self):
        edges = tuple(Edge(i=i, j=j) for i, j in ((1, 2), (1, 3), (2, 4), (3, 4)))
        NetworkConfig(edges=edges, configuration='A')
        with pytest.raises(ValidationError, match='sign'):
            NetworkConfig(edges=edges, configuration='B')

    def test_missing_edge_rejected(self):
        edges = tuple(Edge(i=i, j=j) for i, j in ((1, 2), (1, 3), (2, 4), (1, 4)))
        with pytest.raises(ValidationError):
            NetworkConfig(edges=edges, configuration='A')

    def test_paired_edges_must_share_deformation(self):
        edges = (
            Edge(i=1, j=2, deformation=QUARTER),
            Edge(i=1, j=3),
            Edge(i=2, j=4),
            Edge(i=3, j=4),
        )
        with pytest.raises(ValidationError, match='share'):
            NetworkConfig(edges=edges, configuration='A')

    def test_build_network_rejects_unknown_configuration(self):
        with pytest.raises(ValueError):
            build_network('C')

    def test_time_dependence_flag(self):
        assert not build_network('A').is_time_dependent
        assert build_network('B', QUARTER).is_time_dependent


class TestHamiltonian:
    def test_configuration_a_spectrum(self, coherent_fixed):
        block = four_site_block(hamiltonian_at(coherent_fixed, 0.0))
        for i, j in ((0, 1), (0, 2), (1, 3), (2, 3)):
            assert block[i, j] == 1.0
        np.testing.assert_allclose(np.linalg.eigvalsh(block), [-2, 0, 0, 2], atol=1e-12)

    def test_configuration_b_spectrum(self, incoherent_fixed):
        block = four_site_block(hamiltonian_at(incoherent_fixed, 0.0))
        np.testing.assert_allclose(
            np.linalg.eigvalsh(block), [-SQRT2, -SQRT2, SQRT2, SQRT2], atol=1e-12
        )

    def test_site_frequency_on_diagonal(self):
        H = hamiltonian_at(build_network('A', omega=5.0), 0.0)
        np.testing.assert_array_equal(np.diag(H).real, [5, 5, 5, 5, 0])

    @pytest.mark.parametrize('configuration', ['A', 'B'])
    def test_hermitian_with_isolated_sink(self, rng, configuration):
        network = scenario_network('antiphase', configuration, omega=1.3)
        for t in rng.uniform(0, 50, size=25):
            H = hamiltonian_at(network, t)
            np.testing.assert_array_equal(H, H.conj().T)
            assert np.all(H[4, :] == 0) and np.all(H[:, 4] == 0)
            assert np.all(H.imag == 0)

    def test_paired_edges_stay_equal(self, rng):
        network = build_network('B', random_deformation(rng), random_deformation(rng))
        for t in rng.uniform(0, 20, size=30):
            H = hamiltonian_at(network, t)
            assert abs(H[0, 1]) == abs(H[0, 2])
            assert abs(H[1, 3]) == abs(H[2, 3])

    def test_zeta_series(self):
        network = build_network('A', QUARTER)
        zeta1, zeta2 = coupling_series(network, [0.0, math.pi / 2])
        np.testing.assert_allclose(zeta1, [1.0, 8.0])
        np.testing.assert_allclose(zeta2, [1.0, 1.0])
        assert zeta_at(network, math.pi / 2) == pytest.approx((8.0, 1.0))


class TestCollectiveBases:
    @pytest.mark.parametrize('configuration', ['A', 'B'])
    def test_basis_is_unitary(self, configuration):
        U = collective_basis(configuration)
        np.testing.assert_allclose(U.conj().T @ U, np.eye(5), atol=1e-15)

    def test_chain_of_fixed_network(self, coherent_fixed):
        chain = to_chain_basis(coherent_fixed, 0.0)
        assert chain.shape == (3, 3)
        np.testing.assert_allclose([chain[0, 1], chain[1, 2]], [SQRT2, SQRT2], atol=1e-12)
        assert abs(chain[0, 2]) < 1e-12

    def test_chain_with_site1_oscillation(self):
        chain = to_chain_basis(build_network('A', QUARTER), math.pi / 2)
        np.testing.assert_allclose([chain[0, 1], chain[1, 2]], [SQRT2 * 8, SQRT2], atol=1e-12)

    def test_chain_without_deformation_amplitude(self, coherent_fixed):
        flat = DeformationSpec(amplitude=0.0, omega0=1.0)
        np.testing.assert_allclose(
            to_chain_basis(build_network('A', flat, flat), 2.1),
            to_chain_basis(coherent_fixed, 2.1),
            atol=1e-15,
        )

    def test_chain_rejects_configuration_b(self, incoherent_fixed):
        with pytest.raises(ValueError, match='configuration A'):
            to_chain_basis(incoherent_fixed, 0.0)

    def test_split_of_fixed_network(self, incoherent_fixed):
        H1, H2 = to_split_basis(incoherent_fixed, 0.0)
        np.testing.assert_allclose([H1[0, 1], H2[0, 1]], [SQRT2, SQRT2], atol=1e-12)

    def test_split_with_antiphase_deformation(self, antiphase_b):
        H1, H2 = to_split_basis(antiphase_b, math.pi / 2)
        np.testing.assert_allclose(H1[0, 1], SQRT2 * 8, atol=1e-12)
        np.testing.assert_allclose(H2[0, 1], SQRT2 * 8 / 27, atol=1e-12)

    def test_split_has_no_cross_block_terms(self, rng, antiphase_b):
        for t in rng.uniform(0, 40, size=20):
            transformed = transform_hamiltonian(antiphase_b, t)
            assert np.abs(transformed[0:2, 2:5]).max() < 1e-12
            assert np.abs(transformed[2:5, 0:2]).max() < 1e-12

    def test_split_rejects_configuration_a(self, coherent_fixed):
        with pytest.raises(ValueError, match='configuration B'):
            to_split_basis(coherent_fixed, 0.0)

    @pytest.mark.parametrize('configuration', ['A', 'B'])
    def test_transform_preserves_spectrum(self, rng, configuration):
        for _ in range(50):
            omega = rng.uniform(-2, 2)
            network = build_network(
                configuration, random_deformation(rng), random_deformation(rng), omega=omega
            )
            t = rng.uniform(0, 30)
            expected = np.linalg.eigvalsh(four_site_block(hamiltonian_at(network, t)))
            if configuration == 'A':
                reduced = np.append(np.linalg.eigvalsh(to_chain_basis(network, t)), omega)
            else:
                H1, H2 = to_split_basis(network, t)
                reduced = np.concatenate([np.linalg.eigvalsh(H1), np.linalg.eigvalsh(H2)])
            np.testing.assert_allclose(np.sort(reduced), expected, atol=1e-10)
