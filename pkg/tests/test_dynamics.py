import math

import numpy as np
import pytest

from analysis import SCENARIOS, run_scenario, scenario_network
from dynamics import (
    InvariantBreach, NoiseSpec, check_density_matrix, dephasing_dissipator, evolve,
    initial_state, master_rhs, sink_dissipator, sink_efficiency, subspace_population,
)
from netmodel import collective_basis, hamiltonian_at
from tests.conftest import random_density_matrix

NOISY = NoiseSpec.uniform(1.05, 2.1)


def outer(vector: np.ndarray) -> np.ndarray:
    return np.outer(vector, vector.conj())


class TestNoiseSpec:
    def test_rates_must_be_non_negative(self):
        with pytest.raises(ValueError):
            NoiseSpec(gamma2=-0.1)

    def test_optimal_convention_doubles_sink_rate(self):
        noise = NoiseSpec.optimal_convention(1.05)
        assert (noise.gamma2, noise.gamma3, noise.Gamma) == (1.05, 1.05, 2.1)


class TestDephasingDissipator:
    def test_localized_state_untouched(self):
        out = dephasing_dissipator(initial_state(1), NoiseSpec.uniform(3.0, 0.0))
        assert np.all(out == 0)

    def test_site_coherence_decays(self):
        rho = np.zeros((5, 5), dtype=complex)
        rho[1, 2] = 1.0
        out = dephasing_dissipator(rho, NoiseSpec.uniform(1.0, 0.0))
        assert out[1, 2] == -2.0
        out[1, 2] = 0
        assert np.all(out == 0)

    def test_populations_preserved(self, rng):
        rho = np.diag(rng.dirichlet(np.ones(5))).astype(complex)
        assert np.all(dephasing_dissipator(rho, NoiseSpec(gamma2=0.7, gamma3=1.9)) == 0)

    def test_unequal_rates(self):
        rho = np.zeros((5, 5), dtype=complex)
        rho[0, 1] = rho[1, 0] = 0.5
        rho[0, 2] = rho[2, 0] = 0.5
        out = dephasing_dissipator(rho, NoiseSpec(gamma2=1.0, gamma3=3.0))
        assert out[0, 1] == pytest.approx(-0.5)
        assert out[0, 2] == pytest.approx(-1.5)


class TestSinkDissipator:
    def test_transfer_from_site_4(self):
        out = sink_dissipator(initial_state(4), NoiseSpec(Gamma=1.0))
        assert out[3, 3] == -2.0
        assert out[4, 4] == 2.0

    def test_empty_source_gives_nothing(self):
        rho = np.zeros((5, 5), dtype=complex)
        rho[0, 0] = rho[1, 1] = 0.5
        rho[0, 1] = rho[1, 0] = 0.3
        assert np.all(sink_dissipator(rho, NoiseSpec(Gamma=2.1)) == 0)

    def test_traceless(self, rng):
        for _ in range(20):
            out = sink_dissipator(random_density_matrix(rng), NoiseSpec(Gamma=rng.uniform(0, 5)))
            assert abs(np.trace(out)) < 1e-12
            np.testing.assert_allclose(out, out.conj().T, atol=1e-15)


class TestMasterRhs:
    def test_noiseless_is_pure_commutator(self, rng, antiphase_b):
        rho = random_density_matrix(rng)
        H = hamiltonian_at(antiphase_b, 0.8)
        np.testing.assert_allclose(
            master_rhs(0.8, rho, antiphase_b, NoiseSpec()), -1j * (H @ rho - rho @ H), atol=1e-14
        )

    def test_first_hop_from_site_1(self, coherent_fixed):
        out = master_rhs(0.0, initial_state(1), coherent_fixed, NoiseSpec())
        expected = np.zeros((5, 5), dtype=complex)
        expected[0, 1] = expected[0, 2] = 1j
        expected[1, 0] = expected[2, 0] = -1j
        np.testing.assert_allclose(out, expected, atol=1e-15)

    @pytest.mark.parametrize('configuration', ['A', 'B'])
    def test_trace_and_hermiticity(self, rng, configuration):
        network = scenario_network('site1_osc', configuration)
        for _ in range(20):
            out = master_rhs(rng.uniform(0, 10), random_density_matrix(rng), network, NOISY)
            assert abs(np.trace(out)) < 1e-12
            np.testing.assert_allclose(out, out.conj().T, atol=1e-13)


class TestDensityMatrixHelpers:
    def test_valid_state(self):
        assert check_density_matrix(initial_state(1)) == (True, "")

    @pytest.mark.parametrize('rho, reason', [
        (np.zeros((4, 4)), 'shape'),
        (np.eye(5) / 5 + np.triu(np.ones((5, 5)), 1) * 0.1, 'Hermitian'),
        (np.eye(5) / 4, 'trace'),
        (np.diag([1.2, -0.2, 0, 0, 0]), 'negative'),
    ])
    def test_invalid_states(self, rho, reason):
        is_valid, error_msg = check_density_matrix(rho)
        assert not is_valid
        assert reason in error_msg

    def test_initial_state_lives_in_h1(self):
        rho = initial_state(1)
        assert subspace_population(rho, 'H1') == pytest.approx(1.0)
        assert subspace_population(rho, 'H2') == pytest.approx(0.0, abs=1e-15)

    def test_antisymmetric_state_lives_in_h2(self):
        rho = outer(collective_basis('B')[:, 2])
        assert subspace_population(rho, 'H2') == pytest.approx(1.0)

    def test_unknown_subspace(self):
        with pytest.raises(ValueError):
            subspace_population(initial_state(1), 'H3')


class TestEvolve:
    def test_coherent_chain_law(self, coherent_fixed):
        traj = evolve(coherent_fixed, NoiseSpec(), initial_state(1), 2 * math.pi, 1e-3)
        t = traj.times
        assert np.abs(traj.population(4) - np.sin(t) ** 4).max() < 1e-6
        assert np.abs(traj.population(1) - np.cos(t) ** 4).max() < 1e-6

    def test_dark_subspace_blocks_transport(self, incoherent_fixed):
        traj = evolve(incoherent_fixed, NoiseSpec(Gamma=2.1), initial_state(1), 50.0, 1e-3)
        assert np.abs(traj.p_sink).max() < 1e-9
        h2 = [subspace_population(rho, 'H2') for rho in traj.states[::10]]
        assert max(h2) < 1e-10

    def test_zero_duration(self, incoherent_fixed):
        traj = evolve(incoherent_fixed, NOISY, initial_state(1), 0.0)
        assert len(traj) == 1
        np.testing.assert_array_equal(traj.states[0], initial_state(1))

    def test_grid_lands_on_t_max(self, incoherent_fixed):
        traj = evolve(incoherent_fixed, NOISY, initial_state(1), 1.0, 0.003)
        assert traj.times[-1] == 1.0
        assert np.allclose(np.diff(traj.times), traj.step)

    def test_rejects_invalid_initial_state(self, incoherent_fixed):
        with pytest.raises(ValueError, match='initial state'):
            evolve(incoherent_fixed, NOISY, np.eye(5), 1.0)

    @pytest.mark.parametrize('t_max, h', [(1.0, 0.0), (-1.0, 1e-3)])
    def test_rejects_bad_grid(self, incoherent_fixed, t_max, h):
        with pytest.raises(ValueError):
            evolve(incoherent_fixed, NOISY, initial_state(1), t_max, h)

    def test_unstable_step_reports_breach(self, coherent_fixed):
        with pytest.raises(InvariantBreach) as excinfo:
            evolve(coherent_fixed, NoiseSpec(Gamma=50.0), initial_state(4), 10.0, 0.5)
        assert excinfo.value.time > 0
        assert excinfo.value.kind in ('trace', 'negativity')

    @pytest.mark.parametrize('configuration', ['A', 'B'])
    @pytest.mark.parametrize('scenario', SCENARIOS)
    def test_conservation(self, scenario, configuration):
        noise = NoiseSpec(Gamma=2.1) if configuration == 'A' else NOISY
        traj = run_scenario(scenario, configuration, noise, 10.0)
        report = traj.diagnostics()
        assert report['max_trace_drift'] < 1e-8
        assert report['max_hermiticity_drift'] < 1e-8
        assert report['min_eigenvalue'] >= -1e-8
        assert np.diff(traj.p_sink).min() >= -1e-12

    def test_site_frequency_is_a_global_phase(self):
        base = run_scenario('antiphase', 'B', NOISY, 5.0, omega=0.0)
        shifted = run_scenario('antiphase', 'B', NOISY, 5.0, omega=7.3)
        assert np.abs(base.populations - shifted.populations).max() < 1e-9

    def test_fourth_order_step_halving(self, antiphase_b):
        finals = [
            evolve(antiphase_b, NOISY, initial_state(1), 5.0, h, check_invariants=False).states[-1]
            for h in (0.02, 0.01, 0.005)
        ]
        coarse = np.abs(finals[0] - finals[1]).max()
        fine = np.abs(finals[1] - finals[2]).max()
        assert 8.0 < coarse / fine < 24.0


class TestSinkEfficiency:
    def test_no_sink_rate(self, incoherent_fixed):
        traj = evolve(incoherent_fixed, NoiseSpec.uniform(1.0, 0.0), initial_state(1), 2.0)
        assert np.all(sink_efficiency(traj, traj.noise) == 0)

    @pytest.mark.slow
    @pytest.mark.parametrize('configuration', ['A', 'B'])
    @pytest.mark.parametrize('scenario', SCENARIOS)
    def test_matches_direct_sink_population(self, scenario, configuration):
        noise = NoiseSpec(Gamma=2.1) if configuration == 'A' else NOISY
        traj = run_scenario(scenario, configuration, noise, 20.0)
        assert abs(traj.eq10_efficiency[-1] - traj.p_sink[-1]) < 1e-5

    def test_empty_source_site(self, incoherent_fixed):
        traj = evolve(incoherent_fixed, NoiseSpec(Gamma=2.1), initial_state(1), 5.0)
        assert np.abs(sink_efficiency(traj, traj.noise)).max() < 1e-12

    def test_site_population_complements_sink(self, incoherent_fixed):
        traj = evolve(incoherent_fixed, NOISY, initial_state(1), 5.0)
        np.testing.assert_allclose(traj.p_sites + traj.p_sink, 1.0, atol=1e-10)
        assert traj.value_at(traj.p_sink, 5.0) == traj.p_sink[-1]
