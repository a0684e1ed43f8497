"""End-to-end transport orderings at the default step and horizon"""
import numpy as np
import pytest

from analysis import compare_transport, gamma_sweep

pytestmark = pytest.mark.slow

T_FINAL = 20.0


@pytest.fixture(scope='module')
def comparisons():
    return {
        name: compare_transport(name, t_max=T_FINAL, n_points=15, resolution=0.02)
        for name in ('fixed', 'site1_osc', 'antiphase', 'inphase')
    }


def test_optimal_dephasing_rate():
    result = gamma_sweep('fixed', 0.2, 3.0, 29, t_eval=T_FINAL, resolution=0.01)
    assert 0.90 <= result.gamma_opt <= 1.20
    assert result.t_eval == T_FINAL
    assert np.abs(np.diff(result.efficiencies)).max() < 0.2


def test_optimal_incoherent_transport_reaches_sink(comparisons):
    for record in comparisons.values():
        assert record.sweep.efficiency_opt > 0.1


def test_fixed_network_favours_coherent_transport(comparisons):
    record = comparisons['fixed']
    assert np.all(record.coherent.p_sink >= record.incoherent.p_sink)
    assert record.terminal_coherent > record.terminal_incoherent
    assert record.crossover_time is None
    assert record.persistent_time is None
    assert record.verdict == 'coherent-wins'


def test_antiphase_gives_persistent_incoherent_lead(comparisons):
    record = comparisons['antiphase']
    lead_after = record.persistent_time
    assert lead_after is not None and lead_after <= T_FINAL
    later = record.coherent.times > lead_after
    assert np.all(record.incoherent.p_sink[later] > record.coherent.p_sink[later])
    assert record.verdict == 'incoherent-wins'


def test_site1_oscillation_narrows_coherent_lead(comparisons):
    # Configuration A nearly fills the sink by T_FINAL at Gamma = 2.1, so the
    # incoherent curve closes the gap without overtaking
    record = comparisons['site1_osc']
    assert record.crossover_time is None
    assert record.persistent_time is None
    assert record.verdict == 'coherent-wins'
    gap_midway = (record.incoherent.value_at(record.incoherent.p_sink, T_FINAL / 2)
                  - record.coherent.value_at(record.coherent.p_sink, T_FINAL / 2))
    assert gap_midway < record.advantage < 0
    assert record.advantage > -0.05


def test_antiphase_advantage_exceeds_site1(comparisons):
    assert comparisons['antiphase'].advantage > comparisons['site1_osc'].advantage


def test_inphase_keeps_coherent_ahead(comparisons):
    record = comparisons['inphase']
    assert record.crossover_time is None
    assert record.persistent_time is None
    assert record.terminal_coherent > record.terminal_incoherent
