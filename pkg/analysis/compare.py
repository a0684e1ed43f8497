"""Coherent (configuration A) versus incoherent (configuration B) transport"""
import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

import config
from dynamics import NoiseSpec, Trajectory
from .scenarios import run_scenario
from .sweep import SweepResult, gamma_sweep

logger = logging.getLogger(__name__)

Verdict = Literal['coherent-wins', 'incoherent-wins']

CROSSOVER_HOLD = 1.0  # incoherent lead must last this long to count


@dataclass(frozen=True, eq=False)
class TransportComparison:
    scenario: str
    coherent: Trajectory
    incoherent: Trajectory
    gamma: float
    gamma_source: Literal['sweep', 'fixed']
    sweep: SweepResult | None
    crossover_time: float | None
    persistent_time: float | None
    terminal_coherent: float
    terminal_incoherent: float

    @property
    def verdict(self) -> Verdict:
        if self.terminal_incoherent > self.terminal_coherent:
            return 'incoherent-wins'
        return 'coherent-wins'

    @property
    def advantage(self) -> float:
        """Terminal incoherent minus coherent sink population"""
        return self.terminal_incoherent - self.terminal_coherent


def find_crossover(times: np.ndarray, coherent: np.ndarray, incoherent: np.ndarray,
                   hold: float = CROSSOVER_HOLD) -> float | None:
    """First time the incoherent curve overtakes and leads for at least hold

    Returns:
        Crossover time, or None if no lead lasts long enough
    """
    ahead = (incoherent - coherent) > 0
    n = len(times)
    k = 1
    while k < n:
        if ahead[k] and not ahead[k - 1]:
            end = k
            while end + 1 < n and ahead[end + 1]:
                end += 1
            if times[end] - times[k] >= hold:
                return float(times[k])
            k = end + 1
        else:
            k += 1
    return None


def persistent_lead_time(times: np.ndarray, coherent: np.ndarray, incoherent: np.ndarray) -> float | None:
    """Last time at which incoherent <= coherent, if the incoherent curve leads afterwards

    The incoherent curve is strictly above the coherent one at every sampled
    time after the returned value. None when it does not finish ahead.
    """
    behind = np.nonzero((incoherent - coherent) <= 0)[0]
    if behind.size == 0:
        return float(times[0])
    last = behind[-1]
    if last == len(times) - 1:
        return None
    return float(times[last])


def compare_transport(
    scenario: str,
    t_max: float = config.DEFAULT_T_MAX,
    h: float = config.DEFAULT_STEP,
    reoptimize_gamma: bool = True,
    sink_rate: float = config.DEFAULT_SINK_RATE,
    t_eval: float = config.DEFAULT_T_EVAL,
    gamma_min: float = config.SWEEP_GAMMA_MIN,
    gamma_max: float = config.SWEEP_GAMMA_MAX,
    n_points: int = config.SWEEP_POINTS,
    resolution: float = config.SWEEP_RESOLUTION,
    omega: float = 0.0,
    **overrides,
) -> TransportComparison:
    """Run the coherent and the optimal incoherent transport for one scenario

    Configuration A runs without dephasing and with the shared sink rate;
    configuration B runs at gamma from a per-scenario sweep
    (reoptimize_gamma) or at GAMMA_OPT, with Gamma = 2 gamma.
    """
    coherent = run_scenario(scenario, 'A', NoiseSpec(Gamma=sink_rate), t_max, h, omega=omega, **overrides)

    sweep = None
    if reoptimize_gamma:
        sweep = gamma_sweep(
            scenario, gamma_min, gamma_max, n_points, t_eval, h,
            resolution=resolution, omega=omega, **overrides,
        )
        gamma = sweep.gamma_opt
    else:
        gamma = config.GAMMA_OPT

    incoherent = run_scenario(
        scenario, 'B', NoiseSpec.optimal_convention(gamma), t_max, h, omega=omega, **overrides
    )

    times = coherent.times
    crossover = find_crossover(times, coherent.p_sink, incoherent.p_sink)
    persistent = persistent_lead_time(times, coherent.p_sink, incoherent.p_sink)
    record = TransportComparison(
        scenario=scenario,
        coherent=coherent,
        incoherent=incoherent,
        gamma=gamma,
        gamma_source='sweep' if reoptimize_gamma else 'fixed',
        sweep=sweep,
        crossover_time=crossover,
        persistent_time=persistent,
        terminal_coherent=float(coherent.p_sink[-1]),
        terminal_incoherent=float(incoherent.p_sink[-1]),
    )
    logger.info(
        f"✅ {scenario}: coherent={record.terminal_coherent:.6f}, "
        f"incoherent={record.terminal_incoherent:.6f} (gamma={gamma:.4f}) -> {record.verdict}"
    )
    return record
