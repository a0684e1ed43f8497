"""Trajectories, derived population series and the sink-efficiency integral"""
import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.integrate import cumulative_trapezoid

from netmodel import N_SITES, SINK_INDEX, site_index
from .dissipators import NoiseSpec, SOURCE_INDEX

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Density-matrix snapshots on a uniform time grid

    Attributes:
        times: Grid t_0 = 0 .. t_max, shape (n,)
        states: Snapshots, shape (n, 5, 5)
        noise: Noise the trajectory was propagated with
    """
    times: np.ndarray
    states: np.ndarray
    noise: NoiseSpec

    def __post_init__(self):
        if self.states.shape[0] != self.times.shape[0]:
            raise ValueError(
                f"{self.states.shape[0]} snapshots for {self.times.shape[0]} grid times"
            )

    def __len__(self) -> int:
        return self.times.shape[0]

    @property
    def step(self) -> float:
        if len(self) < 2:
            return 0.0
        return float(self.times[1] - self.times[0])

    @property
    def t_max(self) -> float:
        return float(self.times[-1])

    @cached_property
    def populations(self) -> np.ndarray:
        """Diagonal of every snapshot, shape (n, 5)"""
        return np.real(np.diagonal(self.states, axis1=1, axis2=2)).copy()

    def population(self, site: int) -> np.ndarray:
        return self.populations[:, site_index(site)]

    @property
    def p_sink(self) -> np.ndarray:
        return self.populations[:, SINK_INDEX]

    @property
    def p_sites(self) -> np.ndarray:
        """Sum of the four site populations"""
        return self.populations[:, :N_SITES].sum(axis=1)

    @property
    def total(self) -> np.ndarray:
        return self.populations.sum(axis=1)

    @cached_property
    def eq10_efficiency(self) -> np.ndarray:
        return sink_efficiency(self, self.noise)

    @cached_property
    def min_eigenvalues(self) -> np.ndarray:
        hermitian = 0.5 * (self.states + np.conj(np.swapaxes(self.states, 1, 2)))
        return np.linalg.eigvalsh(hermitian)[:, 0]

    @property
    def trace_drift(self) -> np.ndarray:
        return np.abs(np.real(np.trace(self.states, axis1=1, axis2=2)) - 1.0)

    @property
    def hermiticity_drift(self) -> np.ndarray:
        diff = self.states - np.conj(np.swapaxes(self.states, 1, 2))
        return np.abs(diff).reshape(len(self), -1).max(axis=1)

    def index_at(self, t: float) -> int:
        """Index of the snapshot nearest to t"""
        return int(np.argmin(np.abs(self.times - t)))

    def value_at(self, series: np.ndarray, t: float) -> float:
        return float(series[self.index_at(t)])

    def diagnostics(self) -> dict:
        """Worst-case invariant figures over the whole trajectory"""
        sink_steps = np.diff(self.p_sink)
        return {
            'max_trace_drift': float(self.trace_drift.max()),
            'max_hermiticity_drift': float(self.hermiticity_drift.max()),
            'min_eigenvalue': float(self.min_eigenvalues.min()),
            'max_sink_decrease': float(max(0.0, -sink_steps.min())) if sink_steps.size else 0.0,
            'max_eq10_deviation': float(np.abs(self.eq10_efficiency - self.p_sink).max()),
        }


def sink_efficiency(traj: Trajectory, noise: NoiseSpec) -> np.ndarray:
    """P_sink(t) = 2 Gamma * integral of rho_44 (trapezoidal on the stored grid)"""
    if noise.Gamma == 0 or len(traj) < 2:
        return np.zeros(len(traj))
    rho44 = traj.populations[:, SOURCE_INDEX]
    return 2.0 * noise.Gamma * cumulative_trapezoid(rho44, traj.times, initial=0.0)
