"""Dephasing and sink dissipators"""
import logging
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from netmodel import N_LEVELS, SINK_INDEX, site_index

logger = logging.getLogger(__name__)

SOURCE_INDEX = site_index(4)


class NoiseSpec(BaseModel):
    """Dephasing rates on sites 2 and 3 and the sink rate (units of J0)"""
    model_config = ConfigDict(frozen=True)

    gamma2: float = Field(default=0.0, ge=0.0)
    gamma3: float = Field(default=0.0, ge=0.0)
    Gamma: float = Field(default=0.0, ge=0.0)

    @classmethod
    def uniform(cls, gamma: float, Gamma: float) -> 'NoiseSpec':
        """gamma2 = gamma3 = gamma"""
        return cls(gamma2=gamma, gamma3=gamma, Gamma=Gamma)

    @classmethod
    def optimal_convention(cls, gamma: float) -> 'NoiseSpec':
        """gamma2 = gamma3 = gamma with Gamma = 2 gamma"""
        return cls(gamma2=gamma, gamma3=gamma, Gamma=2.0 * gamma)


@lru_cache(maxsize=128)
def dephasing_mask(noise: NoiseSpec) -> np.ndarray:
    """Entrywise factor D with L_deph(rho) = D * rho

    For n_i = |i><i|, gamma_i (2 n_i rho n_i - {n_i, rho}) scales entry (j, k)
    by -gamma_i for exactly one of j, k equal to i; populations are untouched.
    """
    rates = np.zeros(N_LEVELS)
    rates[site_index(2)] = noise.gamma2
    rates[site_index(3)] = noise.gamma3
    mask = -(rates[:, None] + rates[None, :])
    np.fill_diagonal(mask, 0.0)
    mask.flags.writeable = False
    return mask


def dephasing_dissipator(rho: np.ndarray, noise: NoiseSpec) -> np.ndarray:
    """Pure dephasing of sites 2 and 3 (Hermitian, traceless, zero diagonal)"""
    return dephasing_mask(noise) * rho


def sink_dissipator(rho: np.ndarray, noise: NoiseSpec) -> np.ndarray:
    """Irreversible decay |4> -> |sink> with jump operator |sink><4|

    The sink population grows at rate 2 Gamma rho_44.
    """
    out = np.zeros_like(rho, dtype=complex)
    if noise.Gamma == 0:
        return out
    G = noise.Gamma
    s = SOURCE_INDEX
    out[SINK_INDEX, SINK_INDEX] = 2.0 * G * rho[s, s]
    out[s, :] -= G * rho[s, :]
    out[:, s] -= G * rho[:, s]
    return out
