"""Deformation scenario presets and scenario runs"""
import logging
import math

from pydantic import BaseModel, ConfigDict

from config import DEFAULT_AMPLITUDE, DEFAULT_OMEGA0, DEFAULT_STEP
from dynamics import NoiseSpec, Trajectory, evolve, initial_state
from netmodel import Configuration, DeformationSpec, NetworkConfig, build_network

logger = logging.getLogger(__name__)

# Which edge pairs oscillate in each preset: (zeta1 pair, zeta2 pair)
SCENARIO_PAIRS = {
    'fixed': (False, False),
    'site1_osc': (True, False),
    'site4_osc': (False, True),
    'antiphase': (True, True),
    'inphase': (True, True),
}
SCENARIOS = tuple(SCENARIO_PAIRS)


class Scenario(BaseModel):
    """Named assignment of deformations to the two edge pairs"""
    model_config = ConfigDict(frozen=True)

    name: str
    zeta1: DeformationSpec | None = None
    zeta2: DeformationSpec | None = None


def default_phase2(name: str, phase1: float = 0.0) -> float:
    """Phase of the zeta2 pair when not given explicitly

    antiphase trails the zeta1 pair by pi, inphase follows it and a lone
    site-4 oscillation starts at zero phase.
    """
    if name == 'antiphase':
        return phase1 + math.pi
    if name == 'inphase':
        return phase1
    return 0.0


def get_scenario(
    name: str,
    amplitude: float = DEFAULT_AMPLITUDE,
    omega0: float = DEFAULT_OMEGA0,
    phase1: float = 0.0,
    phase2: float | None = None,
) -> Scenario:
    """Build a preset scenario, optionally overriding a, omega0 and phases

    Raises:
        ValueError: For an unknown scenario name or out-of-range amplitude
    """
    if name not in SCENARIO_PAIRS:
        raise ValueError(f"unknown scenario {name!r}, expected one of {', '.join(SCENARIOS)}")

    if phase2 is None:
        phase2 = default_phase2(name, phase1)

    deform1, deform2 = SCENARIO_PAIRS[name]
    return Scenario(
        name=name,
        zeta1=DeformationSpec(amplitude=amplitude, omega0=omega0, phase=phase1) if deform1 else None,
        zeta2=DeformationSpec(amplitude=amplitude, omega0=omega0, phase=phase2) if deform2 else None,
    )


def scenario_network(
    name: str,
    configuration: Configuration,
    omega: float = 0.0,
    **overrides,
) -> NetworkConfig:
    """NetworkConfig for a preset under configuration A or B"""
    scenario = get_scenario(name, **overrides)
    return build_network(configuration, scenario.zeta1, scenario.zeta2, omega=omega)


def run_scenario(
    name: str,
    configuration: Configuration,
    noise: NoiseSpec,
    t_max: float,
    h: float = DEFAULT_STEP,
    omega: float = 0.0,
    **overrides,
) -> Trajectory:
    """Evolve rho(0) = |1><1| through a preset scenario

    Args:
        name: Scenario name (fixed, site1_osc, site4_osc, antiphase, inphase)
        configuration: 'A' or 'B'
        noise: Dephasing and sink rates
        t_max: Final time
        h: RK4 step
        omega: Common site frequency
        **overrides: amplitude, omega0, phase1, phase2

    Returns:
        Trajectory: Full snapshot series
    """
    network = scenario_network(name, configuration, omega=omega, **overrides)
    logger.debug(f"🔬 Scenario {name}/{configuration}: gamma=({noise.gamma2}, {noise.gamma3}), Gamma={noise.Gamma}")
    return evolve(network, noise, initial_state(1), t_max, h)
