"""Analysis module - scenario presets, dephasing optimization and comparisons"""
import logging

logger = logging.getLogger(__name__)

# Import and expose all public names
from .scenarios import (
    Scenario,
    SCENARIOS,
    get_scenario,
    default_phase2,
    scenario_network,
    run_scenario,
)

from .optimize import golden_section_max

from .sweep import SweepResult, gamma_sweep, incoherent_efficiency

from .compare import (
    TransportComparison,
    compare_transport,
    find_crossover,
    persistent_lead_time,
    CROSSOVER_HOLD,
)

logger.debug("analysis module loaded")
