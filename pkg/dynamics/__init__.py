"""Dynamics module - Lindblad propagation, trajectories and efficiency"""
import logging

logger = logging.getLogger(__name__)

# Import and expose all public names
from .states import (
    InvariantBreach,
    initial_state,
    projector,
    check_density_matrix,
    subspace_population,
    trace_drift,
    hermiticity_drift,
    min_eigenvalue,
)

from .dissipators import (
    NoiseSpec,
    dephasing_mask,
    dephasing_dissipator,
    sink_dissipator,
)

from .trajectory import Trajectory, sink_efficiency

from .integrator import master_rhs, evolve, step_count

logger.debug("dynamics module loaded")
