"""Network model - diamond topology, deformations and Hamiltonians"""
import logging

logger = logging.getLogger(__name__)

# Import and expose all public names
from .deformation import DeformationSpec

from .topology import (
    Configuration,
    Edge,
    NetworkConfig,
    build_network,
    EDGE_KEYS,
    ZETA1_PAIR,
    ZETA2_PAIR,
    CONFIGURATION_SIGNS,
)

from .hamiltonian import (
    coupling_at,
    zeta_at,
    coupling_series,
    hamiltonian_at,
    four_site_block,
    collective_basis,
    transform_hamiltonian,
    to_chain_basis,
    to_split_basis,
    site_index,
    N_LEVELS,
    N_SITES,
    SINK_INDEX,
)

logger.debug("netmodel module loaded")
