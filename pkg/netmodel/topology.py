"""Four-site diamond network: edges, signs and the paired-edge rule"""
import logging
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .deformation import DeformationSpec

logger = logging.getLogger(__name__)

Configuration = Literal['A', 'B']

# Diamond edges; (1,2)&(1,3) carry zeta1, (2,4)&(3,4) carry zeta2
EDGE_KEYS = ((1, 2), (1, 3), (2, 4), (3, 4))
ZETA1_PAIR = ((1, 2), (1, 3))
ZETA2_PAIR = ((2, 4), (3, 4))
SINK_SOURCE = 4

# Coupling signs per configuration: A is all-plus, B flips J34
CONFIGURATION_SIGNS = {
    'A': {(1, 2): 1, (1, 3): 1, (2, 4): 1, (3, 4): 1},
    'B': {(1, 2): 1, (1, 3): 1, (2, 4): 1, (3, 4): -1},
}


class Edge(BaseModel):
    """Coupling between sites i and j (unordered, stored with i < j)"""
    model_config = ConfigDict(frozen=True)

    i: int = Field(ge=1, le=4)
    j: int = Field(ge=1, le=4)
    sign: Literal[-1, 1] = 1
    base_coupling: float = Field(default=1.0, gt=0.0)
    deformation: DeformationSpec | None = None

    @model_validator(mode='before')
    @classmethod
    def _order_sites(cls, data):
        if isinstance(data, dict) and 'i' in data and 'j' in data:
            i, j = data['i'], data['j']
            if isinstance(i, int) and isinstance(j, int) and i > j:
                data = {**data, 'i': j, 'j': i}
        return data

    @model_validator(mode='after')
    def _check_distinct(self):
        if self.i == self.j:
            raise ValueError(f"edge endpoints must differ, got ({self.i}, {self.j})")
        return self

    @property
    def key(self) -> tuple[int, int]:
        return (self.i, self.j)


class NetworkConfig(BaseModel):
    """Sites, signed (possibly deformed) edges and the sink attachment"""
    model_config = ConfigDict(frozen=True)

    omega: float = 0.0  # common site frequency; a global shift in this sector
    edges: tuple[Edge, ...]
    sink_source: Literal[4] = SINK_SOURCE
    configuration: Configuration

    @model_validator(mode='after')
    def _check_topology(self):
        keys = [edge.key for edge in self.edges]
        if len(keys) != 4 or set(keys) != set(EDGE_KEYS):
            raise ValueError(f"network needs exactly the edges {EDGE_KEYS}, got {tuple(keys)}")

        expected = CONFIGURATION_SIGNS[self.configuration]
        for edge in self.edges:
            if edge.sign != expected[edge.key]:
                raise ValueError(
                    f"configuration {self.configuration} requires sign {expected[edge.key]:+d} "
                    f"on edge {edge.key}, got {edge.sign:+d}"
                )

        # zeta condition: paired edges must move together
        for first, second in (ZETA1_PAIR, ZETA2_PAIR):
            a, b = self.edge(*first), self.edge(*second)
            if a.deformation != b.deformation or a.base_coupling != b.base_coupling:
                raise ValueError(f"edges {first} and {second} must share coupling and deformation")
        return self

    def edge(self, i: int, j: int) -> Edge:
        key = (min(i, j), max(i, j))
        for edge in self.edges:
            if edge.key == key:
                return edge
        raise KeyError(f"no edge {key}")

    @property
    def is_time_dependent(self) -> bool:
        return any(
            edge.deformation is not None and edge.deformation.omega0 > 0
            for edge in self.edges
        )


def build_network(
    configuration: Configuration,
    zeta1_deformation: DeformationSpec | None = None,
    zeta2_deformation: DeformationSpec | None = None,
    omega: float = 0.0,
    base_coupling: float = 1.0,
) -> NetworkConfig:
    """Build a diamond network from the two edge-pair deformations

    Args:
        configuration: 'A' (all couplings positive) or 'B' (J34 negative)
        zeta1_deformation: Deformation shared by edges (1,2) and (1,3)
        zeta2_deformation: Deformation shared by edges (2,4) and (3,4)
        omega: Common site transition frequency
        base_coupling: Undeformed coupling magnitude J

    Returns:
        NetworkConfig: Validated network
    """
    if configuration not in CONFIGURATION_SIGNS:
        raise ValueError(f"unknown configuration {configuration!r}, expected 'A' or 'B'")

    signs = CONFIGURATION_SIGNS[configuration]
    edges = []
    for key in EDGE_KEYS:
        deformation = zeta1_deformation if key in ZETA1_PAIR else zeta2_deformation
        edges.append(Edge(
            i=key[0], j=key[1], sign=signs[key],
            base_coupling=base_coupling, deformation=deformation,
        ))

    network = NetworkConfig(omega=omega, edges=tuple(edges), configuration=configuration)
    logger.debug(f"Built configuration {configuration} network (time-dependent={network.is_time_dependent})")
    return network
