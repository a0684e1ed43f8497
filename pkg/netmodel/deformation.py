"""Harmonic deformation of dipolar couplings"""
import math

from pydantic import BaseModel, ConfigDict, Field


class DeformationSpec(BaseModel):
    """Harmonic modulation of one edge's site distance

    The distance follows d(t) = d0 * (1 - 2a sin(omega0 t + phase)); d0 is
    absorbed into the J0 energy unit.
    """
    model_config = ConfigDict(frozen=True)

    amplitude: float = Field(ge=0.0, lt=0.5)  # a < 1/2 keeps the distance positive
    omega0: float = Field(ge=0.0)
    phase: float = 0.0

    def distance_factor(self, t: float) -> float:
        """Relative distance d(t)/d0"""
        return 1.0 - 2.0 * self.amplitude * math.sin(self.omega0 * t + self.phase)

    def coupling_factor(self, t: float) -> float:
        """Dipolar scaling J(t)/J0 = (d0/d(t))^3"""
        return self.distance_factor(t) ** -3

    @property
    def period(self) -> float | None:
        """Oscillation period, None for a frozen edge (omega0 = 0)"""
        if self.omega0 == 0:
            return None
        return 2.0 * math.pi / self.omega0
