"""Power-law propagation model shared by the fluid formulas and the simulator."""

from dataclasses import dataclass

from .errors import DomainError, ParameterError


@dataclass(frozen=True)
class PathLossModel:
    """Received power = P_tx * K * r**(-eta).

    eta must exceed 2 or the continuum interference integral diverges. K
    defaults to 1: it cancels in every power ratio downstream and only
    matters when an absolute noise term enters.
    """

    K: float = 1.0
    eta: float = 3.0

    def __post_init__(self):
        if not self.K > 0:
            raise ParameterError(f"K must be > 0, got {self.K}")
        if not self.eta > 2:
            raise ParameterError(f"path-loss exponent must exceed 2, got {self.eta}")


def path_gain(r: float, model: PathLossModel) -> float:
    """Path gain K * r**(-eta) at distance r > 0 (meters)."""
    if not r > 0:
        raise DomainError(f"distance must be > 0, got {r} (gain diverges at the BS)")
    return model.K * r ** (-model.eta)
