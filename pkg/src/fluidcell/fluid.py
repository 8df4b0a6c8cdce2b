"""Closed-form interference factor of the continuum (fluid) network model.

The discrete base stations are replaced by a constant spatial density rho_BS
of transmitters over a round network of radius R_nw. External interference at
a mobile at distance r from its serving BS is then a ring integral with inner
radius 2*R_c - r and outer radius R_nw - r, where R_c is half the BS-to-BS
distance. Dividing by the serving-BS power gives the interference factor f,
which is independent of the common BS output power.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError
from .pathloss import PathLossModel

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class NetworkParams:
    """Parameter bundle of the fluid model.

    half_distance_rc: half the distance between adjacent BS (m).
    network_radius_rnw: radius of the round network region (m).
    bs_density_rho: BS per square meter.
    bs_power_pb: common BS output power (W); never enters f.
    """

    half_distance_rc: float
    network_radius_rnw: float
    bs_density_rho: float
    pathloss: PathLossModel
    bs_power_pb: float = 1.0

    def __post_init__(self):
        if not self.half_distance_rc > 0:
            raise ParameterError(f"half_distance_rc must be > 0, got {self.half_distance_rc}")
        if not self.network_radius_rnw > 2 * self.half_distance_rc:
            raise ParameterError(
                f"network_radius_rnw must exceed 2*half_distance_rc = "
                f"{2 * self.half_distance_rc}, got {self.network_radius_rnw}"
            )
        if not self.bs_density_rho > 0:
            raise ParameterError(f"bs_density_rho must be > 0, got {self.bs_density_rho}")
        if not self.bs_power_pb > 0:
            raise ParameterError(f"bs_power_pb must be > 0, got {self.bs_power_pb}")

    @classmethod
    def hex_consistent(
        cls,
        cell_radius: float,
        eta: float,
        rings: int = 15,
        K: float = 1.0,
        bs_power: float = 1.0,
        network_radius: float | None = None,
    ) -> "NetworkParams":
        """Parameters matching a hexagonal lattice of given cell radius R.

        R_c = (sqrt(3)/2)*R and rho_BS = (3*sqrt(3)*R^2/2)^-1 = 1/(2*sqrt(3)*R_c^2).
        Default network radius (2*rings+1)*R_c encloses a `rings`-ring lattice
        with half-spacing margin.
        """
        if not cell_radius > 0:
            raise ParameterError(f"cell_radius must be > 0, got {cell_radius}")
        rc = SQRT3 / 2.0 * cell_radius
        rho = 1.0 / (2.0 * SQRT3 * rc * rc)
        if network_radius is None:
            network_radius = (2 * rings + 1) * rc
        return cls(
            half_distance_rc=rc,
            network_radius_rnw=network_radius,
            bs_density_rho=rho,
            pathloss=PathLossModel(K=K, eta=eta),
            bs_power_pb=bs_power,
        )


def _check_domain(r: float, rc: float, rnw: float) -> None:
    if not r > 0:
        raise DomainError(f"r must be > 0, got {r}")
    if not r < 2 * rc:
        raise DomainError(f"r must be < 2*R_c = {2 * rc}, got {r}")
    if not r < rnw - 2 * rc:
        raise DomainError(f"r must be < R_nw - 2*R_c = {rnw - 2 * rc}, got {r}")


def external_interference_fluid(r: float, params: NetworkParams) -> float:
    """Other-cell interference power (W) at distance r from the serving BS."""
    rc = params.half_distance_rc
    rnw = params.network_radius_rnw
    _check_domain(r, rc, rnw)
    eta = params.pathloss.eta
    lead = 2.0 * math.pi * params.bs_density_rho * params.bs_power_pb * params.pathloss.K
    return lead / (eta - 2.0) * ((2 * rc - r) ** (2 - eta) - (rnw - r) ** (2 - eta))


def ocif_finite(r: float, params: NetworkParams) -> float:
    """Interference factor f(r) of the finite fluid network.

    f = 2*pi*rho * r^eta / (eta-2) * [(2Rc-r)^(2-eta) - (Rnw-r)^(2-eta)].
    Independent of bs_power_pb and K.
    """
    rc = params.half_distance_rc
    rnw = params.network_radius_rnw
    _check_domain(r, rc, rnw)
    eta = params.pathloss.eta
    lead = 2.0 * math.pi * params.bs_density_rho * r**eta / (eta - 2.0)
    return lead * ((2 * rc - r) ** (2 - eta) - (rnw - r) ** (2 - eta))


def ocif_infinite(r: float, half_distance_rc: float, bs_density_rho: float, eta: float) -> float:
    """Interference factor in the R_nw -> infinity limit.

    f(r) = 2*pi*rho * r^eta / (eta-2) * (2Rc-r)^(2-eta), valid for 0 < r < 2Rc.
    """
    if not eta > 2:
        raise ParameterError(f"path-loss exponent must exceed 2, got {eta}")
    if not half_distance_rc > 0:
        raise ParameterError(f"half_distance_rc must be > 0, got {half_distance_rc}")
    if not bs_density_rho > 0:
        raise ParameterError(f"bs_density_rho must be > 0, got {bs_density_rho}")
    if not r > 0:
        raise DomainError(f"r must be > 0, got {r}")
    if not r < 2 * half_distance_rc:
        raise DomainError(f"r must be < 2*R_c = {2 * half_distance_rc}, got {r}")
    lead = 2.0 * math.pi * bs_density_rho * r**eta / (eta - 2.0)
    return lead * (2 * half_distance_rc - r) ** (2 - eta)
