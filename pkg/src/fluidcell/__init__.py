"""Downlink other-cell interference factor toolkit.

Computes the interference factor f(r) of a homogeneous cellular network two
ways: a closed-form continuum ("fluid") formula and Monte Carlo simulation on
a discrete hexagonal lattice. The factor then feeds CDMA downlink power
control and OFDMA SINR evaluation.
"""

__version__ = "0.1.0"

from .errors import (
    DomainError,
    InfeasibleCellError,
    ParameterError,
    ResampleRequired,
    SingularSinrError,
)
from .geometry import HexLayout, Point2D, build_hex_lattice, sample_center_cell, serving_bs
from .pathloss import PathLossModel, path_gain
from .fluid import NetworkParams, external_interference_fluid, ocif_finite, ocif_infinite
from .hexsim import FProfile, SimConfig, compare_profiles, empirical_f, simulate_profile
from .linkmodel import (
    CdmaCellConfig,
    CdmaUser,
    CellPowerSolution,
    cdma_cell_power,
    cdma_sinr,
    cdma_user_power,
    ofdma_sinr,
    ofdma_sinr_approx,
)
