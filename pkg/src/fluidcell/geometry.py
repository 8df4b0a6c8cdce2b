"""Hexagonal base-station lattice and uniform sampling of the center cell."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class Point2D:
    x: float  # m
    y: float  # m


@dataclass(frozen=True)
class HexLayout:
    """Triangular lattice of BS positions; each BS owns one hexagonal cell.

    bs_positions is an (n, 2) array in meters, index 0 = center BS at the
    origin. cell_radius is the hexagon center-to-vertex distance, so adjacent
    BS are sqrt(3)*cell_radius apart. Construct via build_hex_lattice.
    """

    rings: int
    cell_radius: float
    bs_positions: np.ndarray

    @property
    def n_bs(self) -> int:
        return len(self.bs_positions)


def build_hex_lattice(rings: int, cell_radius: float) -> HexLayout:
    """Build `rings` concentric rings of BS around a center BS at the origin.

    The number of BS is 1 + 3*rings*(rings+1). Orientation: one vertex of the
    center hexagonal cell lies on the positive x-axis.
    """
    if rings < 0:
        raise ParameterError(f"rings must be >= 0, got {rings}")
    if not cell_radius > 0:
        raise ParameterError(f"cell_radius must be > 0, got {cell_radius}")

    spacing = SQRT3 * cell_radius
    # Lattice basis at 30 and 90 degrees puts the Voronoi-hexagon vertices at
    # 0, 60, ..., 300 degrees (vertex on +x axis).
    a1 = np.array([spacing * SQRT3 / 2.0, spacing / 2.0])
    a2 = np.array([0.0, spacing])

    coords = []
    for q in range(-rings, rings + 1):
        for r in range(-rings, rings + 1):
            ring = max(abs(q), abs(r), abs(q + r))
            if ring <= rings:
                coords.append((ring, q, r))
    # Sort: center first, then ring by ring counter-clockwise from +x.
    positions = [q * a1 + r * a2 for _, q, r in coords]
    order = sorted(
        range(len(coords)),
        key=lambda i: (coords[i][0], math.atan2(positions[i][1], positions[i][0]) % (2 * math.pi)),
    )
    bs = np.array([positions[i] for i in order])
    bs[0] = 0.0
    return HexLayout(rings=rings, cell_radius=cell_radius, bs_positions=bs)


def serving_bs(p: Point2D, layout: HexLayout) -> int:
    """Index of the BS nearest to p; ties go to the lowest index."""
    d2 = np.sum((layout.bs_positions - [p.x, p.y]) ** 2, axis=1)
    return int(np.argmin(d2))


def _in_center_hexagon(x: float, y: float, radius: float) -> bool:
    # Hexagon with vertices at angles 0, 60, ..., 300 degrees.
    return abs(y) <= SQRT3 / 2.0 * radius and SQRT3 * abs(x) + abs(y) <= SQRT3 * radius


def sample_center_cell(rng: np.random.Generator, layout: HexLayout) -> Point2D:
    """Draw a point uniformly over the center cell (Voronoi cell of BS 0).

    Rejection sampling from the bounding box; the rejection sequence is part
    of the RNG stream, so a given generator state yields a fixed point. The
    exact origin (a measure-zero hit on BS 0) is re-drawn.
    """
    radius = layout.cell_radius
    half_height = SQRT3 / 2.0 * radius
    while True:
        x = rng.uniform(-radius, radius)
        y = rng.uniform(-half_height, half_height)
        if _in_center_hexagon(x, y, radius) and not (x == 0.0 and y == 0.0):
            return Point2D(x, y)
