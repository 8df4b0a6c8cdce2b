"""Monte Carlo interference factor on the discrete hexagonal lattice.

Snapshots are independent mobile positions drawn uniformly in the center
cell. Each snapshot uses its own RNG substream keyed by the snapshot index,
so serial and parallel execution produce bit-identical profiles.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ParameterError, ResampleRequired
from .fluid import NetworkParams, ocif_finite
from .geometry import HexLayout, Point2D, build_hex_lattice, sample_center_cell
from .pathloss import PathLossModel


@dataclass(frozen=True)
class SimConfig:
    rings: int
    cell_radius: float  # m
    pathloss: PathLossModel
    snapshots: int
    bins: int = 20
    r_max: float | None = None  # defaults to cell_radius
    seed: int = 0

    def __post_init__(self):
        if self.snapshots < 1:
            raise ParameterError(f"snapshots must be >= 1, got {self.snapshots}")
        if self.bins < 1:
            raise ParameterError(f"bins must be >= 1, got {self.bins}")
        if self.r_max is not None and not 0 < self.r_max <= self.cell_radius:
            raise ParameterError(
                f"r_max must be in (0, cell_radius={self.cell_radius}], got {self.r_max}"
            )

    @property
    def effective_r_max(self) -> float:
        return self.cell_radius if self.r_max is None else self.r_max


@dataclass(frozen=True)
class FProfile:
    """Distance-binned interference-factor statistics.

    Bins are equal-width over (0, r_max]. Empty bins carry count 0 and NaN
    mean/std rather than zeros.
    """

    config: SimConfig
    bin_centers: np.ndarray  # m
    mean_f: np.ndarray
    std_f: np.ndarray  # population std (ddof=0)
    counts: np.ndarray

    @property
    def n_bins(self) -> int:
        return len(self.bin_centers)

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "config": {
                "rings": cfg.rings,
                "cell_radius_m": cfg.cell_radius,
                "K": cfg.pathloss.K,
                "eta": cfg.pathloss.eta,
                "snapshots": cfg.snapshots,
                "bins": cfg.bins,
                "r_max_m": cfg.effective_r_max,
                "seed": cfg.seed,
            },
            "bin_center_r_m": self.bin_centers.tolist(),
            "mean_f": self.mean_f.tolist(),
            "std_f": self.std_f.tolist(),
            "count": self.counts.tolist(),
        }


def empirical_f(p: Point2D, layout: HexLayout, model: PathLossModel) -> float:
    """Interference factor at p on the discrete lattice.

    Ratio of summed path gains from all non-serving BS to the gain from the
    nearest BS. K and the (common) BS power cancel, so only eta enters.
    """
    d = np.hypot(layout.bs_positions[:, 0] - p.x, layout.bs_positions[:, 1] - p.y)
    b = int(np.argmin(d))
    if d[b] == 0.0:
        raise ResampleRequired(f"point coincides with BS {b}")
    gains = d ** (-model.eta)
    return float((gains.sum() - gains[b]) / gains[b])


def _snapshot_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


def _run_snapshot(cfg: SimConfig, layout: HexLayout, index: int) -> tuple[float, float]:
    rng = _snapshot_rng(cfg.seed, index)
    while True:
        p = sample_center_cell(rng, layout)
        try:
            f = empirical_f(p, layout, cfg.pathloss)
        except ResampleRequired:
            continue
        return math.hypot(p.x, p.y), f


def simulate_profile(cfg: SimConfig, workers: int = 1) -> FProfile:
    """Run cfg.snapshots Monte Carlo draws and bin f by distance to BS 0.

    Deterministic for a fixed seed, independent of `workers`: results are
    stored by snapshot index before the (fixed-order) reduction.
    """
    layout = build_hex_lattice(cfg.rings, cfg.cell_radius)
    rs = np.empty(cfg.snapshots)
    fs = np.empty(cfg.snapshots)

    if workers <= 1:
        for i in range(cfg.snapshots):
            rs[i], fs[i] = _run_snapshot(cfg, layout, i)
    else:
        def worker(chunk):
            for i in chunk:
                rs[i], fs[i] = _run_snapshot(cfg, layout, i)

        chunks = np.array_split(np.arange(cfg.snapshots), workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(worker, chunks))

    r_max = cfg.effective_r_max
    width = r_max / cfg.bins
    # Half-open bins (i*width, (i+1)*width]; samples beyond r_max (possible
    # only when r_max < cell_radius) are dropped.
    keep = rs <= r_max
    idx = np.minimum(np.ceil(rs[keep] / width).astype(int) - 1, cfg.bins - 1)

    counts = np.bincount(idx, minlength=cfg.bins)
    mean = np.full(cfg.bins, np.nan)
    std = np.full(cfg.bins, np.nan)
    kept_f = fs[keep]
    for b in range(cfg.bins):
        vals = kept_f[idx == b]
        if len(vals):
            mean[b] = vals.mean()
            std[b] = vals.std(ddof=0)
    centers = (np.arange(cfg.bins) + 0.5) * width
    return FProfile(config=cfg, bin_centers=centers, mean_f=mean, std_f=std, counts=counts)


@dataclass(frozen=True)
class ComparisonReport:
    """Per-bin relative deviation of a simulated profile from the fluid formula."""

    bin_centers: np.ndarray
    fluid_f: np.ndarray  # NaN where the bin was skipped
    rel_dev: np.ndarray  # NaN where the bin was skipped
    skipped: dict[int, str] = field(default_factory=dict)  # bin index -> reason

    @property
    def mean_dev(self) -> float:
        valid = self.rel_dev[~np.isnan(self.rel_dev)]
        return float(valid.mean()) if len(valid) else math.nan

    @property
    def max_dev(self) -> float:
        valid = self.rel_dev[~np.isnan(self.rel_dev)]
        return float(valid.max()) if len(valid) else math.nan


def compare_profiles(
    sim: FProfile,
    params: NetworkParams,
    min_count: int = 10,
    r_min: float = 0.0,
    r_max: float = math.inf,
) -> ComparisonReport:
    """Relative deviation |mean_f - f_fluid| / f_fluid per usable bin.

    Bins with fewer than min_count samples, with centers outside [r_min,
    r_max], or outside the fluid formula's domain are skipped and flagged.
    """
    n = sim.n_bins
    fluid_vals = np.full(n, np.nan)
    dev = np.full(n, np.nan)
    skipped: dict[int, str] = {}
    for b in range(n):
        r = float(sim.bin_centers[b])
        if sim.counts[b] < min_count:
            skipped[b] = f"count {sim.counts[b]} < {min_count}"
            continue
        if not r_min <= r <= r_max:
            skipped[b] = f"bin center {r:g} outside [{r_min:g}, {r_max:g}]"
            continue
        try:
            fluid_vals[b] = ocif_finite(r, params)
        except DomainError as exc:
            skipped[b] = f"outside fluid domain: {exc}"
            continue
        dev[b] = abs(sim.mean_f[b] - fluid_vals[b]) / fluid_vals[b]
    return ComparisonReport(
        bin_centers=sim.bin_centers.copy(), fluid_f=fluid_vals, rel_dev=dev, skipped=skipped
    )
