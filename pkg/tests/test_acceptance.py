"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines. Tolerances are fixed here, not calibrated.
"""

import math

import numpy as np
import pytest

from fluidcell.cli import main
from fluidcell.errors import InfeasibleCellError
from fluidcell.fluid import SQRT3, NetworkParams, ocif_finite, ocif_infinite
from fluidcell.geometry import Point2D, build_hex_lattice
from fluidcell.hexsim import SimConfig, compare_profiles, empirical_f, simulate_profile
from fluidcell.linkmodel import CdmaCellConfig, CdmaUser, cdma_cell_power, cdma_sinr
from fluidcell.pathloss import PathLossModel

R = 1000.0
RC = SQRT3 / 2 * R
ETAS = (2.7, 3.0, 3.5, 4.0)


def report(criterion: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")


def test_criterion_1_simulation_matches_fluid_formula():
    """rings=15, R=1 km, 1e4 snapshots, 20 bins: per-eta mean rel dev <= 10%,
    max per-bin dev <= 25%, over bins with >= 10 samples and center in [0.1R, R]."""
    ok = True
    details = []
    for eta in ETAS:
        cfg = SimConfig(
            rings=15,
            cell_radius=R,
            pathloss=PathLossModel(eta=eta),
            snapshots=10_000,
            bins=20,
            seed=20260823,
        )
        profile = simulate_profile(cfg)
        params = NetworkParams.hex_consistent(R, eta, rings=15)
        rep = compare_profiles(profile, params, min_count=10, r_min=0.1 * R, r_max=R)
        eta_ok = rep.mean_dev <= 0.10 and rep.max_dev <= 0.25
        ok = ok and eta_ok
        details.append(f"eta={eta}: mean={rep.mean_dev:.3f} max={rep.max_dev:.3f}")
    report(1, ok, "; ".join(details) + " (bounds: mean<=0.10, max<=0.25)")
    assert ok


def test_criterion_2_infinite_network_limit():
    rho = 1.0 / (2 * SQRT3 * RC * RC)
    worst = 0.0
    for eta in ETAS:
        params = NetworkParams(
            half_distance_rc=RC,
            network_radius_rnw=1000.0 * RC,
            bs_density_rho=rho,
            pathloss=PathLossModel(eta=eta),
        )
        for frac in (0.2, 0.5, 0.8, 1.0):
            r = frac * RC
            f_fin = ocif_finite(r, params)
            f_inf = ocif_infinite(r, RC, rho, eta)
            worst = max(worst, abs(f_fin - f_inf) / f_inf)
    ok = worst < 1e-6
    report(2, ok, f"max relative gap at R_nw=1000*R_c: {worst:.3g} (bound 1e-6)")
    assert ok


def test_criterion_3_power_independence():
    rng = np.random.default_rng(3)
    layout = build_hex_lattice(5, R)
    ok = True
    for _ in range(100):
        eta = rng.uniform(2.2, 5.0)
        r = rng.uniform(0.05, 1.1) * RC
        # fluid: scaling the BS power by 1e3 must not change a single bit
        f_a = ocif_finite(r, NetworkParams.hex_consistent(R, eta, bs_power=1.0))
        f_b = ocif_finite(r, NetworkParams.hex_consistent(R, eta, bs_power=1000.0))
        # simulation: the common power (and K) never enter the gain ratio
        p = Point2D(rng.uniform(-R / 2, R / 2), rng.uniform(-R / 2, R / 2))
        e_a = empirical_f(p, layout, PathLossModel(K=1.0, eta=eta))
        e_b = empirical_f(p, layout, PathLossModel(K=1000.0, eta=eta))
        ok = ok and f_a == f_b and e_a == e_b
    report(3, ok, "ocif_finite and empirical_f bit-identical under 1e3 power scaling, "
                  "100 random configurations")
    assert ok


def test_criterion_4_scale_invariance():
    rng = np.random.default_rng(4)
    rho = 1.0 / (2 * SQRT3 * RC * RC)
    worst = 0.0
    for lam in (0.1, 3.0, 1000.0):
        for _ in range(100):
            eta = rng.uniform(2.2, 5.0)
            r = rng.uniform(0.05, 1.15) * RC
            base = ocif_finite(r, NetworkParams.hex_consistent(R, eta))
            scaled = ocif_finite(
                lam * r,
                NetworkParams(
                    half_distance_rc=lam * RC,
                    network_radius_rnw=lam * 31 * RC,
                    bs_density_rho=rho / lam**2,
                    pathloss=PathLossModel(eta=eta),
                ),
            )
            worst = max(worst, abs(scaled - base) / base)
    ok = worst < 1e-12
    report(4, ok, f"max relative change under lambda scaling: {worst:.3g} (bound 1e-12)")
    assert ok


def test_criterion_5_cdma_consistency():
    rng = np.random.default_rng(5)
    params = NetworkParams.hex_consistent(R, 3.5, rings=15)
    feasible = infeasible = 0
    worst_fp = worst_sinr = 0.0
    for _ in range(1000):
        alpha = rng.uniform(0.0, 1.0)
        n_users = rng.integers(1, 51)
        users = []
        for _ in range(n_users):
            r = rng.uniform(0.02, 1.1) * RC
            users.append(CdmaUser(
                gamma_star=rng.uniform(0.005, 0.5),
                gain_g=10.0 ** rng.uniform(-12, -8),
                f=ocif_finite(r, params),
                noise=10.0 ** rng.uniform(-16, -13),
            ))
        cfg = CdmaCellConfig(alpha=alpha, p_cch=rng.uniform(0.5, 5.0), users=users)
        try:
            sol = cdma_cell_power(cfg)
        except InfeasibleCellError as exc:
            assert exc.load >= 1.0
            infeasible += 1
            continue
        feasible += 1
        assert math.isfinite(sol.total_power_pb) and sol.total_power_pb > 0
        pb = sol.total_power_pb
        worst_fp = max(worst_fp, abs(pb - (cfg.p_cch + sum(sol.per_user_power))) / pb)
        for u, p_user in zip(cfg.users, sol.per_user_power):
            got = cdma_sinr(p_user * u.gain_g, pb * u.gain_g, u.f * pb * u.gain_g,
                            u.noise, alpha)
            worst_sinr = max(worst_sinr, abs(got - u.gamma_star) / u.gamma_star)
    ok = worst_fp < 1e-12 and worst_sinr < 1e-9 and feasible > 0
    report(5, ok, f"{feasible} feasible / {infeasible} infeasible cells; "
                  f"fixed-point err {worst_fp:.2g} (<1e-12), SINR err {worst_sinr:.2g} (<1e-9)")
    assert ok


def test_criterion_6_ofdma_approximation():
    from fluidcell.linkmodel import ofdma_sinr, ofdma_sinr_approx

    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(1000):
        f = 10.0 ** rng.uniform(-3, 1)
        n = 0.01 * f
        exact = ofdma_sinr(f, n)
        approx = ofdma_sinr_approx(f)
        worst = max(worst, abs(approx - exact) / exact)
    ok = worst < 0.01
    report(6, ok, f"max relative error at noise_over_signal=0.01*f: {worst:.3g} (bound 0.01)")
    assert ok


def test_criterion_7_compare_determinism(tmp_path):
    args = ["compare", "--rings", "15", "--cell-radius", "1000", "--eta", "3",
            "--snapshots", "1000", "--bins", "20", "--seed", "99"]
    blobs = []
    for name, extra in (("a.csv", []), ("b.csv", []), ("c.csv", ["--threads", "8"])):
        out = tmp_path / name
        assert main(args + ["--out", str(out)] + extra) == 0
        blobs.append(out.read_bytes())
    ok = blobs[0] == blobs[1] == blobs[2]
    report(7, ok, "compare CSV byte-identical across repeated runs and 1 vs 8 threads")
    assert ok
