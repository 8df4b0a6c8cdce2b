"""Command-line front end: ocif / compare / cdma / ofdma subcommands.

Curves go to CSV, structured results to JSON. Every output file is
accompanied (or its JSON embeds) a run manifest recording the resolved
parameters, seed, version, and timestamp, so runs are reproducible. All
numeric logic lives in the library modules; this file only parses, calls,
and formats. Floats are printed with 17 significant digits so a CSV round
trip recovers them exactly.
"""

import argparse
import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .errors import DomainError, InfeasibleCellError, ParameterError, SingularSinrError
from .fluid import NetworkParams, ocif_finite, ocif_infinite
from .hexsim import SimConfig, compare_profiles, simulate_profile
from .linkmodel import CdmaCellConfig, CdmaUser, cdma_cell_power, ofdma_sinr, ofdma_sinr_approx
from .pathloss import PathLossModel

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_DOMAIN = 4

SCHEMA_VERSION = 1


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _manifest(command: str, params: dict, seed: int | None = None) -> dict:
    return {
        "command": command,
        "parameters": params,
        "seed": seed,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def _write_text(path: Path, content: str) -> None:
    # Build-then-write: a failure while computing leaves no partial file.
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(content)
    tmp.replace(path)


def _write_manifest(out: Path, manifest: dict) -> None:
    _write_text(out.with_name(out.name + ".manifest.json"), json.dumps(manifest, indent=2) + "\n")


def _per_eta_path(out: Path, eta: float, n_etas: int) -> Path:
    if n_etas == 1:
        return out
    return out.with_name(f"{out.stem}_eta{eta:g}{out.suffix}")


# ---------------------------------------------------------------- ocif


def _cmd_ocif(args) -> int:
    etas = args.eta or [3.0]
    out = Path(args.out)
    infinite = args.network_radius == "infinite"
    network_radius = None if infinite else (
        float(args.network_radius) if args.network_radius else None
    )

    for eta in etas:
        params = NetworkParams.hex_consistent(
            cell_radius=args.cell_radius,
            eta=eta,
            rings=args.rings_equivalent,
            network_radius=network_radius,
        )
        r_max = args.r_max if args.r_max is not None else args.cell_radius
        if args.r_min is not None:
            grid = [args.r_min + i * (r_max - args.r_min) / (args.grid - 1) for i in range(args.grid)]
        else:
            grid = [(i + 1) * r_max / args.grid for i in range(args.grid)]

        lines = ["r_m,f_finite,f_infinite"]
        for r in grid:
            if r == 0.0:
                print("warning: skipping r=0 (f is defined there only as the limit 0)",
                      file=sys.stderr)
                continue
            f_inf = ocif_infinite(r, params.half_distance_rc, params.bs_density_rho, eta)
            f_fin = f_inf if infinite else ocif_finite(r, params)
            lines.append(f"{_fmt(r)},{_fmt(f_fin)},{_fmt(f_inf)}")

        path = _per_eta_path(out, eta, len(etas))
        _write_text(path, "\n".join(lines) + "\n")

    _write_manifest(out, _manifest("ocif", {
        "cell_radius_m": args.cell_radius,
        "eta": etas,
        "rings_equivalent": args.rings_equivalent,
        "network_radius_m": "infinite" if infinite else network_radius,
        "grid": args.grid,
        "r_min_m": args.r_min,
        "r_max_m": args.r_max,
        "out": str(out),
    }))
    return EXIT_OK


# ---------------------------------------------------------------- compare


def _cmd_compare(args) -> int:
    etas = args.eta or [2.7, 3.0, 3.5, 4.0]
    out = Path(args.out)
    summary = {}

    for eta in etas:
        cfg = SimConfig(
            rings=args.rings,
            cell_radius=args.cell_radius,
            pathloss=PathLossModel(eta=eta),
            snapshots=args.snapshots,
            bins=args.bins,
            seed=args.seed,
        )
        profile = simulate_profile(cfg, workers=args.threads)
        params = NetworkParams.hex_consistent(
            cell_radius=args.cell_radius, eta=eta, rings=args.rings
        )
        report = compare_profiles(profile, params, min_count=args.min_count)

        lines = ["r_bin_center_m,f_sim_mean,f_sim_std,n_samples,f_fluid,rel_dev"]
        for b in range(profile.n_bins):
            lines.append(",".join([
                _fmt(profile.bin_centers[b]),
                _fmt(profile.mean_f[b]),
                _fmt(profile.std_f[b]),
                str(int(profile.counts[b])),
                _fmt(report.fluid_f[b]),
                _fmt(report.rel_dev[b]),
            ]))
        path = _per_eta_path(out, eta, len(etas))
        _write_text(path, "\n".join(lines) + "\n")

        summary[f"{eta:g}"] = {
            "csv": str(path),
            "mean_rel_dev": report.mean_dev,
            "max_rel_dev": report.max_dev,
            "skipped_bins": {str(k): v for k, v in report.skipped.items()},
        }

    manifest = _manifest("compare", {
        "rings": args.rings,
        "cell_radius_m": args.cell_radius,
        "eta": etas,
        "snapshots": args.snapshots,
        "bins": args.bins,
        "min_count": args.min_count,
        "threads": args.threads,
        "out": str(out),
    }, seed=args.seed)
    _write_text(out.with_name(out.name + ".summary.json"),
                json.dumps({"per_eta": summary, "manifest": manifest}, indent=2) + "\n")
    _write_manifest(out, manifest)
    return EXIT_OK


# ---------------------------------------------------------------- cdma


def _require(cond: bool, field: str, msg: str) -> None:
    if not cond:
        raise ParameterError(f"config field '{field}': {msg}")


def _load_cdma_config(path: str, gamma_in_db: bool) -> CdmaCellConfig:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParameterError(f"cannot read config {path}: {exc}") from exc
    _require(isinstance(doc, dict), "<root>", "must be a JSON object")
    _require(doc.get("schema_version") == SCHEMA_VERSION,
             "schema_version", f"must be {SCHEMA_VERSION}")
    _require(isinstance(doc.get("alpha"), (int, float)), "alpha", "must be a number")
    _require(isinstance(doc.get("p_cch"), (int, float)), "p_cch", "must be a number")
    users_doc = doc.get("users", [])
    _require(isinstance(users_doc, list), "users", "must be a list")

    network = doc.get("network")
    params = None
    if network is not None:
        _require(isinstance(network, dict), "network", "must be an object")
        _require(isinstance(network.get("cell_radius"), (int, float)),
                 "network.cell_radius", "must be a number")
        _require(isinstance(network.get("eta"), (int, float)), "network.eta", "must be a number")
        params = NetworkParams.hex_consistent(
            cell_radius=network["cell_radius"],
            eta=network["eta"],
            rings=int(network.get("rings", 15)),
        )

    users = []
    for i, u in enumerate(users_doc):
        _require(isinstance(u, dict), f"users[{i}]", "must be an object")
        _require(isinstance(u.get("gamma_star"), (int, float)),
                 f"users[{i}].gamma_star", "must be a number")
        _require(isinstance(u.get("g"), (int, float)), f"users[{i}].g", "must be a number")
        gamma = float(u["gamma_star"])
        if gamma_in_db:
            gamma = 10.0 ** (gamma / 10.0)
        if "f" in u:
            _require(isinstance(u["f"], (int, float)), f"users[{i}].f", "must be a number")
            f_val = float(u["f"])
        elif "r" in u:
            _require(params is not None, f"users[{i}].r",
                     "requires a 'network' section to derive f")
            _require(isinstance(u["r"], (int, float)), f"users[{i}].r", "must be a number")
            f_val = ocif_finite(float(u["r"]), params)
        else:
            raise ParameterError(f"config field 'users[{i}]': needs either 'f' or 'r'")
        users.append(CdmaUser(
            gamma_star=gamma,
            gain_g=float(u["g"]),
            f=f_val,
            noise=float(u.get("noise", 0.0)),
        ))
    return CdmaCellConfig(alpha=float(doc["alpha"]), p_cch=float(doc["p_cch"]), users=users)


def _emit_json(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        _write_text(Path(out), text)
    else:
        sys.stdout.write(text)


def _cmd_cdma(args) -> int:
    cfg = _load_cdma_config(args.config, args.db)
    manifest = _manifest("cdma", {"config": args.config, "db": args.db})
    try:
        sol = cdma_cell_power(cfg)
    except InfeasibleCellError as exc:
        _emit_json({
            "schema_version": SCHEMA_VERSION,
            "feasible": False,
            "load": exc.load,
            "manifest": manifest,
        }, args.out)
        return EXIT_INFEASIBLE
    _emit_json({
        "schema_version": SCHEMA_VERSION,
        "feasible": True,
        "total_power_pb_w": sol.total_power_pb,
        "per_user_power_w": list(sol.per_user_power),
        "load": sol.load,
        "manifest": manifest,
    }, args.out)
    return EXIT_OK


# ---------------------------------------------------------------- ofdma


def _cmd_ofdma(args) -> int:
    if args.f is not None:
        f_val = args.f
    else:
        if args.r is None:
            raise ParameterError("give either --f or --r")
        params = NetworkParams.hex_consistent(
            cell_radius=args.cell_radius, eta=args.eta_single, rings=args.rings_equivalent
        )
        f_val = ocif_finite(args.r, params)
    exact = ofdma_sinr(f_val, args.noise_over_signal)
    approx = ofdma_sinr_approx(f_val)
    _emit_json({
        "f": f_val,
        "noise_over_signal": args.noise_over_signal,
        "sinr_exact": exact,
        "sinr_approx": approx,
        "rel_error": abs(approx - exact) / exact,
        "manifest": _manifest("ofdma", {
            "f": args.f, "r": args.r, "cell_radius_m": args.cell_radius,
            "eta": args.eta_single, "noise_over_signal": args.noise_over_signal,
        }),
    }, args.out)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fluidcell",
        description="Other-cell interference factor: fluid formulas, hexagonal "
                    "Monte Carlo, CDMA power control, OFDMA SINR.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ocif", help="evaluate the fluid-model f(r) on a distance grid (CSV)")
    p.add_argument("--cell-radius", type=float, default=1000.0, help="hexagon radius R in m")
    p.add_argument("--eta", type=float, action="append", help="path-loss exponent (repeatable)")
    p.add_argument("--rings-equivalent", type=int, default=15,
                   help="rings used to derive the network radius (2*rings+1)*R_c")
    p.add_argument("--network-radius", default=None,
                   help="network radius in m, or 'infinite'")
    p.add_argument("--grid", type=int, default=100, help="number of grid points")
    p.add_argument("--r-min", type=float, default=None, help="grid start in m (default: r_max/grid)")
    p.add_argument("--r-max", type=float, default=None, help="grid end in m (default: R)")
    p.add_argument("--out", default="ocif.csv")
    p.set_defaults(func=_cmd_ocif)

    p = sub.add_parser("compare", help="Monte Carlo vs fluid formula comparison (CSV + JSON)")
    p.add_argument("--rings", type=int, default=15)
    p.add_argument("--cell-radius", type=float, default=1000.0)
    p.add_argument("--eta", type=float, action="append",
                   help="path-loss exponent (repeatable; default 2.7 3 3.5 4)")
    p.add_argument("--snapshots", type=int, default=1000)
    p.add_argument("--bins", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--min-count", type=int, default=10,
                   help="bins with fewer samples are excluded from deviation stats")
    p.add_argument("--out", default="compare.csv")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("cdma", help="solve downlink cell power from a JSON cell config")
    p.add_argument("--config", required=True, help="cell config JSON")
    p.add_argument("--db", action="store_true", help="gamma_star values in the config are in dB")
    p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_cdma)

    p = sub.add_parser("ofdma", help="OFDMA SINR, exact and noise-neglected")
    p.add_argument("--f", type=float, default=None, help="interference factor")
    p.add_argument("--r", type=float, default=None, help="distance in m (f via fluid model)")
    p.add_argument("--cell-radius", type=float, default=1000.0)
    p.add_argument("--eta", dest="eta_single", type=float, default=3.0)
    p.add_argument("--rings-equivalent", type=int, default=15)
    p.add_argument("--noise-over-signal", type=float, default=0.0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_ofdma)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, SingularSinrError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
