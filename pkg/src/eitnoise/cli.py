"""Command-line front end: sweeps, analytic/numeric comparison, length scales.

Configuration is a flat ``key = value`` text file (``#`` starts a comment)
plus repeatable ``--set key=value`` overrides. Exit codes: 0 success,
1 comparison tolerance exceeded, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Optional

import numpy as np

from .analytic import ClosedFormContext, closed_form_spectra, length_scales, peak_positions, resonance_p
from .errors import EITError, IntegrationError
from .langevin import FluctuationBlock, fluctuation_block
from .model import ORDERING, DriveState, MediumParams, build_drive, drive_from_rabi
from .propagate import input_covariance, propagate_covariance, spectrum, uncertainty_product
from .steady_state import dark_state, steady_state_numeric
from .transfer import eigen_report, field_generator

MODES = ("analytic", "numeric", "compare", "decoherence")
COLUMNS = ("omega_over_gamma", "z_C_over_gamma", "theta", "beam",
           "s_analytic", "s_numeric", "abs_diff")
UNCERTAINTY_TOL = 1e-9

# default setting: equal Rabi frequencies, g = gamma/60, probe squeezed with xi = -3
DEFAULTS = {
    "gamma1": "0.5", "gamma2": "0.5", "g1": str(1 / 60), "g2": str(1 / 60),
    "n_atoms": "1e4", "c": "1", "gamma12": "0", "quant_length": "1",
    "omega1": "1", "omega2": "1", "xi": "-3", "theta_list": "0",
    "omega_min": "0.05", "omega_max": "1", "omega_n": "20",
    "z_min": "0", "z_max": "200", "z_n": "101",
    "mode": "compare", "workers": "1", "tolerance": "1e-3",
    "corrupt_diffusion": "0", "omega": "0.25",
}
_OPTIONAL = ("alpha1", "alpha2", "omega_grid", "z_grid", "out")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    params: MediumParams
    drive: DriveState
    omega_grid: tuple
    z_grid: tuple
    theta_list: tuple
    mode: str = "compare"
    out: Optional[str] = None
    workers: int = 1
    tolerance: float = 1e-3
    # test hook: extra white noise added to the atomic diffusion
    corrupt_diffusion: float = 0.0
    omega: float = 0.25


def parse_config_text(text: str) -> dict:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        values[key] = val
    return values


def _floats(text, key):
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


def _grid(values, name):
    if f"{name}_grid" in values:
        grid = _floats(values[f"{name}_grid"], f"{name}_grid")
    else:
        lo, hi = float(values[f"{name}_min"]), float(values[f"{name}_max"])
        n = int(values[f"{name}_n"])
        grid = tuple(np.linspace(lo, hi, n).tolist()) if n > 0 else ()
    if not grid:
        raise ConfigError(f"{name} grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigError(f"{name} grid must be strictly ascending")
    if not all(math.isfinite(v) for v in grid):
        raise ConfigError(f"{name} grid has non-finite entries")
    return grid


def build_config(values: dict) -> SweepConfig:
    """Validate raw key/value pairs and build a :class:`SweepConfig`."""
    unknown = set(values) - set(DEFAULTS) - set(_OPTIONAL)
    if unknown:
        raise ConfigError(f"unknown keys: {', '.join(sorted(unknown))}")
    merged = {**DEFAULTS, **values}
    try:
        params = MediumParams(**{k: float(merged[k]) for k in (
            "gamma1", "gamma2", "g1", "g2", "n_atoms", "c", "gamma12", "quant_length")})
        xi, thetas = float(merged["xi"]), _floats(merged["theta_list"], "theta_list")
        if "alpha1" in merged or "alpha2" in merged:
            drive = build_drive(params, float(merged.get("alpha1", 0)),
                                float(merged.get("alpha2", 0)), xi)
        else:
            drive = drive_from_rabi(params, float(merged["omega1"]), float(merged["omega2"]), xi)
        mode = merged["mode"]
        if mode not in MODES:
            raise ConfigError(f"mode must be one of {', '.join(MODES)}")
        if not thetas:
            raise ConfigError("theta_list is empty")
        return SweepConfig(params=params, drive=drive, omega_grid=_grid(merged, "omega"),
                           z_grid=_grid(merged, "z"), theta_list=thetas, mode=mode,
                           out=merged.get("out"), workers=int(merged["workers"]),
                           tolerance=float(merged["tolerance"]),
                           corrupt_diffusion=float(merged["corrupt_diffusion"]),
                           omega=float(merged["omega"]))
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from None


def load_config(path: Optional[str], overrides=(), **extra) -> SweepConfig:
    values = {}
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                values.update(parse_config_text(fh.read()))
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        key, val = item.split("=", 1)
        values[key.strip()] = val.strip()
    values.update({k: v for k, v in extra.items() if v is not None})
    return build_config(values)


def _numeric_block(config):
    params, drive = config.params, config.drive
    if config.mode == "decoherence" or params.gamma12 > 0:
        mean = steady_state_numeric(drive, params)
    else:
        mean = dark_state(drive)
    block = fluctuation_block(drive, params, mean)
    if config.corrupt_diffusion:
        # adds eps * identity to <f f^H>
        eye = np.eye(8)[:, ORDERING.atomic_conjugation()]
        block = FluctuationBlock(block.jac, block.couple,
                                 block.diff + config.corrupt_diffusion * eye)
    return block


def _rows_for_omega(config, block, omega):
    """All output records for one sideband frequency, z-major then theta then beam."""
    z = np.asarray(config.z_grid)
    rows = []
    analytic = config.mode != "numeric"
    numeric = config.mode != "analytic"
    if analytic:
        ideal = ClosedFormContext(config.drive, dataclasses.replace(config.params, gamma12=0.0))
        cf = {th: closed_form_spectra(z, omega, ideal, th) for th in config.theta_list}
        cf_q = {th: closed_form_spectra(z, omega, ideal, th + math.pi / 2)
                for th in config.theta_list}
    if numeric:
        gen = field_generator(block, config.drive, config.params, omega)
        cmap = propagate_covariance(input_covariance(config.drive), gen, z)
    for k, zk in enumerate(z):
        for th in config.theta_list:
            for beam in (1, 2):
                s_an = s_num = None
                if analytic:
                    s_an = float(cf[th][beam - 1][k])
                    if s_an * float(cf_q[th][beam - 1][k]) < 1 - UNCERTAINTY_TOL:
                        raise IntegrationError(
                            f"uncertainty bound violated at omega={omega:g}, z={zk:g}", zk)
                if numeric:
                    sig = cmap.sigma[k]
                    s_num = spectrum(sig, th, beam)
                    if uncertainty_product(sig, th, beam) < 1 - UNCERTAINTY_TOL:
                        raise IntegrationError(
                            f"uncertainty bound violated at omega={omega:g}, z={zk:g}", zk)
                diff = abs(s_an - s_num) if analytic and numeric else None
                rows.append((omega, float(zk), th, beam, s_an, s_num, diff))
    return rows


def run_sweep(config: SweepConfig) -> list:
    """Compute every record of the sweep, in deterministic order."""
    block = _numeric_block(config) if config.mode != "analytic" else None
    func = partial(_rows_for_omega, config, block)
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            chunks = list(pool.map(func, config.omega_grid))
    else:
        chunks = [func(w) for w in config.omega_grid]
    return [row for chunk in chunks for row in chunk]


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return format(value, ".17g")


def format_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def write_rows(rows, path: Optional[str]):
    text = format_csv(rows)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def compare_report(config: SweepConfig, rows=None) -> dict:
    """Deviation statistics between closed-form and numerical spectra."""
    if config.mode != "compare":
        config = dataclasses.replace(config, mode="compare")
    if rows is None:
        rows = run_sweep(config)
    s_an = np.array([r[4] for r in rows])
    diff = np.array([r[6] for r in rows])
    rel = diff / np.maximum(1.0, np.abs(s_an))

    ctx = ClosedFormContext(config.drive, config.params)
    block = _numeric_block(config)
    eig_abs, eig_osc = [], []
    for w in config.omega_grid:
        rep = eigen_report(field_generator(block, config.drive, config.params, w))
        absorb = config.params.gamma * resonance_p(w, 0.0, ctx)
        osc = resonance_p(w, math.sqrt(ctx.omega_sq), ctx) * w
        scale = math.hypot(absorb / 2, osc)
        eig_abs.append(abs(rep.absorption_rate - absorb) / 2 / scale)
        eig_osc.append(abs(rep.oscillation_rate - osc) / scale)
    max_rel = float(rel.max())
    return {
        "points": int(len(rows)),
        "max_abs_deviation": float(diff.max()),
        "mean_abs_deviation": float(diff.mean()),
        "max_rel_deviation": max_rel,
        "mean_rel_deviation": float(rel.mean()),
        "eigen_max_rel_dev_absorption": float(max(eig_abs)),
        "eigen_max_rel_dev_oscillation": float(max(eig_osc)),
        "tolerance": config.tolerance,
        "passed": bool(max_rel <= config.tolerance),
    }


def scales_report(config: SweepConfig) -> dict:
    ctx = ClosedFormContext(config.drive, config.params)
    zs = length_scales(config.omega, ctx)
    mean_peak, fluct_peak = peak_positions(ctx)
    return {"omega_over_gamma": config.omega, "z_abs_C_over_gamma": zs.z_abs,
            "z_osc_C_over_gamma": zs.z_osc, "z_max_transfer_C_over_gamma": zs.z_max_transfer,
            "z_abs_over_z_osc": zs.z_abs / zs.z_osc,
            "mean_value_peak_over_gamma": mean_peak, "fluctuation_peak_over_gamma": fluct_peak}


def _parser():
    parser = argparse.ArgumentParser(prog="eitnoise", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("sweep", "write one record per (omega, z, theta, beam)"),
                            ("compare", "analytic vs numeric deviation summary"),
                            ("scales", "length scales and absorption peak positions")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="flat key = value configuration file")
        p.add_argument("--set", dest="overrides", action="append", default=[],
                       metavar="KEY=VALUE", help="override one configuration key")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--mode", choices=MODES)
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        config = load_config(args.config, args.overrides, out=args.out, mode=args.mode)
        if args.command == "scales":
            for key, val in scales_report(config).items():
                print(f"{key} = {_fmt(val)}")
            return 0
        if args.command == "compare":
            config = dataclasses.replace(config, mode="compare")
        rows = run_sweep(config)
        if args.command == "sweep":
            write_rows(rows, config.out)
            return 0
        if config.out is not None:
            write_rows(rows, config.out)
        summary = compare_report(config, rows)
        print(json.dumps(summary, indent=2, sort_keys=True))
        return 0 if summary["passed"] else 1
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (EITError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
