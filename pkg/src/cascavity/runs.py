"""Experiment runners: turn a validated configuration into CSV/JSON/SVG files."""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from . import __version__
from .config import DriveConfig, ExperimentConfig
from .errors import ConfigError
from .matching import eta_from_input, kappa_from_geometry, match_cascaded
from .output import write_csv, write_json
from .spectra import (
    DEFAULT_GRID_POINTS,
    build_cascade,
    build_single_cavity,
    dark_mode_scan,
    default_omega_window,
    intensity_comparison,
    peak_separation_delta,
    phase_scan_fits,
    sweep_coupled,
    sweep_scattering,
)

DARKMODE_DEFAULT_POINTS = 401


def _svg_meta(config: ExperimentConfig) -> str:
    return f"cascavity {__version__} config " + json.dumps(
        config.resolved(), sort_keys=True, separators=(",", ":")
    )


def _resolve_drive(drive: DriveConfig, kappa: float):
    """Return (a_in, d_in, d_phase, eta_l, eta_r, phi) for a given kappa."""
    if drive.kind == "pump":
        eta_l, eta_r, phi = drive.eta_l, drive.eta_r, drive.phi
        root = math.sqrt(kappa)
        return eta_l / root, eta_r / root, phi, eta_l, eta_r, phi
    eta_l = eta_from_input(kappa, drive.a_in)
    eta_r = eta_from_input(kappa, drive.d_in)
    return drive.a_in, drive.d_in, drive.d_phase, eta_l, eta_r, drive.d_phase


def _build_setup(config: ExperimentConfig):
    geo = config.geometry
    kappa = kappa_from_geometry(geo.zeta, geo.cavity_length)
    a_in, d_in, d_phase, _, _, _ = _resolve_drive(config.drive, kappa)
    if geo.single_cavity:
        if d_in != 0.0:
            raise ConfigError("single_cavity runs support left-side drive only (d_in = 0)")
        return build_single_cavity(geo.zeta, geo.cavity_length, geo.cavity_order, a_in)
    return build_cascade(
        geo.zeta,
        geo.cavity_length,
        geo.fiber_length,
        geo.cavity_order,
        geo.fiber_order,
        fiber_alignment=config.fiber_alignment,
        a_in=a_in,
        d_in=d_in,
        phi=d_phase,
    )


def _omega_grid(config: ExperimentConfig, setup, grid_points: int | None, default_points: int):
    if config.sweep is not None:
        points = grid_points or config.sweep.points
        if points < 2:
            raise ConfigError(f"sweep needs at least 2 points, got {points}")
        return np.linspace(config.sweep.lo, config.sweep.hi, points)
    return default_omega_window(setup, grid_points or default_points)


def run_spectrum(config: ExperimentConfig, out_dir: Path, svg: bool, grid_points: int | None):
    """Transmission spectra of the selected model(s) -> spectrum.csv [spectrum.svg]."""
    setup = _build_setup(config)
    grid = _omega_grid(config, setup, grid_points, DEFAULT_GRID_POINTS)
    meta = setup.metadata()
    drive = config.drive
    kappa = setup.system.kappa
    a_in, d_in, d_phase, _, _, _ = _resolve_drive(drive, kappa)

    columns = [("omega", grid)]
    series = []
    if config.model in ("scattering", "both"):
        scat = sweep_scattering(setup.stack, grid, a_in, d_in * np.exp(-1j * d_phase), metadata=meta)
        columns.append(("scattering_value", scat.values))
        series.append(("scattering", scat.values))
    if config.model in ("coupled", "both"):
        coup = sweep_coupled(setup.system, grid, metadata=meta)
        columns.append(("coupled_value", coup.values))
        series.append(("coupled", coup.values))
    omega_c = meta["omega_c"]
    columns.append(("omega_over_omega_c", grid / omega_c))

    paths = [write_csv(out_dir / "spectrum.csv", columns, __version__, config.resolved())]
    if svg:
        from .svgplot import line_plot

        paths.append(
            line_plot(
                out_dir / "spectrum.svg",
                grid,
                series,
                xlabel="omega (c/L)",
                ylabel="transmitted photocurrent",
                title="transmission spectrum",
                logy=True,
                meta=_svg_meta(config),
            )
        )
    return paths


def run_delta(config: ExperimentConfig, out_dir: Path, svg: bool, grid_points: int | None):
    """Side-peak distance differences over the zeta grid -> delta.csv [delta.svg]."""
    if not config.zeta_grid:
        raise ConfigError("delta runs require a zeta_grid")
    geo = config.geometry
    if geo.single_cavity:
        raise ConfigError("delta runs require the cascaded geometry")
    entries = peak_separation_delta(
        config.zeta_grid,
        geo.cavity_length,
        geo.fiber_length,
        geo.cavity_order,
        points=grid_points or DEFAULT_GRID_POINTS,
        fiber_alignment=config.fiber_alignment,
    )
    columns = [
        ("zeta", [e.zeta for e in entries]),
        ("delta_left", [e.delta_left for e in entries]),
        ("delta_right", [e.delta_right for e in entries]),
        ("delta_mean", [e.delta_mean for e in entries]),
        ("kappa", [e.kappa for e in entries]),
        ("error", [e.error or "" for e in entries]),
        ("delta_mean_over_kappa", [e.delta_mean / e.kappa for e in entries]),
    ]
    paths = [write_csv(out_dir / "delta.csv", columns, __version__, config.resolved())]
    if svg:
        from .svgplot import line_plot

        abs_mean = [abs(e.delta_mean) if e.error is None else math.nan for e in entries]
        paths.append(
            line_plot(
                out_dir / "delta.svg",
                [e.zeta for e in entries],
                [("|delta_mean|", abs_mean), ("kappa", [e.kappa for e in entries])],
                xlabel="zeta",
                ylabel="peak-distance difference (c/L)",
                title="model disagreement vs mirror polarizability",
                logy=True,
                meta=_svg_meta(config),
            )
        )
    return paths


def run_profile(config: ExperimentConfig, out_dir: Path, svg: bool, grid_points: int | None):
    """Intracavity intensity curves for both models -> profile.csv [profile.svg]."""
    geo = config.geometry
    if geo.single_cavity:
        raise ConfigError("profile runs require the cascaded geometry")
    setup = build_cascade(
        geo.zeta,
        geo.cavity_length,
        geo.fiber_length,
        geo.cavity_order,
        geo.fiber_order,
        fiber_alignment=config.fiber_alignment,
    )
    grid = _omega_grid(config, setup, grid_points, DEFAULT_GRID_POINTS)
    curves = intensity_comparison(
        geo.zeta,
        geo.cavity_length,
        geo.fiber_length,
        geo.cavity_order,
        grid,
        fiber_alignment=config.fiber_alignment,
    )
    omega_c = curves.metadata["omega_c"]
    columns = [
        ("omega", curves.omega),
        ("scat_left", curves.scattering_left),
        ("scat_right", curves.scattering_right),
        ("coupled_left", curves.coupled_left),
        ("coupled_right", curves.coupled_right),
        ("omega_over_omega_c", curves.omega / omega_c),
    ]
    paths = [write_csv(out_dir / "profile.csv", columns, __version__, config.resolved())]
    if svg:
        from .svgplot import line_plot

        paths.append(
            line_plot(
                out_dir / "profile.svg",
                curves.omega,
                [
                    ("scattering left", curves.scattering_left),
                    ("scattering right", curves.scattering_right),
                    ("coupled left", curves.coupled_left),
                    ("coupled right", curves.coupled_right),
                ],
                xlabel="omega (c/L)",
                ylabel="intracavity intensity",
                title="intracavity intensities, left-side drive",
                logy=True,
                meta=_svg_meta(config),
            )
        )
    return paths


def run_darkmode(config: ExperimentConfig, out_dir: Path, svg: bool, grid_points: int | None):
    """Fiber intensity vs (omega, phi) -> darkmode.csv, darkmode_fit.csv [darkmode.svg]."""
    geo = config.geometry
    if geo.single_cavity:
        raise ConfigError("darkmode runs require the cascaded geometry")
    phase = config.phase_grid
    if phase.points < 5:
        raise ConfigError(f"darkmode needs at least 5 phase samples, got {phase.points}")
    span = phase.hi - phase.lo
    if span * phase.points / (phase.points - 1) < 2 * math.pi - 1e-9:
        raise ConfigError("darkmode phase_grid must cover a full period of 2*pi")
    setup = build_cascade(
        geo.zeta,
        geo.cavity_length,
        geo.fiber_length,
        geo.cavity_order,
        geo.fiber_order,
        fiber_alignment=config.fiber_alignment,
    )
    omega = _omega_grid(config, setup, grid_points, DARKMODE_DEFAULT_POINTS)
    phis = np.linspace(phase.lo, phase.hi, phase.points)
    scan = dark_mode_scan(setup.stack, omega, phis, metadata=setup.metadata())

    n_omega, n_phi = scan.intensity.shape
    omega_col = np.repeat(scan.omega_grid, n_phi)
    phi_col = np.tile(scan.phi_grid, n_omega)
    omega_c = setup.match.omega_c
    paths = [
        write_csv(
            out_dir / "darkmode.csv",
            [
                ("omega", omega_col),
                ("phi", phi_col),
                ("fiber_intensity", scan.intensity.reshape(-1)),
                ("omega_over_omega_c", omega_col / omega_c),
            ],
            __version__,
            config.resolved(),
        )
    ]
    fits = phase_scan_fits(scan)
    phi_min = [math.remainder(f.phi0 + math.pi, 2 * math.pi) for f in fits]
    paths.append(
        write_csv(
            out_dir / "darkmode_fit.csv",
            [
                ("omega", scan.omega_grid),
                ("c0", [f.c0 for f in fits]),
                ("c1", [f.c1 for f in fits]),
                ("phi0", [f.phi0 for f in fits]),
                ("residual", [f.max_residual for f in fits]),
                ("phi_min", phi_min),
                ("omega_over_omega_c", scan.omega_grid / omega_c),
            ],
            __version__,
            config.resolved(),
        )
    )
    if svg:
        from .svgplot import heat_map

        paths.append(
            heat_map(
                out_dir / "darkmode.svg",
                scan.omega_grid,
                scan.phi_grid,
                scan.intensity,
                xlabel="omega (c/L)",
                ylabel="phi (rad)",
                title="fiber intensity (log scale)",
                logz=True,
                meta=_svg_meta(config),
            )
        )
    return paths


def run_match(config: ExperimentConfig, out_dir: Path, svg: bool, grid_points: int | None):
    """Matched coupled-mode parameters with formula provenance -> params.json."""
    geo = config.geometry
    if geo.single_cavity:
        raise ConfigError("match runs require the cascaded geometry")
    match = match_cascaded(
        geo.zeta, geo.cavity_length, geo.fiber_length, geo.cavity_order, geo.fiber_order
    )
    a_in, d_in, d_phase, eta_l, eta_r, phi = _resolve_drive(config.drive, match.kappa)
    payload = {
        "version": __version__,
        "config": config.resolved(),
        "kappa": {
            "value": match.kappa,
            "formula": "1/(2*l_c*zeta*sqrt(zeta^2+1))",
        },
        "omega_c": {
            "value": match.omega_c,
            "order": match.params.order_n,
            "formula": "(n*pi + atan2(1, zeta))/l_c",
        },
        "omega_f": {
            "value": match.omega_f,
            "order": match.fiber_order,
            "formula": "(n_f*pi + atan2(1, zeta))/l_f",
            "detuning_from_omega_c": match.fiber_detuning,
            "order_within_half_fsr": match.fiber_order_in_range,
        },
        "g": {
            "value": match.g,
            "formula": "1/(2*sqrt(l_c*l_f)*sqrt(1+zeta^2))",
        },
        "eta_l": {"value": eta_l, "formula": "sqrt(kappa)*a_in", "a_in": a_in},
        "eta_r": {"value": eta_r, "formula": "sqrt(kappa)*d_in", "d_in": d_in, "phi": phi},
        "resonant_fiber_length": {
            "value": match.resonant_fiber_length,
            "formula": "(n_f*pi + atan2(1, zeta))/omega_c",
            "nominal_fiber_length": match.fiber_length,
        },
    }
    return [write_json(out_dir / "params.json", payload)]
