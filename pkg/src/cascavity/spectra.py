"""Sweeps, resonance extraction and model-vs-model comparison curves.

The comparison pipeline pairs a four-mirror stack with the matched
three-mode system.  By default the fiber gap is snapped to the nearest
length whose fiber resonance coincides exactly with the cavity resonance
(``fiber_alignment="resonant"``): the three-mode description assumes the
coupled resonators share a common resonance frequency, and a nominal
integer length ratio misses that condition by a detectable fraction of a
free spectral range at finite mirror reflectivity.  The nominal geometry
remains available via ``fiber_alignment="nominal"`` and every result
records both lengths in its metadata.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import least_squares

from .coupled import ModeSystem, _steady_state_arrays
from .errors import FitFailureError, InvalidParameterError, PeakCountError
from .matching import (
    CascadedMatch,
    eta_from_input,
    g_from_geometry,
    kappa_from_geometry,
    match_cascaded,
    omega_c_from_geometry,
)
from .scattering import (
    OpticalStack,
    four_mirror_chain,
    region_amplitude_sweep,
    symmetric_cavity,
)

DEFAULT_GRID_POINTS = 4001
DEFAULT_PROMINENCE = 1e-4
# Half-width multiple used to window a peak before fitting it.
_FIT_WINDOW_HALFWIDTHS = 8.0


@dataclass(frozen=True)
class Spectrum:
    """Sampled curve of a nonnegative observable versus a swept parameter."""

    sweep_param: str
    x: np.ndarray
    values: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        v = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "values", v)
        if x.ndim != 1 or v.shape != x.shape:
            raise InvalidParameterError("spectrum requires matching 1-d grids")
        if x.size >= 2 and not np.all(np.diff(x) > 0):
            raise InvalidParameterError("sweep grid must be strictly increasing")
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise InvalidParameterError("spectrum values must be finite and nonnegative")

    def __len__(self) -> int:
        return int(self.x.size)


@dataclass(frozen=True)
class Peak:
    """One resonance: center, Lorentzian half width, height, fit residual."""

    center: float
    half_width: float
    height: float
    fit_residual: float


@dataclass(frozen=True)
class PeakSet:
    peaks: tuple[Peak, ...]

    def __post_init__(self):
        centers = [p.center for p in self.peaks]
        if any(b <= a for a, b in zip(centers, centers[1:])):
            raise InvalidParameterError("peak centers must be strictly increasing")

    def __len__(self) -> int:
        return len(self.peaks)

    def centers(self) -> list[float]:
        return [p.center for p in self.peaks]


@dataclass(frozen=True)
class PhaseScan:
    """Fiber-region intensity on an (omega, phi) grid; intensity[i, j] ~ (omega_i, phi_j)."""

    omega_grid: np.ndarray
    phi_grid: np.ndarray
    intensity: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        w = np.asarray(self.omega_grid, dtype=float)
        p = np.asarray(self.phi_grid, dtype=float)
        i = np.asarray(self.intensity, dtype=float)
        object.__setattr__(self, "omega_grid", w)
        object.__setattr__(self, "phi_grid", p)
        object.__setattr__(self, "intensity", i)
        if i.shape != (w.size, p.size):
            raise InvalidParameterError("intensity grid shape must match the omega and phi grids")
        if not np.all(np.isfinite(i)) or np.any(i < 0):
            raise InvalidParameterError("intensities must be finite and nonnegative")


@dataclass(frozen=True)
class SinusoidFit:
    """values ~ c0 + c1 * cos(phi - phi0), with the largest absolute residual."""

    c0: float
    c1: float
    phi0: float
    max_residual: float


# ---------------------------------------------------------------------------
# Sweeps


def _check_grid(omega_grid) -> np.ndarray:
    grid = np.asarray(omega_grid, dtype=float)
    if grid.ndim != 1 or grid.size < 1:
        raise InvalidParameterError("sweep grid must be a nonempty 1-d array")
    if np.any(~np.isfinite(grid)) or np.any(grid <= 0):
        raise InvalidParameterError("sweep frequencies must be positive and finite")
    if grid.size >= 2 and not np.all(np.diff(grid) > 0):
        raise InvalidParameterError("sweep grid must be strictly increasing")
    return grid


def sweep_scattering(
    stack: OpticalStack,
    omega_grid,
    a_in: complex = 1.0,
    d_in: complex = 0.0,
    metadata: dict | None = None,
) -> Spectrum:
    """Transmitted intensity |c_out|^2 / |a_in|^2 versus drive frequency (k = omega)."""
    grid = _check_grid(omega_grid)
    regions = region_amplitude_sweep(stack, grid, a_in, d_in)
    c_out = regions[-1][0]
    norm = abs(complex(a_in)) ** 2
    values = np.abs(c_out) ** 2 / (norm if norm > 0 else 1.0)
    meta = {"model": "scattering", "a_in": complex(a_in), "d_in": complex(d_in)}
    if metadata:
        meta.update(metadata)
    return Spectrum("omega", grid, values, meta)


def sweep_coupled(sys_template: ModeSystem, omega_grid, metadata: dict | None = None) -> Spectrum:
    """Photocurrent kappa * |beta|^2 versus drive frequency."""
    grid = _check_grid(omega_grid)
    _, beta, _ = _steady_state_arrays(sys_template, grid)
    values = sys_template.kappa * np.abs(beta) ** 2
    meta = {"model": "coupled"}
    if metadata:
        meta.update(metadata)
    return Spectrum("omega", grid, values, meta)


# ---------------------------------------------------------------------------
# Peak extraction


def _parabolic_vertex(x0, x1, x2, y0, y1, y2):
    """Vertex abscissa/ordinate of the parabola through three points."""
    dl, dr = x0 - x1, x2 - x1
    num = dl * dl * (y1 - y2) - dr * dr * (y1 - y0)
    den = dl * (y1 - y2) - dr * (y1 - y0)
    # a maximum has negative curvature, hence den < 0; anything else is
    # degenerate and keeps the grid point
    if den >= 0:
        return x1, y1
    shift = 0.5 * num / den
    if not (min(dl, dr) <= shift <= max(dl, dr)):
        return x1, y1
    # value at the vertex from the Lagrange form
    xv = x1 + shift
    l0 = (xv - x1) * (xv - x2) / ((x0 - x1) * (x0 - x2))
    l1 = (xv - x0) * (xv - x2) / ((x1 - x0) * (x1 - x2))
    l2 = (xv - x0) * (xv - x1) / ((x2 - x0) * (x2 - x1))
    return xv, y0 * l0 + y1 * l1 + y2 * l2


def _refine_peak(x: np.ndarray, v: np.ndarray, i: int) -> tuple[float, float]:
    """Refine a grid maximum by parabolic interpolation on log values."""
    if v[i - 1] > 0 and v[i] > 0 and v[i + 1] > 0:
        xv, logy = _parabolic_vertex(
            x[i - 1], x[i], x[i + 1], math.log(v[i - 1]), math.log(v[i]), math.log(v[i + 1])
        )
        return xv, math.exp(logy)
    return _parabolic_vertex(x[i - 1], x[i], x[i + 1], v[i - 1], v[i], v[i + 1])


def _prominence(v: np.ndarray, i: int) -> float:
    """Topographic prominence: height above the higher of the two key saddles."""
    h = v[i]
    left_min = h
    for j in range(i - 1, -1, -1):
        if v[j] > h:
            break
        left_min = min(left_min, v[j])
    right_min = h
    for j in range(i + 1, len(v)):
        if v[j] > h:
            break
        right_min = min(right_min, v[j])
    return h - max(left_min, right_min)


def _half_max_width(x: np.ndarray, v: np.ndarray, i: int, height: float) -> float:
    """Half width at half maximum estimated from linear-interpolated crossings."""
    target = 0.5 * height
    left = right = None
    for j in range(i, 0, -1):
        if v[j - 1] <= target <= v[j]:
            frac = (v[j] - target) / (v[j] - v[j - 1])
            left = x[j] - frac * (x[j] - x[j - 1])
            break
    for j in range(i, len(v) - 1):
        if v[j + 1] <= target <= v[j]:
            frac = (v[j] - target) / (v[j] - v[j + 1])
            right = x[j] + frac * (x[j + 1] - x[j])
            break
    if left is not None and right is not None:
        w = 0.5 * (right - left)
    elif left is not None:
        w = x[i] - left
    elif right is not None:
        w = right - x[i]
    else:
        w = float(np.mean(np.diff(x))) if len(x) > 1 else 1.0
    return max(w, 1e-300)


def find_peaks(spectrum: Spectrum, min_prominence: float = DEFAULT_PROMINENCE) -> PeakSet:
    """Local maxima refined by log-parabolic interpolation.

    Candidates are strict 3-point maxima (plateaus count once, at their
    leftmost point) kept when their topographic prominence reaches
    ``min_prominence`` times the global maximum.  Widths are half-maximum
    crossing estimates; use ``lorentzian_fit`` for refined parameters.
    """
    x, v = spectrum.x, spectrum.values
    if len(v) < 3:
        raise InvalidParameterError("peak finding needs at least 3 samples")
    vmax = float(v.max())
    if vmax <= 0.0:
        return PeakSet(())
    threshold = min_prominence * vmax
    peaks = []
    i = 1
    n = len(v)
    while i < n - 1:
        if v[i] > v[i - 1]:
            j = i
            while j + 1 < n and v[j + 1] == v[i]:
                j += 1
            if j < n - 1 and v[j + 1] < v[i]:
                if _prominence(v, i) >= threshold:
                    if j > i:
                        # plateau: the tie resolves to its leftmost point
                        center, height = float(x[i]), float(v[i])
                    else:
                        center, height = _refine_peak(x, v, i)
                    width = _half_max_width(x, v, i, v[i])
                    peaks.append(Peak(center, width, height, 0.0))
            i = j + 1
        else:
            i += 1
    return PeakSet(tuple(peaks))


def _lorentzian(params, x):
    h, w, x0, base = params
    return h * w * w / ((x - x0) ** 2 + w * w) + base


def lorentzian_fit(spectrum: Spectrum, window: tuple[float, float]) -> Peak:
    """Least-squares Lorentzian-plus-baseline fit over an x-window.

    The window must contain at least 7 samples and bracket the maximum
    (the largest windowed value may not sit on the window edge).  Iterates
    until the relative parameter change drops below 1e-10, at most 200
    iterations; non-convergence raises FitFailureError carrying the best
    iterate.
    """
    lo, hi = float(window[0]), float(window[1])
    if not lo < hi:
        raise InvalidParameterError(f"invalid fit window ({lo}, {hi})")
    mask = (spectrum.x >= lo) & (spectrum.x <= hi)
    x = spectrum.x[mask]
    v = spectrum.values[mask]
    if x.size < 7:
        raise InvalidParameterError(f"fit window holds {x.size} samples; need at least 7")
    imax = int(np.argmax(v))
    if imax in (0, x.size - 1):
        raise InvalidParameterError("fit window does not bracket the maximum")

    base0 = float(v.min())
    center0, height0 = _refine_peak(x, v, imax)
    h0 = max(height0 - base0, 1e-300)
    w0 = _half_max_width(x, v - base0, imax, float(v[imax] - base0))
    p0 = np.array([h0, w0, center0, base0])

    result = least_squares(
        lambda p: _lorentzian(p, x) - v,
        p0,
        xtol=1e-10,
        ftol=1e-15,
        gtol=1e-15,
        max_nfev=200,
    )
    h, w, x0, base = result.x
    w = abs(w)
    residual = float(np.sqrt(np.mean(result.fun**2)))
    best = Peak(float(x0), float(w), float(h), residual)
    if not result.success:
        raise FitFailureError(f"Lorentzian fit did not converge: {result.message}", best=best)
    if not (h > 0 and w > 0 and lo <= x0 <= hi and w < (hi - lo)):
        raise FitFailureError(
            f"Lorentzian fit left the admissible region (h={h:.3g}, w={w:.3g}, x0={x0:.6g})",
            best=best,
        )
    return best


def fit_peaks(spectrum: Spectrum, peak_set: PeakSet) -> list[Peak]:
    """Refine every found peak by a windowed Lorentzian fit.

    Each window spans ``_FIT_WINDOW_HALFWIDTHS`` estimated half widths,
    clipped at the midpoints toward neighboring peaks, and is widened
    symmetrically if it holds fewer than 7 samples.
    """
    if len(spectrum) < 7:
        raise InvalidParameterError(f"peak fitting needs at least 7 samples, got {len(spectrum)}")
    centers = peak_set.centers()
    fitted = []
    for i, pk in enumerate(peak_set.peaks):
        half = _FIT_WINDOW_HALFWIDTHS * pk.half_width
        lo = pk.center - half
        hi = pk.center + half
        if i > 0:
            lo = max(lo, 0.5 * (centers[i - 1] + pk.center))
        if i + 1 < len(centers):
            hi = min(hi, 0.5 * (pk.center + centers[i + 1]))
        step = float(np.mean(np.diff(spectrum.x)))
        while np.count_nonzero((spectrum.x >= lo) & (spectrum.x <= hi)) < 7:
            lo -= step
            hi += step
        fitted.append(lorentzian_fit(spectrum, (lo, hi)))
    return fitted


# ---------------------------------------------------------------------------
# Matched-model construction


@dataclass(frozen=True)
class CascadeSetup:
    """A four-mirror stack paired with its matched three-mode system."""

    stack: OpticalStack
    system: ModeSystem
    match: CascadedMatch
    fiber_length_used: float
    g_used: float
    omega_f_used: float
    fiber_alignment: str

    def metadata(self) -> dict:
        m = self.match
        return {
            "zeta": self.stack.elements[0].zeta,
            "cavity_length": self.stack.elements[1].length,
            "fiber_length_nominal": m.fiber_length,
            "fiber_length_used": self.fiber_length_used,
            "fiber_alignment": self.fiber_alignment,
            "cavity_order": m.params.order_n,
            "fiber_order": m.fiber_order,
            "fiber_detuning_nominal": m.fiber_detuning,
            "kappa": m.kappa,
            "omega_c": m.omega_c,
            "omega_f_used": self.omega_f_used,
            "g": self.g_used,
            "eta_l": self.system.eta_l,
            "eta_r": self.system.eta_r,
            "phi": self.system.phi,
        }


def build_cascade(
    zeta: float,
    l_c: float,
    l_f: float,
    n_c: int,
    n_f: int | None = None,
    *,
    fiber_alignment: str = "resonant",
    a_in: float = 1.0,
    d_in: float = 0.0,
    phi: float = 0.0,
) -> CascadeSetup:
    """Build the four-mirror stack and the matched mode system for one geometry.

    ``fiber_alignment="resonant"`` snaps the fiber gap to the common-resonance
    length nearest the nominal ``l_f`` and sets omega_f = omega_c exactly;
    ``"nominal"`` keeps ``l_f`` and the geometric (detuned) fiber frequency.
    """
    if fiber_alignment not in ("resonant", "nominal"):
        raise InvalidParameterError(f"unknown fiber_alignment {fiber_alignment!r}")
    match = match_cascaded(zeta, l_c, l_f, n_c, n_f)
    if fiber_alignment == "resonant":
        l_f_used = match.resonant_fiber_length
        omega_f_used = match.omega_c
    else:
        l_f_used = l_f
        omega_f_used = match.omega_f
    g_used = g_from_geometry(zeta, l_c, l_f_used)
    stack = four_mirror_chain(zeta, l_c, l_f_used)
    system = ModeSystem(
        omega_c=match.omega_c,
        omega_f=omega_f_used,
        g=g_used,
        kappa=match.kappa,
        eta_l=eta_from_input(match.kappa, abs(a_in)),
        eta_r=eta_from_input(match.kappa, abs(d_in)),
        phi=phi,
        omega=match.omega_c,
    )
    return CascadeSetup(stack, system, match, l_f_used, g_used, omega_f_used, fiber_alignment)


@dataclass(frozen=True)
class SingleCavitySetup:
    stack: OpticalStack
    system: ModeSystem
    kappa: float
    omega_c: float

    def metadata(self) -> dict:
        return {
            "zeta": self.stack.elements[0].zeta,
            "cavity_length": self.stack.elements[1].length,
            "kappa": self.kappa,
            "omega_c": self.omega_c,
            "eta": self.system.eta_r,
        }


def build_single_cavity(zeta: float, l_c: float, n_c: int, a_in: float = 1.0) -> SingleCavitySetup:
    """Symmetric two-mirror cavity paired with the matched single-mode model (g = 0).

    The single driven cavity embeds into the three-mode template as the
    measured mode b (the photocurrent observable is kappa * |beta|^2), so
    the matched drive eta = sqrt(kappa) * |a_in| enters as the b-pump.
    """
    kappa = kappa_from_geometry(zeta, l_c)
    omega_c = omega_c_from_geometry(zeta, l_c, n_c)
    system = ModeSystem(
        omega_c=omega_c,
        omega_f=omega_c,
        g=0.0,
        kappa=kappa,
        eta_l=0.0,
        eta_r=eta_from_input(kappa, abs(a_in)),
        phi=0.0,
        omega=omega_c,
    )
    return SingleCavitySetup(symmetric_cavity(zeta, l_c), system, kappa, omega_c)


def default_omega_window(setup, points: int = DEFAULT_GRID_POINTS) -> np.ndarray:
    """Default sweep grid: omega_c +- 3*sqrt(2)*g (or +-6*kappa for g = 0)."""
    if points < 2:
        raise InvalidParameterError(f"grid needs at least 2 points, got {points}")
    if isinstance(setup, CascadeSetup):
        center, half = setup.match.omega_c, 3.0 * math.sqrt(2.0) * setup.g_used
    else:
        center, half = setup.omega_c, 6.0 * setup.kappa
    return np.linspace(center - half, center + half, points)


# ---------------------------------------------------------------------------
# Comparison operations


def three_peak_distances(spectrum: Spectrum, min_prominence: float = DEFAULT_PROMINENCE):
    """Fitted (left, right) side-to-middle distances of a three-peak spectrum."""
    found = find_peaks(spectrum, min_prominence)
    if len(found) != 3:
        raise PeakCountError(f"expected 3 peaks, found {len(found)}")
    lo, mid, hi = fit_peaks(spectrum, found)
    return mid.center - lo.center, hi.center - mid.center


@dataclass(frozen=True)
class DeltaEntry:
    """Side-to-middle distance difference (scattering minus coupled) at one zeta."""

    zeta: float
    delta_left: float
    delta_right: float
    delta_mean: float
    kappa: float
    error: str | None = None


def peak_separation_delta(
    zeta_grid: Sequence[float],
    l_c: float,
    l_f: float,
    n_c: int,
    *,
    points: int = DEFAULT_GRID_POINTS,
    min_prominence: float = DEFAULT_PROMINENCE,
    fiber_alignment: str = "resonant",
) -> list[DeltaEntry]:
    """Difference of fitted side-peak distances between the two models, per zeta.

    Failures (unresolvable peaks, non-converging fits) produce an entry with
    an error message; the sweep continues.
    """
    entries = []
    for zeta in zeta_grid:
        if not zeta > 1:
            raise InvalidParameterError(f"peak separation needs zeta > 1, got {zeta!r}")
        setup = build_cascade(zeta, l_c, l_f, n_c, fiber_alignment=fiber_alignment)
        kappa = setup.match.kappa
        try:
            grid = default_omega_window(setup, points)
            scat = sweep_scattering(setup.stack, grid, metadata=setup.metadata())
            coup = sweep_coupled(setup.system, grid, metadata=setup.metadata())
            s_left, s_right = three_peak_distances(scat, min_prominence)
            c_left, c_right = three_peak_distances(coup, min_prominence)
        except (PeakCountError, FitFailureError, InvalidParameterError) as exc:
            entries.append(DeltaEntry(zeta, math.nan, math.nan, math.nan, kappa, str(exc)))
            continue
        d_left = s_left - c_left
        d_right = s_right - c_right
        entries.append(DeltaEntry(zeta, d_left, d_right, 0.5 * (d_left + d_right), kappa))
    return entries


@dataclass(frozen=True)
class ComparisonCurves:
    """Intracavity intensities versus drive frequency, both models, both cavities."""

    omega: np.ndarray
    scattering_left: np.ndarray
    scattering_right: np.ndarray
    coupled_left: np.ndarray
    coupled_right: np.ndarray
    metadata: dict


def intensity_comparison(
    zeta: float,
    l_c: float,
    l_f: float,
    n_c: int,
    omega_grid=None,
    *,
    points: int = DEFAULT_GRID_POINTS,
    fiber_alignment: str = "resonant",
) -> ComparisonCurves:
    """Left/right cavity intensities for a left-side drive, in both models.

    Scattering curves are |A|^2 + |B|^2 of the cavity gap regions with
    a_in = 1; coupled curves are the photon numbers |alpha|^2, |beta|^2 with
    the matched drive eta_l = sqrt(kappa).
    """
    setup = build_cascade(zeta, l_c, l_f, n_c, fiber_alignment=fiber_alignment)
    grid = _check_grid(omega_grid) if omega_grid is not None else default_omega_window(setup, points)
    regions = region_amplitude_sweep(setup.stack, grid, 1.0, 0.0)
    gap_regions = setup.stack.gap_region_indices()
    left = regions[gap_regions[0]]
    right = regions[gap_regions[2]]
    scat_left = np.abs(left[0]) ** 2 + np.abs(left[1]) ** 2
    scat_right = np.abs(right[0]) ** 2 + np.abs(right[1]) ** 2
    alpha, beta, _ = _steady_state_arrays(setup.system, grid)
    return ComparisonCurves(
        omega=grid,
        scattering_left=scat_left,
        scattering_right=scat_right,
        coupled_left=np.abs(alpha) ** 2,
        coupled_right=np.abs(beta) ** 2,
        metadata=setup.metadata(),
    )


def dark_mode_scan(stack: OpticalStack, omega_grid, phi_grid, metadata: dict | None = None) -> PhaseScan:
    """Fiber-region intensity for drives a_in = 1, d_in = e^{-i*phi} on an (omega, phi) grid."""
    gaps = stack.gap_region_indices()
    if stack.mirror_count != 4 or len(gaps) != 3:
        raise InvalidParameterError("dark-mode scan requires a four-mirror, three-gap stack")
    grid = _check_grid(omega_grid)
    phis = np.asarray(phi_grid, dtype=float)
    if phis.ndim != 1 or phis.size < 1 or not np.all(np.isfinite(phis)):
        raise InvalidParameterError("phase grid must be a finite 1-d array")
    fiber_region = gaps[1]
    intensity = np.empty((grid.size, phis.size))
    for j, phi in enumerate(phis):
        regions = region_amplitude_sweep(stack, grid, 1.0, np.exp(-1j * phi))
        a_f, b_f = regions[fiber_region]
        intensity[:, j] = np.abs(a_f) ** 2 + np.abs(b_f) ** 2
    return PhaseScan(grid, phis, intensity, metadata or {})


def sinusoid_fit(phi, values) -> SinusoidFit:
    """Linear least squares of values on {1, cos(phi), sin(phi)}.

    Requires at least 5 samples covering at least one full period.  Constant
    (rank-deficient) data returns c1 = 0, phi0 = 0 by convention.
    """
    phi = np.asarray(phi, dtype=float)
    v = np.asarray(values, dtype=float)
    if phi.ndim != 1 or phi.shape != v.shape:
        raise InvalidParameterError("phase grid and values must be matching 1-d arrays")
    if phi.size < 5:
        raise InvalidParameterError(f"sinusoid fit needs at least 5 samples, got {phi.size}")
    span = float(phi.max() - phi.min())
    # accept both endpoint-inclusive and endpoint-free grids over one period
    if span * phi.size / (phi.size - 1) < 2.0 * math.pi - 1e-9:
        raise InvalidParameterError("phase samples must cover at least one full period")
    basis = np.column_stack([np.ones_like(phi), np.cos(phi), np.sin(phi)])
    coef, _, rank, _ = np.linalg.lstsq(basis, v, rcond=None)
    if rank < 3:
        c0 = float(np.mean(v))
        return SinusoidFit(c0, 0.0, 0.0, float(np.max(np.abs(v - c0))))
    c0, bc, bs = (float(c) for c in coef)
    c1 = math.hypot(bc, bs)
    # effectively constant data: snap to the rank-deficiency convention
    if c1 <= 1e-14 * max(abs(c0), float(np.max(np.abs(v))), 1e-300):
        return SinusoidFit(c0, 0.0, 0.0, float(np.max(np.abs(v - c0))))
    phi0 = math.atan2(bs, bc)
    residual = float(np.max(np.abs(basis @ coef - v)))
    return SinusoidFit(c0, c1, phi0, residual)


def phase_scan_fits(scan: PhaseScan) -> list[SinusoidFit]:
    """Sinusoid fit of every omega row of a phase scan."""
    return [sinusoid_fit(scan.phi_grid, scan.intensity[i, :]) for i in range(scan.omega_grid.size)]
