"""Steady state of three coupled driven-dissipative bosonic modes.

Two cavity modes a, b (resonance ``omega_c``, amplitude decay ``kappa``)
couple with strength ``g`` to a lossless intermediate mode c (resonance
``omega_f``).  Coherent pumps of amplitude ``eta_l`` (on a) and ``eta_r``
(on b, extra phase ``phi``) oscillate at the drive frequency ``omega``.
In the frame rotating at the drive frequency the mean-field steady state
solves, with detunings dc = omega_c - omega and df = omega_f - omega,

    (i*dc + kappa) * alpha + i*g*gamma = -i * eta_l
    (i*dc + kappa) * beta  + i*g*gamma = -i * eta_r * e^{-i*phi}
    i*df * gamma + i*g * (alpha + beta) = 0

The system is linear with coherent drive, so the steady state is a coherent
state and (alpha, beta, gamma) determine every observable; photon numbers
are |alpha|^2 etc.  The solver works in the symmetric/antisymmetric basis
s = alpha + beta, d = alpha - beta, where the equations decouple into a 1x1
and a 2x2 block; the 2x2 block is nonsingular whenever g > 0, and for g = 0
the undriven gamma is set to zero (degenerate only when df = 0 as well,
which needs no special treatment beyond that convention).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidParameterError, SingularSystemError


@dataclass(frozen=True)
class ModeSystem:
    """Parameters of the coupled three-mode model, all in units of c/L."""

    omega_c: float
    omega_f: float
    g: float
    kappa: float
    eta_l: float
    eta_r: float
    phi: float
    omega: float

    def __post_init__(self):
        for name in ("omega_c", "omega_f", "g", "kappa", "eta_l", "eta_r", "phi", "omega"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise InvalidParameterError(f"{name} must be finite, got {v!r}")
        if self.kappa <= 0:
            raise InvalidParameterError(f"kappa must be positive, got {self.kappa!r}")
        if self.g < 0:
            raise InvalidParameterError(f"g must be nonnegative, got {self.g!r}")
        if self.eta_l < 0 or self.eta_r < 0:
            raise InvalidParameterError("pump amplitudes must be nonnegative")

    def at_drive(self, omega: float) -> "ModeSystem":
        return replace(self, omega=omega)


@dataclass(frozen=True)
class ModeAmplitudes:
    """Coherent steady-state amplitudes in the rotating frame."""

    alpha: complex
    beta: complex
    gamma: complex

    @property
    def photon_numbers(self) -> tuple[float, float, float]:
        return abs(self.alpha) ** 2, abs(self.beta) ** 2, abs(self.gamma) ** 2


def steady_state(sys: ModeSystem) -> ModeAmplitudes:
    """Unique fixed point of the mean-field equations at the drive frequency."""
    alpha, beta, gamma = _steady_state_arrays(sys, np.asarray(sys.omega))
    return ModeAmplitudes(complex(alpha), complex(beta), complex(gamma))


def _steady_state_arrays(sys: ModeSystem, omega: np.ndarray):
    """Vectorized steady state over a drive-frequency grid."""
    omega = np.asarray(omega, dtype=float)
    dc = sys.omega_c - omega
    df = sys.omega_f - omega
    denom_d = 1j * dc + sys.kappa
    drive_sum = -1j * (sys.eta_l + sys.eta_r * cmath.exp(-1j * sys.phi))
    drive_diff = -1j * (sys.eta_l - sys.eta_r * cmath.exp(-1j * sys.phi))

    d = drive_diff / denom_d
    if sys.g == 0.0:
        s = drive_sum / denom_d
        gamma = np.zeros_like(s)
    else:
        det2 = denom_d * (1j * df) + 2.0 * sys.g**2
        bad = np.abs(det2) == 0.0
        if np.any(bad):
            raise SingularSystemError("steady-state system is singular at some drive frequency")
        s = drive_sum * (1j * df) / det2
        gamma = -1j * sys.g * drive_sum / det2
    alpha = 0.5 * (s + d)
    beta = 0.5 * (s - d)
    return alpha, beta, gamma


def photocurrent(sys: ModeSystem) -> float:
    """Detected flux behind the right cavity: kappa * |beta|^2."""
    return sys.kappa * abs(steady_state(sys).beta) ** 2


def two_mode_eigenfrequencies(omega_c: float, g: float) -> tuple[float, float]:
    """Normal-mode frequencies of two degenerate modes coupled with strength g."""
    if g < 0:
        raise InvalidParameterError(f"g must be nonnegative, got {g!r}")
    return omega_c - g, omega_c + g


def three_mode_eigenfrequencies(sys: ModeSystem) -> tuple[float, float, float]:
    """Drive-free normal-mode frequencies, sorted ascending.

    The coupling matrix [[wc, 0, g], [0, wc, g], [g, g, wf]] always has the
    antisymmetric cavity combination (a - b) as an eigenvector at exactly
    ``omega_c``; the symmetric combination hybridizes with the middle mode.
    The middle value of the returned triple is omega_c exactly.
    """
    avg = 0.5 * (sys.omega_c + sys.omega_f)
    half = 0.5 * (sys.omega_c - sys.omega_f)
    r = math.sqrt(half * half + 2.0 * sys.g**2)
    return avg - r, sys.omega_c, avg + r
