"""One-dimensional transfer-matrix model of lossless point-scatterer stacks.

Conventions (fixed throughout the package):

* At every point the field is a pair of plane-wave amplitudes (A, B):
  A right-propagating, B left-propagating.  Across an optical element the
  pairs on the two sides are related by ``(C, D)^T = M (A, B)^T`` with
  (A, B) on the left side and (C, D) on the right side.
* A lossless point mirror of real polarizability ``zeta`` has

      M = [[1 + i*zeta,  i*zeta],
           [-i*zeta,     1 - i*zeta]]

  equivalent to reflectivity r = i*zeta/(1 - i*zeta) and transmissivity
  t = 1/(1 - i*zeta); |r|^2 + |t|^2 = 1 and t = 1 + r.
* Free propagation over a distance d is diag(e^{ikd}, e^{-ikd}): the
  right-mover advances its phase.
* Units: c = 1, so wavenumber and angular frequency coincide; lengths are
  measured in units of the reference cavity length.

Every matrix factor has determinant exactly 1, which the boundary solver
exploits: with det M = 1 the outgoing amplitudes are

    b_out = (d_in - m21 * a_in) / m22
    c_out = (a_in + m12 * d_in) / m22

both free of the catastrophic cancellation that the textbook form
``c_out = m11*a_in + m12*b_out`` suffers for highly reflective stacks.
"""

from __future__ import annotations

import cmath
import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import InvalidParameterError, SingularBoundaryError

# m22 of a lossless stack is 1/t*; |t| > 0 for finite real zeta, so this
# guard only trips on numerically degenerate input.
_M22_FLOOR = 1e-300


@dataclass(frozen=True)
class TransferMatrix:
    """2x2 complex matrix relating (A, B) on the left to (C, D) on the right."""

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        return TransferMatrix(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    @property
    def determinant(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, right_amp: complex, left_amp: complex) -> tuple[complex, complex]:
        """Map an amplitude pair across the element (left side -> right side)."""
        return (
            self.m11 * right_amp + self.m12 * left_amp,
            self.m21 * right_amp + self.m22 * left_amp,
        )


IDENTITY = TransferMatrix(1.0 + 0j, 0j, 0j, 1.0 + 0j)


@dataclass(frozen=True)
class Mirror:
    """Lossless point scatterer; zeta is the real, dimensionless polarizability."""

    zeta: float

    def __post_init__(self):
        if not math.isfinite(self.zeta):
            raise InvalidParameterError(f"mirror polarizability must be finite, got {self.zeta!r}")


@dataclass(frozen=True)
class Gap:
    """Free-propagation segment of positive length (units of the cavity length)."""

    length: float

    def __post_init__(self):
        if not (math.isfinite(self.length) and self.length > 0):
            raise InvalidParameterError(f"gap length must be positive and finite, got {self.length!r}")


StackElement = Union[Mirror, Gap]


@dataclass(frozen=True)
class OpticalStack:
    """Ordered left-to-right sequence of mirrors and gaps.

    Mirrors are zero-thickness, so element positions are cumulative gap
    lengths.  An empty stack acts as the identity (free space).
    """

    elements: tuple[StackElement, ...]

    def __init__(self, elements: Iterable[StackElement]):
        elems = tuple(elements)
        for e in elems:
            if not isinstance(e, (Mirror, Gap)):
                raise InvalidParameterError(f"stack elements must be Mirror or Gap, got {type(e).__name__}")
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def total_length(self) -> float:
        return sum(e.length for e in self.elements if isinstance(e, Gap))

    @property
    def mirror_count(self) -> int:
        return sum(1 for e in self.elements if isinstance(e, Mirror))

    def boundary_positions(self) -> list[float]:
        """Positions of the region boundaries, one entry per region.

        Entry i is the left edge of the (possibly zero-width) homogeneous
        region before element i; the final entry is the right edge of the
        stack.  Length is ``len(elements) + 1``.
        """
        pos = [0.0]
        x = 0.0
        for e in self.elements:
            if isinstance(e, Gap):
                x += e.length
            pos.append(x)
        return pos

    def gap_region_indices(self) -> list[int]:
        """Region indices whose amplitudes describe each gap interior, in order."""
        return [i for i, e in enumerate(self.elements) if isinstance(e, Gap)]


@dataclass(frozen=True)
class BoundaryDrive:
    """Incoming amplitudes: a_in from the left, d_in from the right, at wavenumber k."""

    a_in: complex
    d_in: complex
    k: float

    def __post_init__(self):
        if not (math.isfinite(self.k) and self.k > 0):
            raise InvalidParameterError(f"wavenumber must be positive and finite, got {self.k!r}")
        for name in ("a_in", "d_in"):
            v = complex(getattr(self, name))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise InvalidParameterError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class RegionAmplitudes:
    """Plane-wave amplitude pair of one homogeneous region, at its reference position."""

    position: float
    right_amp: complex
    left_amp: complex

    @property
    def intensity(self) -> float:
        """|A|^2 + |B|^2; constant throughout the region."""
        return abs(self.right_amp) ** 2 + abs(self.left_amp) ** 2


@dataclass(frozen=True)
class ScatteringSolution:
    """Outgoing amplitudes plus the amplitude pair of every homogeneous region."""

    b_out: complex
    c_out: complex
    interface_amps: tuple[RegionAmplitudes, ...]


@dataclass(frozen=True)
class FieldSample:
    position: float
    right_amp: complex
    left_amp: complex
    intensity: float


def mirror_matrix(zeta: float) -> TransferMatrix:
    """Transfer matrix of a lossless point mirror with polarizability ``zeta``."""
    if not math.isfinite(zeta):
        raise InvalidParameterError(f"mirror polarizability must be finite, got {zeta!r}")
    iz = 1j * zeta
    return TransferMatrix(1.0 + iz, iz, -iz, 1.0 - iz)


def reflectivity(zeta: float) -> complex:
    """Amplitude reflectivity r = i*zeta / (1 - i*zeta)."""
    if not math.isfinite(zeta):
        raise InvalidParameterError(f"mirror polarizability must be finite, got {zeta!r}")
    return 1j * zeta / (1.0 - 1j * zeta)


def transmissivity(zeta: float) -> complex:
    """Amplitude transmissivity t = 1 / (1 - i*zeta)."""
    if not math.isfinite(zeta):
        raise InvalidParameterError(f"mirror polarizability must be finite, got {zeta!r}")
    return 1.0 / (1.0 - 1j * zeta)


def propagation_matrix(k: float, d: float) -> TransferMatrix:
    """Transfer matrix of free propagation over distance ``d`` at wavenumber ``k``."""
    if not (math.isfinite(k) and k > 0):
        raise InvalidParameterError(f"wavenumber must be positive and finite, got {k!r}")
    if not (math.isfinite(d) and d > 0):
        raise InvalidParameterError(f"propagation distance must be positive and finite, got {d!r}")
    phase = cmath.exp(1j * k * d)
    return TransferMatrix(phase, 0j, 0j, 1.0 / phase)


def element_matrix(element: StackElement, k: float) -> TransferMatrix:
    if isinstance(element, Mirror):
        return mirror_matrix(element.zeta)
    return propagation_matrix(k, element.length)


def compose(stack: OpticalStack, k: float) -> TransferMatrix:
    """Left-to-right product over the stack: composing [X, Y] gives M(Y) @ M(X)."""
    if not (math.isfinite(k) and k > 0):
        raise InvalidParameterError(f"wavenumber must be positive and finite, got {k!r}")
    total = IDENTITY
    for e in stack.elements:
        total = element_matrix(e, k) @ total
    return total


def solve_boundary(stack: OpticalStack, drive: BoundaryDrive) -> ScatteringSolution:
    """Solve for outgoing and per-region amplitudes given two-sided incoming drive.

    Linear in the drive: scaling (a_in, d_in) by a constant scales every
    amplitude by the same constant.
    """
    matrices = [element_matrix(e, drive.k) for e in stack.elements]
    total = IDENTITY
    for m in matrices:
        total = m @ total

    if abs(total.m22) < _M22_FLOOR:
        raise SingularBoundaryError(f"stack transfer matrix is numerically singular (|m22| = {abs(total.m22):.3e})")

    a_in = complex(drive.a_in)
    d_in = complex(drive.d_in)
    b_out = (d_in - total.m21 * a_in) / total.m22
    # det M = 1 exactly for mirror/gap products, so m11 - m12*m21/m22 = 1/m22.
    c_out = (a_in + total.m12 * d_in) / total.m22

    positions = stack.boundary_positions()
    amps = [RegionAmplitudes(positions[0], a_in, b_out)]
    right, left = a_in, b_out
    for i, m in enumerate(matrices):
        right, left = m.apply(right, left)
        amps.append(RegionAmplitudes(positions[i + 1], right, left))
    return ScatteringSolution(b_out=b_out, c_out=c_out, interface_amps=tuple(amps))


def field_profile(
    stack: OpticalStack, drive: BoundaryDrive, positions: Sequence[float]
) -> list[FieldSample]:
    """Amplitudes and intensity |A|^2 + |B|^2 at arbitrary positions.

    A position on a mirror belongs to the region on the mirror's right.
    Positions outside the stack use the outer-region amplitudes.
    """
    solution = solve_boundary(stack, drive)
    refs = [amp.position for amp in solution.interface_amps]
    k = drive.k
    samples = []
    for x in positions:
        idx = bisect_right(refs, x) - 1
        if idx < 0:
            idx = 0
        region = solution.interface_amps[idx]
        phase = cmath.exp(1j * k * (x - region.position))
        right = region.right_amp * phase
        left = region.left_amp / phase
        samples.append(FieldSample(x, right, left, abs(right) ** 2 + abs(left) ** 2))
    return samples


# ---------------------------------------------------------------------------
# Standard geometries


def symmetric_cavity(zeta: float, length: float = 1.0) -> OpticalStack:
    """Two identical mirrors enclosing one gap."""
    return OpticalStack([Mirror(zeta), Gap(length), Mirror(zeta)])


def three_mirror_chain(zeta: float, l1: float, l2: float) -> OpticalStack:
    """Two coupled cavities of lengths l1, l2 sharing the middle mirror."""
    return OpticalStack([Mirror(zeta), Gap(l1), Mirror(zeta), Gap(l2), Mirror(zeta)])


def four_mirror_chain(zeta: float, cavity_length: float, fiber_length: float) -> OpticalStack:
    """Cavity - fiber - cavity chain: four identical mirrors, three gaps.

    Gap interiors map to region indices 1 (left cavity), 3 (fiber) and
    5 (right cavity), per ``OpticalStack.gap_region_indices``.
    """
    return OpticalStack(
        [
            Mirror(zeta),
            Gap(cavity_length),
            Mirror(zeta),
            Gap(fiber_length),
            Mirror(zeta),
            Gap(cavity_length),
            Mirror(zeta),
        ]
    )


# ---------------------------------------------------------------------------
# Vectorized internals used by the sweep engine.  Matrices are represented as
# four complex ndarrays broadcast over the wavenumber grid.


def _element_matrix_arrays(element: StackElement, k: np.ndarray):
    if isinstance(element, Mirror):
        iz = 1j * element.zeta
        one = np.ones_like(k, dtype=complex)
        return (1.0 + iz) * one, iz * one, -iz * one, (1.0 - iz) * one
    phase = np.exp(1j * k * element.length)
    zero = np.zeros_like(k, dtype=complex)
    return phase, zero, zero, 1.0 / phase


def _matmul_arrays(a, b):
    a11, a12, a21, a22 = a
    b11, b12, b21, b22 = b
    return (
        a11 * b11 + a12 * b21,
        a11 * b12 + a12 * b22,
        a21 * b11 + a22 * b21,
        a21 * b12 + a22 * b22,
    )


def _compose_arrays(stack: OpticalStack, k: np.ndarray):
    one = np.ones_like(k, dtype=complex)
    zero = np.zeros_like(k, dtype=complex)
    total = (one, zero, zero, one)
    for e in stack.elements:
        total = _matmul_arrays(_element_matrix_arrays(e, k), total)
    return total


def transmission_sweep(stack: OpticalStack, k: np.ndarray) -> np.ndarray:
    """Normalized transmitted intensity |c_out/a_in|^2 with single-sided drive."""
    k = np.asarray(k, dtype=float)
    _, _, _, m22 = _compose_arrays(stack, k)
    return 1.0 / np.abs(m22) ** 2


def region_amplitude_sweep(stack: OpticalStack, k: np.ndarray, a_in, d_in):
    """Per-region amplitude pairs over a wavenumber grid.

    Returns a list of (right_amp, left_amp) ndarray pairs, one per region,
    in the same order as ``solve_boundary``'s interface_amps.  ``a_in`` and
    ``d_in`` may be scalars or arrays broadcastable against ``k``.
    """
    k = np.asarray(k, dtype=float)
    per_element = [_element_matrix_arrays(e, k) for e in stack.elements]
    one = np.ones_like(k, dtype=complex)
    zero = np.zeros_like(k, dtype=complex)
    total = (one, zero, zero, one)
    for m in per_element:
        total = _matmul_arrays(m, total)
    _, m12, m21, m22 = total
    a = np.asarray(a_in, dtype=complex) * one
    d = np.asarray(d_in, dtype=complex) * one
    b_out = (d - m21 * a) / m22
    regions = [(a, b_out)]
    right, left = a, b_out
    for m11, m12, m21, m22 in per_element:
        right, left = m11 * right + m12 * left, m21 * right + m22 * left
        regions.append((right, left))
    return regions
