import math

import numpy as np
import pytest

from cascavity import (
    BoundaryDrive,
    Gap,
    InvalidParameterError,
    Mirror,
    OpticalStack,
    TransferMatrix,
    compose,
    field_profile,
    four_mirror_chain,
    mirror_matrix,
    propagation_matrix,
    reflectivity,
    solve_boundary,
    symmetric_cavity,
    three_mirror_chain,
    transmissivity,
)
from cascavity.scattering import region_amplitude_sweep, transmission_sweep


def brute_force_peak(stack, lo, hi, samples=20001, tol=1e-13):
    """Golden-section refinement of the transmission maximum; the sweep oracle."""
    ks = np.linspace(lo, hi, samples)
    t = transmission_sweep(stack, ks)
    i = int(np.argmax(t))
    a, b = ks[max(i - 2, 0)], ks[min(i + 2, samples - 1)]
    gr = (math.sqrt(5) - 1) / 2
    c, d = b - gr * (b - a), a + gr * (b - a)
    fc = transmission_sweep(stack, np.array([c]))[0]
    fd = transmission_sweep(stack, np.array([d]))[0]
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - gr * (b - a)
            fc = transmission_sweep(stack, np.array([c]))[0]
        else:
            a, c, fc = c, d, fd
            d = a + gr * (b - a)
            fd = transmission_sweep(stack, np.array([d]))[0]
    k = 0.5 * (a + b)
    return k, transmission_sweep(stack, np.array([k]))[0]


class TestMirrorMatrix:
    def test_zero_polarizability_is_identity(self):
        m = mirror_matrix(0.0)
        assert (m.m11, m.m12, m.m21, m.m22) == (1 + 0j, 0j, 0j, 1 + 0j)

    def test_elements_at_zeta_5(self):
        # conjugate-consistent convention: the matrix that reproduces
        # r = i*zeta/(1 - i*zeta) under (C, D) = M (A, B)
        m = mirror_matrix(5.0)
        assert m.m11 == 1 + 5j
        assert m.m12 == 5j
        assert m.m21 == -5j
        assert m.m22 == 1 - 5j

    def test_determinant_exactly_one(self):
        for zeta in (-3.0, 0.0, 0.7, 5.0, 50.0):
            assert mirror_matrix(zeta).determinant == 1 + 0j

    def test_single_mirror_transmission_zeta_1(self):
        # analytic inversion of the boundary problem: c_out = t(1) = (1+i)/2
        sol = solve_boundary(OpticalStack([Mirror(1.0)]), BoundaryDrive(1.0, 0.0, 1.0))
        assert sol.c_out == pytest.approx((1 + 1j) / 2, abs=1e-15)
        assert abs(sol.c_out) ** 2 == pytest.approx(0.5, abs=1e-15)

    def test_rejects_non_finite(self):
        with pytest.raises(InvalidParameterError):
            mirror_matrix(math.inf)
        with pytest.raises(InvalidParameterError):
            Mirror(math.nan)


class TestReflectivityTransmissivity:
    def test_zeta_5_power_reflectivity(self):
        assert abs(reflectivity(5.0)) ** 2 == pytest.approx(25 / 26, rel=1e-14)

    def test_transparent_limit(self):
        assert reflectivity(0.0) == 0
        assert transmissivity(0.0) == 1

    def test_half_half_at_zeta_1(self):
        assert abs(reflectivity(1.0)) ** 2 == pytest.approx(0.5, rel=1e-14)
        assert abs(transmissivity(1.0)) ** 2 == pytest.approx(0.5, rel=1e-14)

    def test_matches_mirror_matrix_inversion(self):
        for zeta in (0.3, 1.0, 5.0, -2.0):
            m = mirror_matrix(zeta)
            assert -m.m21 / m.m22 == pytest.approx(reflectivity(zeta), abs=1e-15)
            assert 1 / m.m22 == pytest.approx(transmissivity(zeta), abs=1e-15)

    def test_lossless_partition(self):
        for zeta in np.linspace(-100, 100, 401):
            total = abs(reflectivity(zeta)) ** 2 + abs(transmissivity(zeta)) ** 2
            assert abs(total - 1.0) < 1e-14


class TestPropagationMatrix:
    def test_full_wavelength_is_identity(self):
        m = propagation_matrix(2 * math.pi, 1.0)
        assert m.m11 == pytest.approx(1.0, abs=1e-15)
        assert m.m22 == pytest.approx(1.0, abs=1e-15)
        assert m.m12 == 0 and m.m21 == 0

    def test_half_wave_phase(self):
        m = propagation_matrix(math.pi, 1.0)
        assert m.m11 == pytest.approx(-1.0, abs=1e-15)
        assert m.m22 == pytest.approx(-1.0, abs=1e-15)

    def test_direct_evaluation(self):
        m = propagation_matrix(1.0, 0.5)
        assert m.m11 == pytest.approx(np.exp(0.5j), abs=1e-15)
        assert m.m22 == pytest.approx(np.exp(-0.5j), abs=1e-15)

    def test_rejects_nonpositive_arguments(self):
        with pytest.raises(InvalidParameterError):
            propagation_matrix(0.0, 1.0)
        with pytest.raises(InvalidParameterError):
            propagation_matrix(1.0, -1.0)
        with pytest.raises(InvalidParameterError):
            Gap(0.0)


class TestCompose:
    def test_single_mirror(self):
        assert compose(OpticalStack([Mirror(5.0)]), 2.0) == mirror_matrix(5.0)

    def test_transparent_mirrors_reduce_to_gap(self):
        stack = OpticalStack([Mirror(0.0), Gap(0.7), Mirror(0.0)])
        got = compose(stack, 3.1)
        want = propagation_matrix(3.1, 0.7)
        assert got.m11 == pytest.approx(want.m11, abs=1e-15)
        assert got.m22 == pytest.approx(want.m22, abs=1e-15)

    def test_left_to_right_order(self):
        # stack [X, Y] must compose as matrix(Y) @ matrix(X)
        x, y = Mirror(2.0), Gap(0.3)
        stack = OpticalStack([x, y])
        k = 1.7
        want = propagation_matrix(k, 0.3) @ mirror_matrix(2.0)
        got = compose(stack, k)
        for attr in ("m11", "m12", "m21", "m22"):
            assert getattr(got, attr) == pytest.approx(getattr(want, attr), abs=1e-15)

    def test_symmetric_cavity_full_transmission_on_resonance(self):
        # brute-force scan for the transmission maximum of the lossless cavity
        stack = symmetric_cavity(5.0)
        _, peak = brute_force_peak(stack, 10 * math.pi - 1.0, 10 * math.pi + 1.0)
        assert peak == pytest.approx(1.0, abs=1e-12)

    def test_empty_stack_is_identity(self):
        m = compose(OpticalStack([]), 1.0)
        assert (m.m11, m.m12, m.m21, m.m22) == (1 + 0j, 0j, 0j, 1 + 0j)


class TestSolveBoundary:
    def test_single_mirror_recovers_r_and_t(self):
        sol = solve_boundary(OpticalStack([Mirror(5.0)]), BoundaryDrive(1.0, 0.0, 1.0))
        assert sol.b_out == pytest.approx(reflectivity(5.0), abs=1e-15)
        assert sol.c_out == pytest.approx(transmissivity(5.0), abs=1e-15)

    def test_zero_drive_gives_zero_field(self):
        stack = three_mirror_chain(5.0, 1.0, 2.0)
        sol = solve_boundary(stack, BoundaryDrive(0.0, 0.0, 4.0))
        assert sol.b_out == 0 and sol.c_out == 0
        assert all(a.right_amp == 0 and a.left_amp == 0 for a in sol.interface_amps)

    def test_flux_conservation_at_cascade_resonance(self):
        stack = four_mirror_chain(5.0, 1.0, 5.0)
        k0, _ = brute_force_peak(stack, 31.4, 31.65)
        sol = solve_boundary(stack, BoundaryDrive(1.0, 0.0, k0))
        flux = abs(sol.b_out) ** 2 + abs(sol.c_out) ** 2
        assert flux == pytest.approx(1.0, abs=1e-12)

    def test_linearity_in_the_drive(self):
        stack = three_mirror_chain(3.0, 1.0, 1.0)
        lam = 0.7 - 1.3j
        base = solve_boundary(stack, BoundaryDrive(1.0, 0.5j, 9.4))
        scaled = solve_boundary(stack, BoundaryDrive(lam, 0.5j * lam, 9.4))
        assert scaled.b_out == pytest.approx(lam * base.b_out, rel=1e-12)
        assert scaled.c_out == pytest.approx(lam * base.c_out, rel=1e-12)
        for a, b in zip(base.interface_amps, scaled.interface_amps):
            assert b.right_amp == pytest.approx(lam * a.right_amp, rel=1e-12)
            assert b.left_amp == pytest.approx(lam * a.left_amp, rel=1e-12)

    def test_region_continuity_forward_vs_backward(self):
        # recompute region amplitudes from the right boundary through inverse
        # matrices; both routes must agree
        from cascavity.scattering import element_matrix

        stack = four_mirror_chain(5.0, 1.0, 5.0)
        drive = BoundaryDrive(1.0, 0.3 - 0.4j, 31.6)
        sol = solve_boundary(stack, drive)
        right, left = sol.interface_amps[-1].right_amp, sol.interface_amps[-1].left_amp
        assert right == pytest.approx(sol.c_out, abs=1e-12)
        assert left == pytest.approx(drive.d_in, abs=1e-12)
        for i in range(len(stack.elements) - 1, -1, -1):
            m = element_matrix(stack.elements[i], drive.k)
            inv = TransferMatrix(m.m22, -m.m12, -m.m21, m.m11)  # det = 1
            right, left = inv.apply(right, left)
            assert right == pytest.approx(sol.interface_amps[i].right_amp, abs=1e-9)
            assert left == pytest.approx(sol.interface_amps[i].left_amp, abs=1e-9)


class TestFieldProfile:
    def test_free_space_unity_everywhere(self):
        samples = field_profile(OpticalStack([]), BoundaryDrive(1.0, 0.0, 2.0), [-5.0, 0.0, 3.3])
        for s in samples:
            assert s.intensity == pytest.approx(1.0, abs=1e-14)

    def test_intracavity_enhancement_on_resonance(self):
        zeta = 5.0
        stack = symmetric_cavity(zeta)
        k0, _ = brute_force_peak(stack, 31.4, 31.8)
        (sample,) = field_profile(stack, BoundaryDrive(1.0, 0.0, k0), [0.5])
        assert sample.intensity > 1.0
        # forward amplitude oracle: |A|^2 = 1/|t_mirror|^2 at full transmission
        assert abs(sample.right_amp) ** 2 == pytest.approx(
            1 / abs(transmissivity(zeta)) ** 2, rel=1e-9
        )
        assert sample.intensity == pytest.approx(1 + 2 * zeta**2, rel=1e-9)

    def test_fiber_region_small_at_middle_resonance(self):
        # the middle cascade resonance barely excites the fiber region
        stack = four_mirror_chain(5.0, 1.0, 4.975023749892274)
        omega_c = 10 * math.pi + math.atan2(1, 5.0)
        g = 1 / (2 * math.sqrt(4.975023749892274) * math.sqrt(26))
        side = omega_c + math.sqrt(2) * g
        mid_fiber = field_profile(stack, BoundaryDrive(1.0, 0.0, omega_c), [3.0])[0].intensity
        side_fiber = field_profile(stack, BoundaryDrive(1.0, 0.0, side), [3.0])[0].intensity
        assert mid_fiber < 0.1 * side_fiber

    def test_position_on_mirror_uses_right_region(self):
        stack = symmetric_cavity(5.0, 1.0)
        drive = BoundaryDrive(1.0, 0.0, 2.0)
        sol = solve_boundary(stack, drive)
        at_mirror = field_profile(stack, drive, [1.0])[0]
        outside = sol.interface_amps[-1]
        assert at_mirror.right_amp == pytest.approx(outside.right_amp, abs=1e-15)
        assert at_mirror.left_amp == pytest.approx(outside.left_amp, abs=1e-15)

    def test_outside_positions_propagate_outer_amplitudes(self):
        stack = symmetric_cavity(2.0)
        drive = BoundaryDrive(1.0, 0.0, 3.0)
        left = field_profile(stack, drive, [-2.0])[0]
        assert abs(left.right_amp) == pytest.approx(1.0, abs=1e-14)
        sol = solve_boundary(stack, drive)
        assert left.left_amp == pytest.approx(sol.b_out * np.exp(1j * 3.0 * 2.0), abs=1e-14)


class TestStackGeometry:
    def test_boundary_positions_and_gap_regions(self):
        stack = four_mirror_chain(5.0, 1.0, 5.0)
        assert stack.boundary_positions() == [0.0, 0.0, 1.0, 1.0, 6.0, 6.0, 7.0, 7.0]
        assert stack.gap_region_indices() == [1, 3, 5]
        assert stack.total_length == 7.0
        assert stack.mirror_count == 4

    def test_rejects_foreign_elements(self):
        with pytest.raises(InvalidParameterError):
            OpticalStack([Mirror(1.0), "gap"])


class TestRandomizedInvariants:
    """Smaller-scale randomized checks; the acceptance suite runs the full set."""

    def _random_stack(self, rng):
        n = rng.integers(1, 9)
        elems = []
        for _ in range(n):
            if rng.random() < 0.5:
                elems.append(Mirror(float(rng.uniform(0.5, 10.0))))
            else:
                elems.append(Gap(float(rng.uniform(0.05, 4.0))))
        return OpticalStack(elems)

    def test_flux_and_reciprocity(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            stack = self._random_stack(rng)
            k = float(rng.uniform(0.5, 30.0))
            a = complex(rng.normal(), rng.normal())
            d = complex(rng.normal(), rng.normal())
            sol = solve_boundary(stack, BoundaryDrive(a, d, k))
            flux_in = abs(a) ** 2 + abs(d) ** 2
            flux_out = abs(sol.b_out) ** 2 + abs(sol.c_out) ** 2
            assert abs(flux_in - flux_out) < 1e-12 * max(flux_in, 1.0)
            fwd = solve_boundary(stack, BoundaryDrive(1.0, 0.0, k))
            bwd = solve_boundary(stack, BoundaryDrive(0.0, 1.0, k))
            assert abs(abs(fwd.c_out) ** 2 - abs(bwd.b_out) ** 2) < 1e-12

    def test_vectorized_sweep_matches_scalar_solve(self):
        rng = np.random.default_rng(11)
        stack = self._random_stack(rng)
        ks = np.linspace(1.0, 4.0, 7)
        sweep = transmission_sweep(stack, ks)
        regions = region_amplitude_sweep(stack, ks, 1.0, 0.25j)
        for i, k in enumerate(ks):
            one_sided = solve_boundary(stack, BoundaryDrive(1.0, 0.0, float(k)))
            assert sweep[i] == pytest.approx(abs(one_sided.c_out) ** 2, rel=1e-12)
            sol = solve_boundary(stack, BoundaryDrive(1.0, 0.25j, float(k)))
            for j, amp in enumerate(sol.interface_amps):
                assert regions[j][0][i] == pytest.approx(amp.right_amp, rel=1e-12, abs=1e-12)
                assert regions[j][1][i] == pytest.approx(amp.left_amp, rel=1e-12, abs=1e-12)
