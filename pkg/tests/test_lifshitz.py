import math

import numpy as np
import pytest

from tdcasimir.constants import CONSTANTS
from tdcasimir.excitation import Temperature
from tdcasimir.lifshitz import (
    PlanarSystem,
    cp_force_retarded,
    cp_force_thermal,
    greens_planar,
    ideal_casimir_pressure,
    lifshitz_pressure,
    nonretarded_pressure,
    nonretarded_pressure_drude,
    reference_components,
    reference_f,
    thermal_pressure,
)
from tdcasimir.materials import DrudeModel, SILVER

T0 = Temperature(0.0)
T300 = Temperature(300.0)


class TestAsymptoticFormulas:
    def test_ideal_casimir_value(self):
        # -hbar c pi^2 / 240 L^4 at L = 1 um
        want = -CONSTANTS.hbar * CONSTANTS.c * math.pi**2 / 240.0 * 1e24
        assert ideal_casimir_pressure(1e-6) == pytest.approx(want, rel=1e-14)
        assert ideal_casimir_pressure(1e-6) == pytest.approx(-1.300e-3, rel=1e-3)

    def test_ideal_scaling(self):
        assert ideal_casimir_pressure(0.5e-6) / ideal_casimir_pressure(1e-6) == pytest.approx(16.0)

    def test_thermal_value(self):
        assert thermal_pressure(10e-6, T300) == pytest.approx(-1.981e-7, rel=1e-3)
        assert thermal_pressure(10e-6, Temperature(600.0)) == pytest.approx(
            2 * thermal_pressure(10e-6, T300), rel=1e-14
        )

    def test_cp_thermal(self):
        alpha0 = 2.0862e-29
        # linear in alpha(0); frozen arithmetic value of the formula itself
        assert cp_force_thermal(20e-6, T300, 2 * alpha0) == pytest.approx(
            2 * cp_force_thermal(20e-6, T300, alpha0), rel=1e-14
        )
        assert cp_force_thermal(20e-6, T300, alpha0) == pytest.approx(-3.641e-21, rel=1e-3)

    def test_cp_retarded(self):
        alpha0 = 2.0862e-29
        assert cp_force_retarded(20e-6, 2 * alpha0) == pytest.approx(
            2 * cp_force_retarded(20e-6, alpha0), rel=1e-14
        )
        assert cp_force_retarded(20e-6, alpha0) == pytest.approx(-8.846e-22, rel=1e-3)

    def test_cp_crossover_ratio(self):
        # thermal/retarded = (pi/2) L k_B T / (hbar c), linear in L
        alpha0 = 1e-29
        for L in (5e-6, 10e-6, 40e-6):
            ratio = cp_force_thermal(L, T300, alpha0) / cp_force_retarded(L, alpha0)
            want = 0.5 * math.pi * L * CONSTANTS.k_B * 300.0 / (CONSTANTS.hbar * CONSTANTS.c)
            assert ratio == pytest.approx(want, rel=1e-12)


class TestLifshitzPressure:
    def test_ideal_mirror_limit(self):
        mirror = DrudeModel(omega_p=1e20, gamma_d=0.0)
        sys = PlanarSystem(mirror, 1e-6, T0)
        assert lifshitz_pressure(sys) == pytest.approx(ideal_casimir_pressure(1e-6), rel=1e-4)

    def test_silver_approaches_casimir_from_below(self):
        sys = PlanarSystem(SILVER, 5e-6, T0)
        ratio = lifshitz_pressure(sys) / ideal_casimir_pressure(5e-6)
        assert 0.95 < ratio < 1.0

    def test_silver_thermal_regime(self):
        sys = PlanarSystem(SILVER, 20e-6, T300)
        ratio = lifshitz_pressure(sys) / thermal_pressure(20e-6, T300)
        assert 0.9 < ratio < 1.1

    def test_attractive_and_monotone(self):
        values = [lifshitz_pressure(PlanarSystem(SILVER, L, T300)) for L in (50e-9, 100e-9, 200e-9)]
        assert all(v < 0 for v in values)
        assert abs(values[0]) > abs(values[1]) > abs(values[2])

    def test_matsubara_truncation_controlled(self):
        sys = PlanarSystem(SILVER, 100e-9, T300)
        a = lifshitz_pressure(sys, tol=1e-9)
        b = lifshitz_pressure(sys, tol=1e-11)
        assert abs(a / b - 1) < 1e-8


class TestNonretarded:
    def test_silver_short_distance_ratio(self):
        sys = PlanarSystem(SILVER, 1e-9, T0)
        ratio = lifshitz_pressure(sys) / nonretarded_pressure(sys)
        assert 0.97 < ratio < 1.0

    def test_closed_form_agreement(self):
        sys = PlanarSystem(SILVER, 1e-9, T0)
        a, b = nonretarded_pressure(sys), nonretarded_pressure_drude(sys)
        # both lines agree within O(Gamma/omega_p) of each other
        assert abs(a / b - 1) < SILVER.gamma_d / SILVER.omega_p

    def test_temperature_independent(self):
        a = nonretarded_pressure(PlanarSystem(SILVER, 2e-9, T0))
        b = nonretarded_pressure(PlanarSystem(SILVER, 2e-9, T300))
        assert a == b


class TestGreensPlanar:
    def test_vacuum_limit(self):
        weak = DrudeModel(omega_p=1e3, gamma_d=0.0)
        sys = PlanarSystem(weak, 100e-9, T300)
        strong = PlanarSystem(SILVER, 100e-9, T300)
        xi = T300.omega_th
        for sigma in ("E", "H"):
            for comp in ("par", "perp"):
                weak_val = greens_planar(sigma, comp, 50e-9, sys, xi)
                ref = abs(greens_planar(sigma, comp, 50e-9, strong, xi))
                assert abs(weak_val) < 1e-12 * ref

    def test_z_symmetry(self):
        sys = PlanarSystem(SILVER, 100e-9, T300)
        xi = 3 * T300.omega_th
        for sigma in ("E", "H"):
            for comp in ("par", "perp"):
                a = greens_planar(sigma, comp, 20e-9, sys, xi)
                b = greens_planar(sigma, comp, 80e-9, sys, xi)
                assert a == pytest.approx(b, rel=1e-8)

    def test_domain(self):
        sys = PlanarSystem(SILVER, 100e-9, T300)
        with pytest.raises(ValueError):
            greens_planar("E", "par", 101e-9, sys, 1e15)
        with pytest.raises(ValueError):
            greens_planar("E", "par", 50e-9, sys, 0.0)

    def test_perfect_mirror_image_sum(self):
        # Independent oracle: expand 1/(1 - r^2 e^(-2 kappa L)) into image
        # sums; for r_TM = 1, r_TE = -1 every term has a closed form since
        # int_k^inf kappa^2 e^(-2 kappa a) dkappa and int_k^inf e^(-2 kappa a)
        # dkappa are elementary.
        mirror = DrudeModel(omega_p=1e21, gamma_d=0.0)
        L, z = 100e-9, 37e-9
        sys = PlanarSystem(mirror, L, T300)
        xi = 5 * T300.omega_th
        k = xi / CONSTANTS.c

        def int_e(a):
            return math.exp(-2 * k * a) / (2 * a)

        def int_k2(a):
            return math.exp(-2 * k * a) * (k**2 / (2 * a) + k / (2 * a**2) + 1 / (4 * a**3))

        def img_par(r_big, r_small):
            # (1/8pi) [ (c/xi)^2 * TM-slot + TE-slot ] with r_TM-slot = r_big
            total = 0.0
            for n in range(60):
                a_l = (n + 1) * L
                a_z1, a_z2 = n * L + z, (n + 1) * L - z
                rb, rs = r_big ** (2 * n), r_small ** (2 * n)
                total += (CONSTANTS.c / xi) ** 2 * rb * (
                    2 * r_big**2 * int_k2(a_l) - r_big * (int_k2(a_z1) + int_k2(a_z2))
                )
                total += rs * (2 * r_small**2 * int_e(a_l) + r_small * (int_e(a_z1) + int_e(a_z2)))
            return total / (8 * math.pi)

        want = img_par(1.0, -1.0)
        got = greens_planar("E", "par", z, sys, xi)
        assert got == pytest.approx(want, rel=1e-4)


class TestReferenceComponents:
    @pytest.mark.parametrize("L", [10e-9, 100e-9, 1e-6])
    @pytest.mark.parametrize("kelvin", [0.0, 300.0])
    def test_stress_matches_lifshitz(self, L, kelvin):
        sys = PlanarSystem(SILVER, L, Temperature(kelvin))
        comps = reference_components(sys)
        tzz = sum(0.5 * comps[(s, "perp")].value - comps[(s, "par")].value for s in ("E", "H"))
        assert tzz == pytest.approx(-lifshitz_pressure(sys), rel=1e-6)

    def test_vacuum_zero(self):
        # At T = 0 the no-interface limit vanishes with the coupling.  (At
        # finite T it cannot: the Drude m = 0 term has r_TM -> 1 for any
        # omega_p > 0, which is the documented static prescription.)
        weak = DrudeModel(omega_p=1e3, gamma_d=0.0)
        sys = PlanarSystem(weak, 100e-9, T0)
        scale = abs(reference_f("E", "par", 50e-9, PlanarSystem(SILVER, 100e-9, T0)).value)
        assert abs(reference_f("E", "par", 50e-9, sys).value) < 1e-10 * scale

    def test_component_metadata(self):
        c = reference_f("H", "perp", 50e-9, PlanarSystem(SILVER, 100e-9, T300))
        assert (c.sigma, c.comp, c.z) == ("H", "perp", 50e-9)
