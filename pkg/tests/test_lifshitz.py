import math

import pytest

from casimir_delta.dielectric import (
    ApproachVariant,
    IdealMetal,
    Plasma,
    reflection_coefficients,
)
from casimir_delta.lifshitz import (
    ConvergenceError,
    MatsubaraSpec,
    QuadratureSpec,
    _reflectivity_squares,
    matsubara_frequency,
    plate_free_energy_per_area,
    plate_pressure,
    sphere_plate_force_pfa,
    te_zero_frequency_sphere_term,
)
from casimir_delta.quantities import CODATA2018

AU = Plasma(136e-9)
PLASMA = ApproachVariant.PLASMA_ZERO_FREQUENCY
MOD_TE = ApproachVariant.MODIFIED_TE

# 1 K stands in for T -> 0: thermal terms are ~(T/T_eff)^3 ~ 1e-8 there.
# Tail tolerance 1e-7 keeps the ~1e4-term cold sums quick while staying three
# orders below the 0.1% bands being asserted.
COLD = MatsubaraSpec(relative_tail_tolerance=1e-7)


class TestIdealMetalLimits:
    def test_pressure_zero_temperature(self):
        a = 1e-6
        p = plate_pressure(a, 1.0, IdealMetal(), matsubara=COLD)
        ref = -math.pi ** 2 * CODATA2018.hbar * CODATA2018.c / (240.0 * a ** 4)
        assert p == pytest.approx(ref, rel=1e-3)
        assert p == pytest.approx(-1.3001257724477534e-3, rel=1e-3)

    def test_free_energy_zero_temperature(self):
        a = 1e-6
        e = plate_free_energy_per_area(a, 1.0, IdealMetal(), matsubara=COLD)
        ref = -math.pi ** 2 * CODATA2018.hbar * CODATA2018.c / (720.0 * a ** 3)
        assert e == pytest.approx(ref, rel=1e-3)

    def test_sphere_force_zero_temperature(self):
        a, R = 1e-6, 1e-3
        f = sphere_plate_force_pfa(a, 1.0, R, IdealMetal(), matsubara=COLD)
        ref = -math.pi ** 3 * CODATA2018.hbar * CODATA2018.c * R / (360.0 * a ** 3)
        assert f == pytest.approx(ref, rel=1e-3)


class TestPlasmaEngine:
    def test_zero_temperature_conductivity_correction(self):
        # independent oracle: the third-order finite-conductivity expansion
        # 1 - (16/3)d + 24 d^2 - (640/7)(1 - pi^2/210) d^3, d = delta/a
        a = 1e-6
        d = (136e-9 / (2 * math.pi)) / a
        eta = 1 - 16 / 3 * d + 24 * d * d - (640 / 7) * (1 - math.pi ** 2 / 210) * d ** 3
        f0 = -math.pi ** 2 * CODATA2018.hbar * CODATA2018.c / (240.0 * a ** 4)
        p = plate_pressure(a, 1.0, AU, matsubara=COLD)
        assert p / f0 == pytest.approx(eta, rel=2e-4)

    def test_finite_conductivity_weakens_attraction(self):
        for a in (0.5e-6, 1e-6):
            p_plasma = plate_pressure(a, 300.0, AU)
            p_ideal = plate_pressure(a, 300.0, IdealMetal())
            assert p_plasma < 0.0 and p_ideal < 0.0
            assert abs(p_plasma) < abs(p_ideal)

    def test_magnitude_decreases_with_separation(self):
        pressures = [plate_pressure(a, 300.0, AU) for a in (0.3e-6, 0.6e-6, 1.2e-6)]
        assert all(p < 0 for p in pressures)
        assert all(abs(x) > abs(y) for x, y in zip(pressures, pressures[1:]))

    def test_stable_under_tighter_truncation(self):
        loose = plate_pressure(1e-6, 300.0, AU, matsubara=MatsubaraSpec(1e-6))
        tight = plate_pressure(1e-6, 300.0, AU, matsubara=MatsubaraSpec(1e-12))
        assert loose == pytest.approx(tight, rel=1e-5)

    def test_convergence_error_when_capped(self):
        with pytest.raises(ConvergenceError):
            plate_pressure(1e-6, 1.0, AU, matsubara=MatsubaraSpec(1e-9, max_terms=3))


class TestApproachDifference:
    def test_equals_zero_frequency_te_term(self):
        # the two prescriptions differ by exactly the half-weighted n = 0 TE
        # term, computable independently by direct quadrature
        a, T, R = 0.5e-6, 300.0, 1e-3
        f_plasma = sphere_plate_force_pfa(a, T, R, AU, PLASMA)
        f_mod = sphere_plate_force_pfa(a, T, R, AU, MOD_TE)
        direct = te_zero_frequency_sphere_term(a, T, R, 136e-9)
        assert f_plasma - f_mod == pytest.approx(direct, rel=1e-9)

    def test_ideal_metal_approaches_also_differ(self):
        e_plasma = plate_free_energy_per_area(1e-6, 300.0, IdealMetal(), PLASMA)
        e_mod = plate_free_energy_per_area(1e-6, 300.0, IdealMetal(), MOD_TE)
        assert abs(e_plasma) > abs(e_mod)


class TestProximityForce:
    def test_two_pi_r_identity(self):
        a, T = 0.5e-6, 300.0
        energy = plate_free_energy_per_area(a, T, AU)
        force = sphere_plate_force_pfa(a, T, 1e-3, AU)
        assert force == 2.0 * math.pi * 1e-3 * energy

    def test_linear_in_radius(self):
        f1 = sphere_plate_force_pfa(0.5e-6, 300.0, 1e-3, AU)
        f2 = sphere_plate_force_pfa(0.5e-6, 300.0, 2e-3, AU)
        assert f2 == pytest.approx(2.0 * f1, rel=1e-15)
        assert f1 / 1e-3 == pytest.approx(f2 / 2e-3, rel=1e-15)


class TestZeroFrequencyTeTerm:
    def test_ideal_limit(self):
        # lambda_p = 1e-12 m leaves skin-depth corrections of ~6e-7 relative
        # at a = 1 um, inside the 1e-6 band around the ideal closed form
        a, T, R = 1e-6, 300.0, 1e-3
        val = te_zero_frequency_sphere_term(a, T, R, 1e-12)
        ref = -CODATA2018.k_B * T * CODATA2018.zeta3 * R / (8.0 * a * a)
        assert val == pytest.approx(ref, rel=1e-6)

    def test_gold_matches_asymptotic_at_half_micron(self):
        a, T, R = 0.5e-6, 300.0, 1e-3
        d = (136e-9 / (2 * math.pi)) / a
        asym = (
            -CODATA2018.k_B * T * CODATA2018.zeta3 * R / (8.0 * a * a)
            * (1 - 4 * d + 12 * d * d)
        )
        val = te_zero_frequency_sphere_term(a, T, R, 136e-9)
        assert val == pytest.approx(asym, rel=5e-3)

    def test_expansion_degrades_below_half_micron(self):
        T, R = 300.0, 1e-3

        def rel_gap(a):
            d = (136e-9 / (2 * math.pi)) / a
            asym = (
                -CODATA2018.k_B * T * CODATA2018.zeta3 * R / (8.0 * a * a)
                * (1 - 4 * d + 12 * d * d)
            )
            val = te_zero_frequency_sphere_term(a, T, R, 136e-9)
            return abs(val - asym) / abs(val)

        gaps = [rel_gap(a) for a in (0.25e-6, 0.5e-6, 1.0e-6)]
        assert gaps[0] > gaps[1] > gaps[2]


class TestEngineInternals:
    def test_reflectivity_matches_dielectric_module(self):
        a, T = 0.5e-6, 300.0
        for n in (0, 1, 5):
            rsq = _reflectivity_squares(AU, PLASMA, n, T, a, CODATA2018)
            xi = matsubara_frequency(n, T)
            y_low = 2.0 * a * xi / CODATA2018.c
            for y in (y_low + 0.1, y_low + 2.0, y_low + 10.0):
                q = y / (2.0 * a)
                k_perp = math.sqrt(max(q * q - (xi / CODATA2018.c) ** 2, 0.0))
                pair = reflection_coefficients(AU, xi, k_perp)
                tm2, te2 = rsq(y)
                assert tm2 == pytest.approx(pair.r_TM ** 2, rel=1e-12)
                assert te2 == pytest.approx(pair.r_TE ** 2, rel=1e-12)

    def test_modified_te_zeroes_only_n0(self):
        a, T = 0.5e-6, 300.0
        tm2, te2 = _reflectivity_squares(AU, MOD_TE, 0, T, a, CODATA2018)(1.0)
        assert (tm2, te2) == (1.0, 0.0)
        tm2, te2 = _reflectivity_squares(AU, MOD_TE, 1, T, a, CODATA2018)(3.0)
        assert te2 > 0.0

    def test_matsubara_frequency(self):
        xi1 = matsubara_frequency(1, 300.0)
        assert xi1 == pytest.approx(
            2 * math.pi * CODATA2018.k_B * 300.0 / CODATA2018.hbar, rel=1e-15
        )
        assert matsubara_frequency(0, 300.0) == 0.0


class TestSpecValidation:
    def test_quadrature_spec_defaults(self):
        spec = QuadratureSpec()
        assert spec.relative_tolerance == 1e-9

    def test_domain_errors_propagate(self):
        with pytest.raises(ValueError):
            plate_pressure(-1e-6, 300.0, AU)
        with pytest.raises(ValueError):
            plate_pressure(1e-6, -5.0, AU)
        with pytest.raises(ValueError):
            sphere_plate_force_pfa(1e-6, 300.0, -1e-3, AU)
