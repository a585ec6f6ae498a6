"""Acceptance checklist: every quantitative claim the library is expected to
reproduce, each with a stable identifier, the measured value, the expected
band, and a pass flag. Shared by the test suite and the `validate` CLI
command."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .dielectric import ApproachVariant, IdealMetal, Plasma
from .lifshitz import (
    MatsubaraSpec,
    QuadratureSpec,
    plate_free_energy_per_area,
    plate_pressure,
    sphere_plate_force_pfa,
    te_zero_frequency_sphere_term,
)
from .perturbative import (
    plate_force_perturbative,
    sphere_force_perturbative,
    te_zero_frequency_asymptotic,
)
from .quantities import CODATA2018, Constants
from .scenarios import (
    DEFAULT_SEPARATION_GRID,
    DEFAULT_TEMPERATURE_GRID,
    TemperaturePair,
    delta_force_plates,
    delta_force_sphere,
    sweep_separation,
    sweep_temperature,
)
from .lifshitz import ParallelPlates, SpherePlate

AU_LAMBDA_P = 136e-9  # m


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    measured: float
    expected: str
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" [{self.detail}]" if self.detail else ""
        return f"{status} {self.check_id}: measured {self.measured:.6g}, expected {self.expected}{extra}"


@dataclass
class ValidationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: CheckResult) -> None:
        self.checks.append(check)


def _within(measured: float, target: float, rel: float) -> bool:
    return abs(measured - target) <= rel * abs(target)


def check_thermal_correction_percentages(constants: Constants = CODATA2018) -> list[CheckResult]:
    """Criteria 1 and 2: ideal-metal relative thermal corrections at 300 K."""
    out = []

    def plate_corr(a: float) -> float:
        return plate_force_perturbative(a, 300.0, 0.0, constants).terms.thermal_ideal

    def sphere_corr(a: float) -> float:
        return sphere_force_perturbative(a, 300.0, 1e-3, 0.0, constants).terms.thermal_ideal

    for check_id, value, target in [
        ("pp-thermal-1um=0.16pct", plate_corr(1e-6), 0.0016),
        ("pp-thermal-2um=2.5pct", plate_corr(2e-6), 0.025),
        ("ps-thermal-1um=2.7pct", sphere_corr(1e-6), 0.027),
    ]:
        out.append(CheckResult(check_id, _within(value, target, 0.10), value, f"{target} +-10%"))

    v = sphere_corr(2e-6)
    out.append(
        CheckResult(
            "ps-thermal-2um-in-[17,19]pct",
            0.17 <= v <= 0.19,
            v,
            "[0.17, 0.19]",
            detail="exact-computation reference is 18.2%; the explicit truncation gives ~17.6%",
        )
    )
    return out


def check_figure_ratios(constants: Constants = CODATA2018) -> list[CheckResult]:
    """Criteria 3 and 4: small-over-large-separation difference-force ratios."""
    pair = TemperaturePair(300.0, 350.0)
    r_pp = abs(delta_force_plates(0.15e-6, pair, AU_LAMBDA_P, constants).delta_F) / abs(
        delta_force_plates(2e-6, pair, AU_LAMBDA_P, constants).delta_F
    )
    r_ps = abs(
        delta_force_sphere(0.15e-6, pair, 1e-3, AU_LAMBDA_P, constants=constants).delta_F
    ) / abs(delta_force_sphere(2e-6, pair, 1e-3, AU_LAMBDA_P, constants=constants).delta_F)
    return [
        CheckResult("fig1-ratio>9", 9.0 < r_pp < 10.0, r_pp, "(9, 10)"),
        CheckResult("fig2-ratio>2", 2.0 < r_ps < 2.5, r_ps, "(2, 2.5)"),
    ]


def check_approach_contrast(constants: Constants = CODATA2018) -> list[CheckResult]:
    """Criteria 5 and 6: the two prescriptions at a = 0.5 um, 300 -> 350 K."""
    out = []
    a, R = 0.5e-6, 2e-3
    pair = TemperaturePair(300.0, 350.0)
    plasma = delta_force_sphere(
        a, pair, R, AU_LAMBDA_P, ApproachVariant.PLASMA_ZERO_FREQUENCY, constants
    ).delta_F
    mod_te = delta_force_sphere(
        a, pair, R, AU_LAMBDA_P, ApproachVariant.MODIFIED_TE, constants
    ).delta_F
    ratio = abs(mod_te) / abs(plasma)
    out.append(CheckResult("fig3-modte/plasma-ratio>6", ratio > 6.0, ratio, "> 6"))
    out.append(CheckResult("fig3-modte-positive", mod_te > 0.0, mod_te, "> 0"))
    out.append(CheckResult("fig3-plasma-negative", plasma < 0.0, plasma, "< 0"))

    table = sweep_temperature(a, 300.0, AU_LAMBDA_P, R, DEFAULT_TEMPERATURE_GRID, constants)
    worst = 0.0
    for T2, pl, _, ideal in table.rows:
        if T2 == 300.0:
            continue  # both columns are exactly zero
        worst = max(worst, abs(ideal - pl) / abs(pl))
    out.append(
        CheckResult("fig3-ideal-within-10pct-of-plasma", worst <= 0.10, worst, "<= 0.10")
    )

    out.append(
        CheckResult(
            "magnitude-order-1e-13N",
            0.5e-13 <= abs(plasma) <= 2e-13,
            abs(plasma),
            "[0.5e-13, 2e-13] N",
        )
    )
    return out


def check_oracle_absolute(
    constants: Constants = CODATA2018,
    matsubara: MatsubaraSpec = MatsubaraSpec(),
    quadrature: QuadratureSpec = QuadratureSpec(),
) -> list[CheckResult]:
    """Criterion 7: perturbative plate force vs the Lifshitz pressure, 3%.

    The gap budget is the omitted conductivity remainder, which for gold is
    ~24 (delta/a)^2 at leading order: ~1.1% at 1 um but ~4.8% at 0.5 um, so
    the 0.5 um points exceed the stated 3% band by construction. They are
    reported honestly rather than widened.
    """
    out = []
    model = Plasma(AU_LAMBDA_P)
    for a in (0.5e-6, 0.7e-6, 1.0e-6):
        for T in (300.0, 350.0):
            oracle = plate_pressure(
                a, T, model, ApproachVariant.PLASMA_ZERO_FREQUENCY,
                matsubara, quadrature, constants,
            )
            pert = plate_force_perturbative(a, T, AU_LAMBDA_P, constants).value
            rel = abs(pert - oracle) / abs(oracle)
            out.append(
                CheckResult(
                    f"oracle-pp-abs-3pct-a={a * 1e6:g}um-T={T:g}K",
                    rel <= 0.03,
                    rel,
                    "<= 0.03",
                    detail="gap is the omitted second-order conductivity term",
                )
            )
    return out


def check_oracle_difference(
    constants: Constants = CODATA2018,
    matsubara: MatsubaraSpec = MatsubaraSpec(),
    quadrature: QuadratureSpec = QuadratureSpec(),
) -> list[CheckResult]:
    """Criterion 8: closed-form difference forces vs engine finite differences."""
    out = []
    model = Plasma(AU_LAMBDA_P)
    pair = TemperaturePair(300.0, 350.0)
    R = 1e-3
    for a in (0.3e-6, 0.5e-6, 1.0e-6):
        eng_pp = plate_pressure(
            a, pair.T2, model, matsubara=matsubara, quadrature=quadrature, constants=constants
        ) - plate_pressure(
            a, pair.T1, model, matsubara=matsubara, quadrature=quadrature, constants=constants
        )
        ana_pp = delta_force_plates(a, pair, AU_LAMBDA_P, constants).delta_F
        rel_pp = abs(ana_pp - eng_pp) / abs(eng_pp)
        out.append(
            CheckResult(
                f"oracle-dFpp-5pct-a={a * 1e6:g}um", rel_pp <= 0.05, rel_pp, "<= 0.05"
            )
        )

        eng_ps = sphere_plate_force_pfa(
            a, pair.T2, R, model, matsubara=matsubara, quadrature=quadrature, constants=constants
        ) - sphere_plate_force_pfa(
            a, pair.T1, R, model, matsubara=matsubara, quadrature=quadrature, constants=constants
        )
        ana_ps = delta_force_sphere(a, pair, R, AU_LAMBDA_P, constants=constants).delta_F
        rel_ps = abs(ana_ps - eng_ps) / abs(eng_ps)
        out.append(
            CheckResult(
                f"oracle-dFps-5pct-a={a * 1e6:g}um", rel_ps <= 0.05, rel_ps, "<= 0.05"
            )
        )
    return out


def check_te_zero_frequency(constants: Constants = CODATA2018) -> list[CheckResult]:
    """Criterion 9: zero-frequency TE quadrature vs its asymptotic expansion."""
    out = []
    R, T = 1e-3, 300.0
    for a in (0.5e-6, 1.0e-6, 2.0e-6):
        quad_val = te_zero_frequency_sphere_term(a, T, R, AU_LAMBDA_P, constants=constants)
        asym = te_zero_frequency_asymptotic(a, T, R, AU_LAMBDA_P, constants)
        rel = abs(asym - quad_val) / abs(quad_val)
        out.append(
            CheckResult(
                f"eq-te0-asym-0.5pct-a={a * 1e6:g}um", rel <= 0.005, rel, "<= 0.005"
            )
        )
    # near-ideal limit: remaining skin-depth corrections are ~1e-13 relative
    a = 0.5e-6
    quad_val = te_zero_frequency_sphere_term(a, T, R, 1e-12, constants=constants)
    asym = te_zero_frequency_asymptotic(a, T, R, 1e-12, constants)
    rel = abs(asym - quad_val) / abs(quad_val)
    out.append(CheckResult("eq-te0-ideal-limit-1e-6", rel <= 1e-6, rel, "<= 1e-6"))
    return out


def check_properties(constants: Constants = CODATA2018) -> list[CheckResult]:
    """Criterion 10: structural invariants and zero-temperature limits."""
    out = []
    pair = TemperaturePair(300.0, 350.0)
    a, R = 0.5e-6, 1e-3

    fwd = delta_force_plates(a, pair, AU_LAMBDA_P, constants).delta_F
    bwd = delta_force_plates(a, pair.swapped(), AU_LAMBDA_P, constants).delta_F
    fwd_s = delta_force_sphere(
        a, pair, R, AU_LAMBDA_P, ApproachVariant.MODIFIED_TE, constants
    ).delta_F
    bwd_s = delta_force_sphere(
        a, pair.swapped(), R, AU_LAMBDA_P, ApproachVariant.MODIFIED_TE, constants
    ).delta_F
    anti = max(abs(fwd + bwd) / abs(fwd), abs(fwd_s + bwd_s) / abs(fwd_s))
    out.append(CheckResult("prop-antisymmetry-T1T2", anti == 0.0, anti, "0 exactly"))

    eq_pair = TemperaturePair(320.0, 320.0)
    z = max(
        abs(delta_force_plates(a, eq_pair, AU_LAMBDA_P, constants).delta_F),
        abs(delta_force_sphere(a, eq_pair, R, AU_LAMBDA_P,
                               ApproachVariant.MODIFIED_TE, constants).delta_F),
    )
    out.append(CheckResult("prop-zero-at-equal-T", z == 0.0, z, "0 exactly"))

    ideal_vals = {
        delta_force_plates(x, pair, 0.0, constants).delta_F
        for x in (0.2e-6, 0.7e-6, 1.5e-6)
    }
    out.append(
        CheckResult(
            "prop-ideal-plates-a-independent",
            len(ideal_vals) == 1,
            float(len(ideal_vals)),
            "single value across separations",
        )
    )

    mono_ok = True
    for geometry in (ParallelPlates(), SpherePlate(R)):
        table = sweep_separation(pair, AU_LAMBDA_P, geometry, grid=DEFAULT_SEPARATION_GRID,
                                 constants=constants)
        mags = [abs(r[1]) for r in table.rows]
        mono_ok = mono_ok and all(x > y for x, y in zip(mags, mags[1:]))
    out.append(
        CheckResult("prop-monotone-decrease", mono_ok, float(mono_ok), "strictly decreasing")
    )

    model = Plasma(AU_LAMBDA_P)
    f1 = sphere_plate_force_pfa(a, 300.0, 1e-3, model, constants=constants)
    f2 = sphere_plate_force_pfa(a, 300.0, 2e-3, model, constants=constants)
    lin = abs(f2 - 2.0 * f1) / abs(f2)
    out.append(CheckResult("prop-pfa-linear-in-R", lin <= 1e-15, lin, "<= 1e-15"))

    # T -> 0 limits, probed at 1 K where thermal terms are ~1e-8 relative.
    # Tail tolerance relaxed to 1e-7: still 1000x tighter than the 0.1% band
    # and ~3x faster given the ~1e4 Matsubara terms at 1 K.
    cold = MatsubaraSpec(relative_tail_tolerance=1e-7)
    a0 = 1e-6
    p0 = plate_pressure(a0, 1.0, IdealMetal(), matsubara=cold, constants=constants)
    p_ref = -constants.pi ** 2 * constants.hbar * constants.c / (240.0 * a0 ** 4)
    rel_p = abs(p0 - p_ref) / abs(p_ref)
    out.append(CheckResult("prop-ideal-T0-pressure-0.1pct", rel_p <= 1e-3, rel_p, "<= 1e-3"))

    f0 = sphere_plate_force_pfa(a0, 1.0, R, IdealMetal(), matsubara=cold, constants=constants)
    f_ref = -constants.pi ** 3 * constants.hbar * constants.c * R / (360.0 * a0 ** 3)
    rel_f = abs(f0 - f_ref) / abs(f_ref)
    out.append(CheckResult("prop-ideal-T0-sphere-0.1pct", rel_f <= 1e-3, rel_f, "<= 1e-3"))

    # thermodynamic identity P = -dF/da; Richardson-extrapolated central
    # difference, noise floor set by quadrature tolerance / differencing
    # conditioning (~a/h amplification), hence the 1e-6 band
    tight_m = MatsubaraSpec(relative_tail_tolerance=1e-11)
    tight_q = QuadratureSpec(relative_tolerance=1e-11)
    worst = 0.0
    for ax in (0.4e-6, 0.7e-6, 1.2e-6):
        h = 5e-3 * ax

        def F(x: float) -> float:
            return plate_free_energy_per_area(
                x, 300.0, model, matsubara=tight_m, quadrature=tight_q, constants=constants
            )

        d1 = (F(ax + h) - F(ax - h)) / (2.0 * h)
        d2 = (F(ax + h / 2.0) - F(ax - h / 2.0)) / h
        dF_da = (4.0 * d2 - d1) / 3.0
        p = plate_pressure(
            ax, 300.0, model, matsubara=tight_m, quadrature=tight_q, constants=constants
        )
        worst = max(worst, abs(-dF_da - p) / abs(p))
    out.append(CheckResult("prop-thermodynamic-identity", worst <= 1e-6, worst, "<= 1e-6"))
    return out


def run_acceptance_checks(constants: Constants = CODATA2018) -> ValidationReport:
    """Run the complete checklist. Takes ~1 minute with default tolerances."""
    report = ValidationReport()
    for check in (
        check_thermal_correction_percentages(constants)
        + check_figure_ratios(constants)
        + check_approach_contrast(constants)
        + check_oracle_absolute(constants)
        + check_oracle_difference(constants)
        + check_te_zero_frequency(constants)
        + check_properties(constants)
    ):
        report.add(check)
    return report
