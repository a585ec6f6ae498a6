"""Acceptance suite: every release-gating claim, one pass/fail line per check.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-check lines.

Known red: the two absolute-force oracle checks at a = 0.5 um. Their stated
3% band is exceeded by the omitted second-order conductivity term, which for
gold contributes ~24 (delta/a)^2 = 4.5% at that separation. The checks are
asserted at the stated band regardless; see the validation report detail.
"""

import dataclasses

import pytest

from casimir_delta.quantities import CODATA2018
from casimir_delta.validation import (
    check_thermal_correction_percentages,
    run_acceptance_checks,
)


@pytest.fixture(scope="session")
def report():
    return run_acceptance_checks()


def _assert_checks(report, prefix):
    checks = [c for c in report.checks if c.check_id.startswith(prefix)]
    assert checks, f"no checks matched prefix {prefix!r}"
    for c in checks:
        print(c.line())
    failed = [c for c in checks if not c.passed]
    assert not failed, "\n".join(c.line() for c in failed)


def test_criterion_01_plate_thermal_correction_percentages(report):
    _assert_checks(report, "pp-thermal")


def test_criterion_02_sphere_thermal_correction_percentages(report):
    _assert_checks(report, "ps-thermal")


def test_criterion_03_plate_difference_force_ratio(report):
    _assert_checks(report, "fig1-ratio")


def test_criterion_04_sphere_difference_force_ratio(report):
    _assert_checks(report, "fig2-ratio")


def test_criterion_05_approach_contrast(report):
    _assert_checks(report, "fig3-")


def test_criterion_06_magnitude_scale(report):
    _assert_checks(report, "magnitude-")


def test_criterion_07_oracle_absolute_forces(report):
    _assert_checks(report, "oracle-pp-abs")


def test_criterion_08_oracle_difference_forces(report):
    _assert_checks(report, "oracle-dF")


def test_criterion_09_te_zero_frequency_quadrature_vs_asymptotic(report):
    _assert_checks(report, "eq-te0")


def test_criterion_10_property_suite(report):
    _assert_checks(report, "prop-")


def test_sensitivity_perturbed_constants_fail_percentage_checks():
    # sanity of the checks themselves: compounding 1% shifts of hbar, c and
    # k_B move T/T_eff by ~3%, pushing the quartic plate correction out of
    # its +-10% band
    perturbed = dataclasses.replace(
        CODATA2018,
        hbar=CODATA2018.hbar * 0.99,
        c=CODATA2018.c * 0.99,
        k_B=CODATA2018.k_B * 1.01,
    )
    checks = check_thermal_correction_percentages(perturbed)
    assert any(not c.passed for c in checks)
