"""Unit-carrying physical quantities, fundamental constants, derived scales.

Everything downstream (dielectric response, Lifshitz engine, perturbative
models) works in SI internally; unit conversion happens only at the CLI
boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Constants:
    """Fundamental constants (CODATA 2018) plus the math constants used here."""

    hbar: float = 1.054571817e-34  # J s
    c: float = 299792458.0         # m/s (exact)
    k_B: float = 1.380649e-23      # J/K (exact)
    zeta3: float = 1.2020569031595943
    pi: float = math.pi


CODATA2018 = Constants()

# Validity window of the small-separation / low-temperature framework.
SEPARATION_MAX = 2.0e-6   # m
TEMPERATURE_MAX = 350.0   # K


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Separation:
    """Plate-plate (or sphere-plate closest-approach) gap in meters."""

    a: float

    def __post_init__(self) -> None:
        a = _require_finite("separation", self.a)
        if a <= 0.0:
            raise ValueError(f"separation must be positive, got {a}")
        object.__setattr__(self, "a", a)


@dataclass(frozen=True)
class Temperature:
    """Absolute temperature in kelvin."""

    T: float

    def __post_init__(self) -> None:
        T = _require_finite("temperature", self.T)
        if T <= 0.0:
            raise ValueError(f"temperature must be positive, got {T}")
        object.__setattr__(self, "T", T)


@dataclass(frozen=True)
class ValidityReport:
    """Per-parameter range flags. Reporting only: nothing here rejects inputs."""

    separation_above_plasma_wavelength: bool
    separation_below_max: bool
    t1_below_max: bool
    t2_below_max: bool
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @property
    def all_in_range(self) -> bool:
        return (
            self.separation_above_plasma_wavelength
            and self.separation_below_max
            and self.t1_below_max
            and self.t2_below_max
        )


@dataclass(frozen=True)
class DerivedScales:
    """Scales derived from a separation, a temperature and a plasma wavelength."""

    T_eff: float          # K, hbar*c/(2*a*k_B)
    delta: float          # m, lambda_p/(2*pi)
    delta_over_a: float
    T_over_Teff: float


def effective_temperature(a: Separation | float, constants: Constants = CODATA2018) -> Temperature:
    """Temperature scale at which thermal photons match the gap's frequency scale."""
    a_m = a.a if isinstance(a, Separation) else Separation(a).a
    return Temperature(constants.hbar * constants.c / (2.0 * a_m * constants.k_B))


def skin_depth_parameter(lambda_p: float) -> float:
    """Effective field-penetration depth lambda_p/(2*pi); 0 encodes an ideal metal."""
    lam = _require_finite("plasma wavelength", lambda_p)
    if lam < 0.0:
        raise ValueError(f"plasma wavelength must be non-negative, got {lam}")
    return lam / (2.0 * math.pi)


def derived_scales(
    a: Separation | float,
    T: Temperature | float,
    lambda_p: float,
    constants: Constants = CODATA2018,
) -> DerivedScales:
    a_m = a.a if isinstance(a, Separation) else Separation(a).a
    T_k = T.T if isinstance(T, Temperature) else Temperature(T).T
    T_eff = effective_temperature(a_m, constants).T
    delta = skin_depth_parameter(lambda_p)
    return DerivedScales(
        T_eff=T_eff,
        delta=delta,
        delta_over_a=delta / a_m,
        T_over_Teff=T_k / T_eff,
    )


def classify_validity(
    a: Separation | float,
    T1: Temperature | float,
    T2: Temperature | float,
    lambda_p: float,
) -> ValidityReport:
    """Flag parameters outside the framework's window; never rejects.

    The window is lambda_p <= a <= 2 um and T <= 350 K. Out-of-window inputs
    still compute, carrying these flags as warnings on the results.
    """
    a_m = a.a if isinstance(a, Separation) else Separation(a).a
    t1 = T1.T if isinstance(T1, Temperature) else Temperature(T1).T
    t2 = T2.T if isinstance(T2, Temperature) else Temperature(T2).T
    lam = lambda_p
    if lam < 0.0:
        raise ValueError(f"plasma wavelength must be non-negative, got {lam}")

    above_lp = a_m >= lam
    below_max = a_m <= SEPARATION_MAX
    t1_ok = t1 <= TEMPERATURE_MAX
    t2_ok = t2 <= TEMPERATURE_MAX

    warnings: list[str] = []
    if not above_lp:
        warnings.append(
            f"separation {a_m:.3e} m below plasma wavelength {lam:.3e} m; "
            "perturbative framework not reliable here"
        )
    if not below_max:
        warnings.append(
            f"separation {a_m:.3e} m above {SEPARATION_MAX:.1e} m validity limit"
        )
    if not t1_ok:
        warnings.append(f"T1 = {t1:.1f} K above {TEMPERATURE_MAX:.0f} K validity limit")
    if not t2_ok:
        warnings.append(f"T2 = {t2:.1f} K above {TEMPERATURE_MAX:.0f} K validity limit")

    return ValidityReport(
        separation_above_plasma_wavelength=above_lp,
        separation_below_max=below_max,
        t1_below_max=t1_ok,
        t2_below_max=t2_ok,
        warnings=tuple(warnings),
    )
