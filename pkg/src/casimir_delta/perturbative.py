"""Closed-form perturbative forces: double expansion in the skin-depth ratio
delta/a and the thermal ratio T/T_eff, truncated at the explicitly known
orders. Higher-order conductivity coefficients (delta^2..delta^6) are kept
as a flagged, structurally omitted remainder: they are temperature
independent, so every difference force is exact without them."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dielectric import ApproachVariant
from .lifshitz import ForceResult, Method, ParallelPlates, SpherePlate
from .quantities import (
    CODATA2018,
    Constants,
    Separation,
    Temperature,
    classify_validity,
    derived_scales,
)

OMITTED_REMAINDER_NOTE = (
    "second- through sixth-order conductivity terms omitted "
    "(temperature independent; cancel in all difference forces)"
)
ASYMPTOTIC_RANGE_NOTE = (
    "zero-frequency TE asymptotic degraded below a = 0.5 um; "
    "use the engine quadrature there"
)


@dataclass(frozen=True)
class PerturbativeTerms:
    """Term-by-term decomposition of the relative correction.

    total correction factor = 1 + thermal_ideal + conductivity_first_order
    + cross_term; `base` is the zero-temperature ideal-metal force the factor
    multiplies.
    """

    base: float
    thermal_ideal: float
    conductivity_first_order: float
    cross_term: float

    @property
    def correction_factor(self) -> float:
        return 1.0 + self.thermal_ideal + self.conductivity_first_order + self.cross_term

    @property
    def total(self) -> float:
        return self.base * self.correction_factor


def plate_force_perturbative(
    a: Separation | float,
    T: Temperature | float,
    lambda_p: float,
    constants: Constants = CODATA2018,
) -> ForceResult:
    """Plate-plate force per unit area, N/m^2.

    F0 * {1 + (1/3)t^4 - (16/3)d[1 - (45 zeta3/(8 pi^3)) t^3]} with
    F0 = -pi^2 hbar c/(240 a^4), t = T/T_eff, d = delta/a.
    """
    a_m = a.a if isinstance(a, Separation) else Separation(a).a
    T_k = T.T if isinstance(T, Temperature) else Temperature(T).T
    scales = derived_scales(a_m, T_k, lambda_p, constants)
    t = scales.T_over_Teff
    d = scales.delta_over_a
    z3 = constants.zeta3
    pi = constants.pi

    base = -pi ** 2 * constants.hbar * constants.c / (240.0 * a_m ** 4)
    terms = PerturbativeTerms(
        base=base,
        thermal_ideal=t ** 4 / 3.0,
        conductivity_first_order=-(16.0 / 3.0) * d,
        cross_term=(16.0 / 3.0) * d * (45.0 * z3 / (8.0 * pi ** 3)) * t ** 3,
    )
    return ForceResult(
        value=terms.total,
        geometry=ParallelPlates(),
        method=Method.PERTURBATIVE,
        approach=ApproachVariant.PLASMA_ZERO_FREQUENCY,
        validity=classify_validity(a_m, T_k, T_k, lambda_p),
        terms=terms,
        notes=(OMITTED_REMAINDER_NOTE,) if lambda_p > 0.0 else (),
    )


def sphere_force_perturbative(
    a: Separation | float,
    T: Temperature | float,
    R: float,
    lambda_p: float,
    constants: Constants = CODATA2018,
) -> ForceResult:
    """Sphere-plate force, N.

    F0 * {1 + (45 zeta3/pi^3)t^3 - t^4 - 4d[1 - (45 zeta3/(2 pi^3))t^3 + t^4]}
    with F0 = -pi^3 hbar c R/(360 a^3).
    """
    a_m = a.a if isinstance(a, Separation) else Separation(a).a
    T_k = T.T if isinstance(T, Temperature) else Temperature(T).T
    geometry = SpherePlate(R)
    scales = derived_scales(a_m, T_k, lambda_p, constants)
    t = scales.T_over_Teff
    d = scales.delta_over_a
    z3 = constants.zeta3
    pi = constants.pi

    base = -pi ** 3 * constants.hbar * constants.c * geometry.R / (360.0 * a_m ** 3)
    terms = PerturbativeTerms(
        base=base,
        thermal_ideal=(45.0 * z3 / pi ** 3) * t ** 3 - t ** 4,
        conductivity_first_order=-4.0 * d,
        cross_term=4.0 * d * ((45.0 * z3 / (2.0 * pi ** 3)) * t ** 3 - t ** 4),
    )
    return ForceResult(
        value=terms.total,
        geometry=geometry,
        method=Method.PERTURBATIVE,
        approach=ApproachVariant.PLASMA_ZERO_FREQUENCY,
        validity=classify_validity(a_m, T_k, T_k, lambda_p),
        terms=terms,
        notes=(OMITTED_REMAINDER_NOTE,) if lambda_p > 0.0 else (),
    )


def te_zero_frequency_asymptotic(
    a: Separation | float,
    T: Temperature | float,
    R: float,
    lambda_p: float,
    constants: Constants = CODATA2018,
) -> float:
    """Asymptotic zero-frequency TE sphere term, N.

    -(k_B T zeta3 R)/(8 a^2) * (1 - 4 d + 12 d^2), reliable for a >= 0.5 um
    with gold-like lambda_p; degrades monotonically below.
    """
    a_m = a.a if isinstance(a, Separation) else Separation(a).a
    T_k = T.T if isinstance(T, Temperature) else Temperature(T).T
    geometry = SpherePlate(R)
    d = derived_scales(a_m, T_k, lambda_p, constants).delta_over_a
    return (
        -constants.k_B * T_k * constants.zeta3 * geometry.R / (8.0 * a_m ** 2)
        * (1.0 - 4.0 * d + 12.0 * d * d)
    )
