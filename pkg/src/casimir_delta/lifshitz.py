"""Full finite-temperature Lifshitz engine.

Evaluates the Matsubara sum numerically with adaptive quadrature over the
transverse wavevector. This is the independent oracle every closed-form
perturbative expression is checked against, so its default tolerances are
set far below the acceptance bands (1e-9 vs 0.5-5%).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from scipy.integrate import quad

from .dielectric import ApproachVariant, IdealMetal, MetalModel, Plasma
from .quantities import (
    CODATA2018,
    Constants,
    Separation,
    Temperature,
    ValidityReport,
)


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to converge; carries scipy's diagnostics."""


class ConvergenceError(RuntimeError):
    """Matsubara sum did not meet the tail tolerance within max_terms."""


@dataclass(frozen=True)
class MatsubaraSpec:
    """Truncation control for the sum over xi_n = 2*pi*k_B*T*n/hbar.

    The n = 0 term carries weight 1/2. The sum stops once a geometric tail
    estimate drops below relative_tail_tolerance times the partial sum.
    """

    relative_tail_tolerance: float = 1e-9
    max_terms: int = 100_000


@dataclass(frozen=True)
class QuadratureSpec:
    """Control for the semi-infinite transverse-wavevector integrals.

    The integration variable is the dimensionless y = 2*a*q; the integrand
    decays like exp(-y), which bounds the tail analytically. scipy's adaptive
    quadrature handles the [y_n, inf) interval directly.
    """

    relative_tolerance: float = 1e-9
    absolute_floor: float = 1e-300


DEFAULT_MATSUBARA = MatsubaraSpec()
DEFAULT_QUADRATURE = QuadratureSpec()


@dataclass(frozen=True)
class ParallelPlates:
    """Two parallel half-spaces; results are per unit area (N/m^2, J/m^2)."""


@dataclass(frozen=True)
class SpherePlate:
    """Sphere of radius R above a plate; results are total force (N)."""

    R: float  # m

    def __post_init__(self) -> None:
        if not (self.R > 0.0) or math.isinf(self.R):
            raise ValueError(f"sphere radius must be positive and finite, got {self.R}")


Geometry = Union[ParallelPlates, SpherePlate]


class Method(enum.Enum):
    PERTURBATIVE = "perturbative"
    LIFSHITZ_ORACLE = "lifshitz-oracle"


@dataclass(frozen=True)
class ForceResult:
    """A force (N, sphere-plate) or force per area (N/m^2, plates).

    Attractive forces are negative. `notes` records bookkeeping such as the
    omitted higher-order conductivity remainder of the perturbative series.
    """

    value: float
    geometry: Geometry
    method: Method
    approach: ApproachVariant
    validity: Optional[ValidityReport] = None
    terms: Optional[object] = None
    notes: tuple[str, ...] = ()


def matsubara_frequency(n: int, T: float, constants: Constants = CODATA2018) -> float:
    """xi_n = 2*pi*k_B*T*n/hbar, rad/s."""
    return 2.0 * math.pi * constants.k_B * T * n / constants.hbar


def _integrate(f: Callable[[float], float], lower: float, spec: QuadratureSpec, label: str) -> float:
    out = quad(
        f,
        lower,
        math.inf,
        epsabs=spec.absolute_floor,
        epsrel=spec.relative_tolerance,
        limit=200,
        full_output=1,
    )
    if len(out) > 3:
        raise QuadratureError(
            f"{label}: {out[3]} (value={out[0]:.6e}, abserr={out[1]:.2e}, lower={lower:.3e})"
        )
    return out[0]


def _reflectivity_squares(
    model: MetalModel,
    approach: ApproachVariant,
    n: int,
    T: float,
    a: float,
    constants: Constants,
) -> Callable[[float], tuple[float, float]]:
    """Return y -> (r_TM^2, r_TE^2) for Matsubara order n, y = 2*a*q.

    Same Fresnel math as dielectric.reflection_coefficients, expressed in the
    engine's integration variable. For the plasma model the wave number in
    the metal is sqrt(q^2 + (omega_p/c)^2) at every order, including n = 0.
    """
    if isinstance(model, IdealMetal):
        te = 0.0 if (n == 0 and approach is ApproachVariant.MODIFIED_TE) else 1.0
        return lambda y, te=te: (1.0, te)

    kappa = model.plasma_frequency(constants) / constants.c  # omega_p/c, 1/m
    two_a = 2.0 * a
    if n == 0:
        if approach is ApproachVariant.MODIFIED_TE:
            def rsq0_mod(y: float) -> tuple[float, float]:
                return (1.0, 0.0)
            return rsq0_mod

        def rsq0(y: float) -> tuple[float, float]:
            q = y / two_a
            k = math.sqrt(q * q + kappa * kappa)
            r_te = (q - k) / (q + k)
            return (1.0, r_te * r_te)
        return rsq0

    xi = matsubara_frequency(n, T, constants)
    eps = 1.0 + (kappa * constants.c / xi) ** 2

    def rsq(y: float) -> tuple[float, float]:
        q = y / two_a
        k = math.sqrt(q * q + kappa * kappa)
        r_te = (q - k) / (q + k)
        r_tm = (eps * q - k) / (eps * q + k)
        return (r_tm * r_tm, r_te * r_te)
    return rsq


def _matsubara_sum(
    a: float,
    T: float,
    model: MetalModel,
    approach: ApproachVariant,
    matsubara: MatsubaraSpec,
    quadrature: QuadratureSpec,
    make_integrand: Callable[[Callable[[float], tuple[float, float]]], Callable[[float], float]],
    label: str,
    constants: Constants,
) -> float:
    # y_n = 2*a*xi_n/c is the lower integration limit of order n and also the
    # decay scale distinguishing successive terms.
    y1 = 4.0 * math.pi * a * constants.k_B * T / (constants.hbar * constants.c)
    decay = 1.0 - math.exp(-y1)
    total = 0.0
    for n in range(matsubara.max_terms):
        rsq = _reflectivity_squares(model, approach, n, T, a, constants)
        term = _integrate(make_integrand(rsq), n * y1, quadrature, f"{label} n={n}")
        if n == 0:
            term *= 0.5
        total += term
        # terms fall off at least like exp(-y1) once n*y1 >> 1; the geometric
        # tail bound |term|/(1 - exp(-y1)) is conservative for all n >= 1
        if n > 0 and abs(term) <= matsubara.relative_tail_tolerance * abs(total) * decay:
            return total
    raise ConvergenceError(
        f"{label}: Matsubara sum not converged after {matsubara.max_terms} terms "
        f"(a={a:.3e} m, T={T:.3f} K, y1={y1:.3e})"
    )


def plate_free_energy_per_area(
    a: Separation | float,
    T: Temperature | float,
    model: MetalModel,
    approach: ApproachVariant = ApproachVariant.PLASMA_ZERO_FREQUENCY,
    matsubara: MatsubaraSpec = DEFAULT_MATSUBARA,
    quadrature: QuadratureSpec = DEFAULT_QUADRATURE,
    constants: Constants = CODATA2018,
) -> float:
    """Matsubara free energy per unit area, J/m^2 (negative for attraction)."""
    a_m = a.a if isinstance(a, Separation) else Separation(a).a
    T_k = T.T if isinstance(T, Temperature) else Temperature(T).T

    def make_integrand(rsq):
        def f(y: float) -> float:
            tm2, te2 = rsq(y)
            e = math.exp(-y)
            return y * (math.log1p(-tm2 * e) + math.log1p(-te2 * e))
        return f

    pref = constants.k_B * T_k / (8.0 * math.pi * a_m * a_m)
    return pref * _matsubara_sum(
        a_m, T_k, model, approach, matsubara, quadrature, make_integrand,
        "free energy", constants,
    )


def plate_pressure(
    a: Separation | float,
    T: Temperature | float,
    model: MetalModel,
    approach: ApproachVariant = ApproachVariant.PLASMA_ZERO_FREQUENCY,
    matsubara: MatsubaraSpec = DEFAULT_MATSUBARA,
    quadrature: QuadratureSpec = DEFAULT_QUADRATURE,
    constants: Constants = CODATA2018,
) -> float:
    """Force per unit area between the plates, N/m^2 (negative = attraction).

    Own Matsubara sum of the pressure-form integrand, not a numerical
    derivative of the free energy; the thermodynamic-identity test covers
    consistency between the two.
    """
    a_m = a.a if isinstance(a, Separation) else Separation(a).a
    T_k = T.T if isinstance(T, Temperature) else Temperature(T).T

    def make_integrand(rsq):
        def f(y: float) -> float:
            tm2, te2 = rsq(y)
            e = math.exp(-y)
            # 1/(exp(y)/r^2 - 1) rewritten to avoid overflow at large y
            s = tm2 * e / (1.0 - tm2 * e) + te2 * e / (1.0 - te2 * e)
            return y * y * s
        return f

    pref = -constants.k_B * T_k / (8.0 * math.pi * a_m ** 3)
    return pref * _matsubara_sum(
        a_m, T_k, model, approach, matsubara, quadrature, make_integrand,
        "pressure", constants,
    )


def sphere_plate_force_pfa(
    a: Separation | float,
    T: Temperature | float,
    R: float,
    model: MetalModel,
    approach: ApproachVariant = ApproachVariant.PLASMA_ZERO_FREQUENCY,
    matsubara: MatsubaraSpec = DEFAULT_MATSUBARA,
    quadrature: QuadratureSpec = DEFAULT_QUADRATURE,
    constants: Constants = CODATA2018,
) -> float:
    """Sphere-plate force via the proximity force theorem, N.

    Exactly 2*pi*R times the plate free energy per area; the mapping itself
    carries a relative error of order a/R, negligible for mm-scale spheres.
    """
    geometry = SpherePlate(R)
    energy = plate_free_energy_per_area(
        a, T, model, approach, matsubara, quadrature, constants
    )
    return 2.0 * math.pi * geometry.R * energy


def te_zero_frequency_sphere_term(
    a: Separation | float,
    T: Temperature | float,
    R: float,
    lambda_p: float,
    quadrature: QuadratureSpec = DEFAULT_QUADRATURE,
    constants: Constants = CODATA2018,
) -> float:
    """Zero-frequency TE contribution to the sphere-plate force, N.

    (k_B*T*R)/(8*a^2) * Int_0^inf y dy ln[1 - r(y)^2 exp(-y)] with
    r(y) = (y - sqrt(w^2 + y^2))/(y + sqrt(w^2 + y^2)) and the dimensionless
    plasma frequency w = 2*a*omega_p/c. Negative (attractive); vanishing
    lambda_p recovers -k_B*T*zeta(3)*R/(8*a^2).
    """
    a_m = a.a if isinstance(a, Separation) else Separation(a).a
    T_k = T.T if isinstance(T, Temperature) else Temperature(T).T
    geometry = SpherePlate(R)
    model = Plasma(lambda_p)
    w = 2.0 * a_m * model.plasma_frequency(constants) / constants.c

    def f(y: float) -> float:
        root = math.sqrt(w * w + y * y)
        r = (y - root) / (y + root)
        return y * math.log1p(-r * r * math.exp(-y))

    integral = _integrate(f, 0.0, quadrature, "zero-frequency TE term")
    return constants.k_B * T_k * geometry.R / (8.0 * a_m * a_m) * integral
