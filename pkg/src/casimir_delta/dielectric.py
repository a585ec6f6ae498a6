"""Dielectric permittivity on the imaginary frequency axis and the two
polarization reflection coefficients feeding the Lifshitz engine."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

from .quantities import Constants, CODATA2018


@dataclass(frozen=True)
class IdealMetal:
    """Perfect conductor: |r|=1 for both polarizations at every frequency."""


@dataclass(frozen=True)
class Plasma:
    """Free-electron plasma response parameterized by the plasma wavelength."""

    lambda_p: float  # m

    def __post_init__(self) -> None:
        if not (self.lambda_p > 0.0) or math.isinf(self.lambda_p):
            raise ValueError(f"plasma wavelength must be positive and finite, got {self.lambda_p}")

    def plasma_frequency(self, constants: Constants = CODATA2018) -> float:
        """omega_p = 2*pi*c/lambda_p, rad/s. Always derived, never stored."""
        return 2.0 * math.pi * constants.c / self.lambda_p


MetalModel = Union[IdealMetal, Plasma]


class ApproachVariant(enum.Enum):
    """Zero-frequency prescription for the Matsubara sum.

    PLASMA_ZERO_FREQUENCY extends the plasma-model reflection coefficients to
    every order including n = 0. MODIFIED_TE zeroes the transverse-electric
    coefficient at n = 0 only; all nonzero orders are identical.
    """

    PLASMA_ZERO_FREQUENCY = "plasma"
    MODIFIED_TE = "modified-te"


@dataclass(frozen=True)
class ReflectionPair:
    r_TM: float
    r_TE: float


def permittivity_imaginary(model: MetalModel, xi: float, constants: Constants = CODATA2018) -> float:
    """Permittivity at imaginary frequency omega = i*xi.

    Plasma: eps(i*xi) = 1 + (omega_p/xi)^2, real and > 1. IdealMetal returns
    +inf, interpreted by callers as perfect reflectivity. xi = 0 for the
    plasma variant is a domain error: the engine handles that limit
    analytically via reflection_coefficients.
    """
    if isinstance(model, IdealMetal):
        return math.inf
    if xi <= 0.0:
        raise ValueError(
            "plasma permittivity needs xi > 0; the xi = 0 term has an analytic "
            "reflection-coefficient limit and never goes through this path"
        )
    wp = model.plasma_frequency(constants)
    return 1.0 + (wp / xi) ** 2


def reflection_coefficients(
    model: MetalModel,
    xi: float,
    k_perp: float,
    constants: Constants = CODATA2018,
) -> ReflectionPair:
    """Fresnel coefficients on the imaginary axis for a metal half-space.

    With q = sqrt(k_perp^2 + xi^2/c^2), the plasma model gives
    k = sqrt(q^2 + omega_p^2/c^2) for any xi (including 0), so
    r_TE = (q - k)/(q + k) and r_TM = (eps*q - k)/(eps*q + k), with the
    analytic limit r_TM -> 1 at xi = 0.
    """
    if xi < 0.0 or k_perp < 0.0:
        raise ValueError("xi and k_perp must be non-negative")
    if xi == 0.0 and k_perp == 0.0:
        raise ValueError("xi and k_perp must not both be zero")

    if isinstance(model, IdealMetal):
        return ReflectionPair(r_TM=1.0, r_TE=-1.0)

    c = constants.c
    wp = model.plasma_frequency(constants)
    q = math.sqrt(k_perp * k_perp + (xi / c) ** 2)
    k = math.sqrt(q * q + (wp / c) ** 2)
    r_te = (q - k) / (q + k)
    if xi == 0.0:
        r_tm = 1.0
    else:
        eps = permittivity_imaginary(model, xi, constants)
        r_tm = (eps * q - k) / (eps * q + k)
    return ReflectionPair(r_TM=r_tm, r_TE=r_te)
