"""Blackbody-radiation frequency shifts of states and clock transitions.

The shift of a state with static scalar polarizability alpha0 is

    dnu = -1/2 (831.9 V/m)^2 (T/300)^4 alpha0 (1 + eta)   [Hz]

with alpha0 converted from a0^3 to Hz/(V/m)^2; eta is a small dynamic
correction, negligible at this accuracy and zero by default.  The clock
shift is the difference of the two state shifts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constants import BBR_FIELD_300K, POLARIZABILITY_AU_IN_SI
from .dataset import A0_CUBED, HERTZ, SI_POLARIZABILITY, Quantity


@dataclass(frozen=True)
class BBRConditions:
    """Ambient conditions for a blackbody shift evaluation.

    The reference field is the 300 K blackbody RMS field and is fixed;
    temperature scaling is the explicit (T/300)^4 factor.  T = 0 is allowed
    as the trivial zero-field limit.
    """

    temperature: float = 300.0
    eta: float = 0.0
    reference_field: float = field(default=BBR_FIELD_300K, init=False)

    def __post_init__(self) -> None:
        if self.temperature < 0:
            raise ValueError(f"negative temperature: {self.temperature}")


def au_to_si(alpha: Quantity) -> Quantity:
    """Convert a polarizability from a0^3 to Hz/(V/m)^2."""
    if alpha.unit != A0_CUBED:
        raise ValueError(f"expected {A0_CUBED!r}, got {alpha.unit!r}")
    return Quantity(
        alpha.value * POLARIZABILITY_AU_IN_SI,
        alpha.unc * POLARIZABILITY_AU_IN_SI,
        SI_POLARIZABILITY,
    )


def _shift_per_si_alpha(cond: BBRConditions) -> float:
    """Shift in Hz per unit of alpha/h [Hz/(V/m)^2], temperature included."""
    return -0.5 * cond.reference_field**2 * (cond.temperature / 300.0) ** 4


def bbr_shift_state(alpha0: Quantity, cond: BBRConditions) -> Quantity:
    """BBR shift in Hz of a single state of scalar polarizability alpha0."""
    factor = _shift_per_si_alpha(cond) * (1.0 + cond.eta)
    shifted = au_to_si(alpha0)
    return Quantity(factor * shifted.value, abs(factor) * shifted.unc, HERTZ)


def clock_bbr_shift(
    alpha_ground: Quantity,
    alpha_excited: Quantity,
    cond: BBRConditions,
    shared_core_unc: float = 0.0,
) -> Quantity:
    """BBR shift in Hz of a clock transition ground -> excited.

    Uncertainties of the two polarizabilities combine in quadrature.  When
    `shared_core_unc` is nonzero, that common (fully correlated) core
    contribution is removed from both before combining, since it cancels in
    the difference.
    """
    factor = _shift_per_si_alpha(cond) * (1.0 + cond.eta) * POLARIZABILITY_AU_IN_SI
    diff = alpha_excited.value - alpha_ground.value
    var = alpha_ground.unc**2 + alpha_excited.unc**2 - 2.0 * shared_core_unc**2
    return Quantity(factor * diff, abs(factor) * math.sqrt(max(var, 0.0)), HERTZ)
