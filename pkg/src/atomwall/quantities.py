"""Physical constants, unit conventions, and thermal-frequency helpers.

Everything in this package is computed in SI units with one deliberate
exception: atomic polarizabilities are Gaussian polarizability volumes
in m^3, and conductivities are Gaussian values in 1/s.  With these
conventions the closed-form expressions in :mod:`atomwall.forces`
produce newtons (forces) and newtons per meter (gradients) directly.

Force results are often displayed in units of 1e-13 fN = 1e-28 N,
which keeps the interesting magnitudes near unity; see
:func:`force_to_display` / :func:`force_from_display`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

#: Boltzmann constant, J/K (exact by SI definition).
BOLTZMANN = 1.380649e-23

#: Reduced Planck constant, J s.
HBAR = 1.054571817e-34

#: Speed of light in vacuum, m/s (exact by SI definition).
LIGHT_SPEED = 2.99792458e8

#: Riemann zeta function at 3/2.  Stored as a literal so that no
#: runtime special-function dependency is needed; validated in the test
#: suite against :func:`zeta_three_halves_oracle` to 1e-12.
ZETA_THREE_HALVES = 2.612375348685488

#: Display unit used in force tables: 1e-13 fN = 1e-28 N.
FORCE_DISPLAY_UNIT = "1e-13 fN"

#: Number of display units per newton.
FORCE_DISPLAY_PER_NEWTON = 1e28


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable bundle of the constants used by the force kernels."""

    boltzmann: float = BOLTZMANN
    hbar: float = HBAR
    light_speed: float = LIGHT_SPEED
    zeta_three_halves: float = ZETA_THREE_HALVES


@dataclass(frozen=True)
class UnitConventions:
    """Unit labels for every quantity the package reads or writes."""

    length: str = "m"
    temperature: str = "K"
    force: str = "N"
    force_gradient: str = "N/m"
    polarizability: str = "m^3"
    conductivity: str = "s^-1"
    angular_frequency: str = "rad/s"


CONSTANTS = PhysicalConstants()
UNITS = UnitConventions()


def thermal_frequency(temperature: float) -> float:
    """Angular frequency of thermal radiation, k_B T / hbar, in rad/s.

    About 3.9e13 rad/s at room temperature; this is the quantity that
    must stay small against the wall's characteristic frequency (or
    conductivity) for the asymptotic force formulas to apply.
    """
    if temperature < 0.0:
        raise DomainError(f"temperature must be >= 0 K, got {temperature}")
    return BOLTZMANN * temperature / HBAR


def force_to_display(force_n: float) -> float:
    """Convert a force in N to display units of 1e-13 fN (= 1e-28 N)."""
    return force_n * 1e28


def force_from_display(value: float) -> float:
    """Inverse of :func:`force_to_display`.

    Uses the same scale constant so that scaling by an exact power of
    ten round-trips at the bit level.
    """
    return value / 1e28


def zeta_three_halves_partial_sum(terms: int) -> float:
    """Partial sum of sum_n n^(-3/2) over n = 1..terms (no tail).

    A strictly increasing lower bound on the limit; used to sanity-check
    the tail-corrected oracle.
    """
    if terms < 1:
        raise DomainError("terms must be >= 1")
    return math.fsum(n ** -1.5 for n in range(1, terms + 1))


def zeta_three_halves_oracle(terms: int = 10_000) -> float:
    """Sum n^(-3/2) by direct summation plus an integral tail bound.

    The tail from n = terms onward is replaced by its Euler-Maclaurin
    expansion 2/sqrt(N) + N^(-3/2)/2 + N^(-5/2)/8, whose truncation
    error is below 1e-19 for the default N.  Exists to validate the
    stored :data:`ZETA_THREE_HALVES` literal independently.
    """
    if terms < 2:
        raise DomainError("terms must be >= 2")
    n = float(terms)
    head = math.fsum(k ** -1.5 for k in range(1, terms))
    tail = 2.0 / math.sqrt(n) + 0.5 * n ** -1.5 + 0.125 * n ** -2.5
    return head + tail
