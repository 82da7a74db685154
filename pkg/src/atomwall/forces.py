"""Casimir-Polder force and force-gradient kernel.

Large-separation (several micrometer) asymptotic expressions for the
attractive force between a ground-state atom and a heated wall, for
wall and environment temperatures that may differ.  The total force is
assembled as

    total = eq(a, T_env) + neq(a, T_wall) - neq(a, T_env)

so the two nonequilibrium terms cancel exactly in thermal equilibrium.
Gradients with respect to separation follow the same assembly.

Accuracy note: these are the leading classical asymptotes.  The omitted
zero-point contribution amounts to about 6.8% of the conducting-wall
equilibrium term at a = 5 um and 300 K and decreases quickly with
increasing separation or temperature; it is documented, never added.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .atoms import Atom
from .errors import DomainError, ValidationError
from .materials import (
    DielectricSpec,
    MaterialState,
    MetalSpec,
    WallMaterial,
    drude_conductivity,
    resolve_state,
)
from .quantities import BOLTZMANN, HBAR, LIGHT_SPEED, ZETA_THREE_HALVES, thermal_frequency

#: Ratio threshold for the "much less than" validity conditions.
REGIME_RATIO_THRESHOLD = 0.1

#: Separation range, in meters, where the asymptotic formulas are
#: intended to be used.
ASYMPTOTIC_RANGE_M = (5e-6, 10e-6)

#: How the wall phase enters the assembled force; recorded in report
#: metadata so outputs are self-describing.
STATE_RESOLUTION_NOTE = (
    "wall phase resolved once at the wall temperature (metallic at or above the "
    "critical temperature); both nonequilibrium terms use that phase, each "
    "evaluated at its own radiation temperature"
)

ACCURACY_NOTE = (
    "large-separation asymptotics; the omitted zero-point contribution is about "
    "6.8% of the conducting-wall equilibrium term at a = 5 um and T = 300 K and "
    "decreases with increasing separation and temperature"
)


class DcMode(Enum):
    """Whether the dielectric wall's residual dc conductivity is taken
    into account.  Deliberately has no default: every scenario states
    it explicitly.  It switches only the equilibrium term between the
    ideal-dielectric and conducting-wall formulas; the nonequilibrium
    dielectric term is insensitive to it."""

    DISREGARDED = "disregarded"
    INCLUDED = "included"

    @classmethod
    def from_string(cls, value: str) -> "DcMode":
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValidationError(
                f"dc mode must be 'disregarded' or 'included', got {value!r}"
            ) from None


class WarningKind(Enum):
    THERMAL_VS_CHAR_FREQ = "thermal-vs-char-freq"
    THERMAL_VS_CONDUCTIVITY = "thermal-vs-conductivity"
    SEPARATION_OUTSIDE_ASYMPTOTIC_RANGE = "separation-outside-asymptotic-range"
    DC_SIGMA_NOT_SMALL = "dc-sigma-not-small"


@dataclass(frozen=True)
class ValidityWarning:
    """A violated (or suspect) applicability condition.

    The offending ratio and the threshold it was compared against are
    recorded so reports are reproducible.  Warnings never abort a
    computation.
    """

    kind: WarningKind
    ratio: float
    threshold: float

    def describe(self) -> str:
        return f"{self.kind.value}: ratio {self.ratio:.4g} vs threshold {self.threshold:g}"


@dataclass(frozen=True)
class Scenario:
    """One atom-wall configuration to evaluate.

    separation in m, temperatures in K.  The wall must be at least as
    hot as the environment; colder walls are outside the regime the
    formulas were derived for and are rejected.
    """

    atom: Atom
    material: WallMaterial
    separation: float
    t_env: float
    t_wall: float
    dc_mode: DcMode

    def __post_init__(self) -> None:
        if not (math.isfinite(self.separation) and self.separation > 0.0):
            raise DomainError(f"separation must be > 0 m, got {self.separation}")
        if not (math.isfinite(self.t_env) and self.t_env > 0.0):
            raise DomainError(f"environment temperature must be > 0 K, got {self.t_env}")
        if not (math.isfinite(self.t_wall) and self.t_wall > 0.0):
            raise DomainError(f"wall temperature must be > 0 K, got {self.t_wall}")
        if self.t_wall < self.t_env:
            raise ValidationError(
                f"wall temperature ({self.t_wall} K) must be >= environment "
                f"temperature ({self.t_env} K)"
            )
        if not isinstance(self.dc_mode, DcMode):
            raise ValidationError("dc_mode must be a DcMode value")


@dataclass(frozen=True)
class ForceBreakdown:
    """Total force in N plus the three assembled terms and audit data.

    total is stored as eq_term + neq_wall_term - neq_env_term computed
    once, so the identity holds bit for bit on the stored fields.
    """

    total: float
    eq_term: float
    neq_wall_term: float
    neq_env_term: float
    state_wall: MaterialState
    state_env: MaterialState
    warnings: tuple[ValidityWarning, ...]


@dataclass(frozen=True)
class GradientBreakdown:
    """Force-gradient counterpart of :class:`ForceBreakdown`, in N/m."""

    total: float
    eq_term: float
    neq_wall_term: float
    neq_env_term: float
    state_wall: MaterialState
    state_env: MaterialState
    warnings: tuple[ValidityWarning, ...]


def _check_geometry(separation: float, temperature: float) -> None:
    if not (math.isfinite(separation) and separation > 0.0):
        raise DomainError(f"separation must be > 0 m, got {separation}")
    if not (math.isfinite(temperature) and temperature > 0.0):
        raise DomainError(f"temperature must be > 0 K, got {temperature}")


def eq_force_dielectric(
    separation: float, temperature: float, alpha0: float, eps0: float
) -> float:
    """Equilibrium force on an atom near an ideal dielectric wall, N.

    -(3 k_B T / (4 a^4)) * alpha0 * (eps0 - 1) / (eps0 + 1); the
    classical large-separation asymptote with the dc conductivity of
    the wall disregarded.  eps0 = 1 is allowed and gives zero.
    """
    _check_geometry(separation, temperature)
    if eps0 < 1.0:
        raise DomainError(f"eps0 must be >= 1, got {eps0}")
    prefactor = -0.75 * BOLTZMANN * temperature / separation**4
    return prefactor * alpha0 * (eps0 - 1.0) / (eps0 + 1.0)


def eq_force_conducting(separation: float, temperature: float, alpha0: float) -> float:
    """Equilibrium force for a conducting wall, N.

    -(3 k_B T / (4 a^4)) * alpha0.  Applies to a metallic wall and to a
    dielectric wall whose dc conductivity is taken into account; it is
    the reflectivity-saturated limit of the dielectric formula.
    """
    _check_geometry(separation, temperature)
    return -0.75 * BOLTZMANN * temperature / separation**4 * alpha0


def neq_force_dielectric(
    separation: float, temperature: float, alpha0: float, eps0: float
) -> float:
    """Nonequilibrium force term for a dielectric-phase wall, N.

    -(pi alpha0 (k_B T)^2 / (6 c hbar a^3)) * (eps0 + 1) / sqrt(eps0 - 1).
    Singular at eps0 = 1, which is therefore rejected.  Valid while the
    thermal frequency stays well below the wall's characteristic
    absorption frequency.
    """
    _check_geometry(separation, temperature)
    if eps0 <= 1.0:
        raise DomainError(f"eps0 must be > 1 for the nonequilibrium dielectric term, got {eps0}")
    kt = BOLTZMANN * temperature
    prefactor = -math.pi * alpha0 * kt * kt / (6.0 * LIGHT_SPEED * HBAR * separation**3)
    return prefactor * (eps0 + 1.0) / math.sqrt(eps0 - 1.0)


def neq_force_metal(
    separation: float, temperature: float, alpha0: float, sigma_m: float
) -> float:
    """Nonequilibrium force term for a metallic-phase wall, N.

    -alpha0 zeta(3/2) sqrt(sigma_m) (k_B T)^(3/2) / (c sqrt(2 hbar) a^3),
    with the Drude conductivity sigma_m evaluated at the same
    temperature as the radiation (see :func:`force_total`).
    """
    _check_geometry(separation, temperature)
    if not (math.isfinite(alpha0) and alpha0 > 0.0):
        raise DomainError(f"alpha0 must be > 0 m^3, got {alpha0}")
    if not (math.isfinite(sigma_m) and sigma_m > 0.0):
        raise DomainError(f"sigma_m must be > 0 s^-1, got {sigma_m}")
    kt = BOLTZMANN * temperature
    numerator = alpha0 * ZETA_THREE_HALVES * math.sqrt(sigma_m) * kt**1.5
    return -numerator / (LIGHT_SPEED * math.sqrt(2.0 * HBAR) * separation**3)


def eq_gradient_dielectric(
    separation: float, temperature: float, alpha0: float, eps0: float
) -> float:
    """Separation derivative of :func:`eq_force_dielectric`, N/m
    (positive: the attraction weakens with distance)."""
    _check_geometry(separation, temperature)
    if eps0 < 1.0:
        raise DomainError(f"eps0 must be >= 1, got {eps0}")
    prefactor = 3.0 * BOLTZMANN * temperature / separation**5
    return prefactor * alpha0 * (eps0 - 1.0) / (eps0 + 1.0)


def eq_gradient_conducting(separation: float, temperature: float, alpha0: float) -> float:
    """Separation derivative of :func:`eq_force_conducting`, N/m."""
    _check_geometry(separation, temperature)
    return 3.0 * BOLTZMANN * temperature / separation**5 * alpha0


def neq_gradient_dielectric(
    separation: float, temperature: float, alpha0: float, eps0: float
) -> float:
    """Separation derivative of :func:`neq_force_dielectric`, N/m."""
    _check_geometry(separation, temperature)
    if eps0 <= 1.0:
        raise DomainError(f"eps0 must be > 1 for the nonequilibrium dielectric term, got {eps0}")
    kt = BOLTZMANN * temperature
    prefactor = math.pi * alpha0 * kt * kt / (2.0 * LIGHT_SPEED * HBAR * separation**4)
    return prefactor * (eps0 + 1.0) / math.sqrt(eps0 - 1.0)


def neq_gradient_metal(
    separation: float, temperature: float, alpha0: float, sigma_m: float
) -> float:
    """Separation derivative of :func:`neq_force_metal`, N/m."""
    _check_geometry(separation, temperature)
    if not (math.isfinite(alpha0) and alpha0 > 0.0):
        raise DomainError(f"alpha0 must be > 0 m^3, got {alpha0}")
    if not (math.isfinite(sigma_m) and sigma_m > 0.0):
        raise DomainError(f"sigma_m must be > 0 s^-1, got {sigma_m}")
    kt = BOLTZMANN * temperature
    numerator = 3.0 * alpha0 * ZETA_THREE_HALVES * math.sqrt(sigma_m) * kt**1.5
    return numerator / (LIGHT_SPEED * math.sqrt(2.0 * HBAR) * separation**4)


def _resolve_states(
    s: Scenario, wall_state: MaterialState | None, dielectric_env_term: bool
) -> tuple[MaterialState, MaterialState]:
    state_wall = wall_state if wall_state is not None else resolve_state(s.material, s.t_wall)
    if dielectric_env_term and state_wall.is_metal and s.material.dielectric is not None:
        state_env = MaterialState(s.material.dielectric, s.t_env)
    else:
        state_env = MaterialState(state_wall.spec, s.t_env)
    return state_wall, state_env


def _eq_term(s: Scenario, state_wall: MaterialState, gradient: bool) -> float:
    conducting = state_wall.is_metal or s.dc_mode is DcMode.INCLUDED
    if conducting:
        fn = eq_gradient_conducting if gradient else eq_force_conducting
        return fn(s.separation, s.t_env, s.atom.alpha0)
    fn = eq_gradient_dielectric if gradient else eq_force_dielectric
    return fn(s.separation, s.t_env, s.atom.alpha0, state_wall.spec.eps0)


def _neq_term(s: Scenario, spec, temperature: float, gradient: bool) -> float:
    if isinstance(spec, MetalSpec):
        sigma = drude_conductivity(spec, temperature)
        fn = neq_gradient_metal if gradient else neq_force_metal
        return fn(s.separation, temperature, s.atom.alpha0, sigma)
    fn = neq_gradient_dielectric if gradient else neq_force_dielectric
    return fn(s.separation, temperature, s.atom.alpha0, spec.eps0)


def _assemble(
    s: Scenario,
    wall_state: MaterialState | None,
    dielectric_env_term: bool,
    gradient: bool,
):
    state_wall, state_env = _resolve_states(s, wall_state, dielectric_env_term)
    eq = _eq_term(s, state_wall, gradient)
    neq_wall = _neq_term(s, state_wall.spec, s.t_wall, gradient)
    neq_env = _neq_term(s, state_env.spec, s.t_env, gradient)
    cls = GradientBreakdown if gradient else ForceBreakdown
    return cls(
        total=eq + neq_wall - neq_env,
        eq_term=eq,
        neq_wall_term=neq_wall,
        neq_env_term=neq_env,
        state_wall=state_wall,
        state_env=state_env,
        warnings=tuple(validity_check(s, state_wall=state_wall)),
    )


def force_total(
    s: Scenario,
    *,
    wall_state: MaterialState | None = None,
    dielectric_env_term: bool = False,
) -> ForceBreakdown:
    """Assemble the total Casimir-Polder force for a scenario.

    The wall phase is resolved once, at the wall temperature, and both
    nonequilibrium terms use that phase: the wall is a single object in
    a single state, while each term's temperature argument sets the
    radiation temperature (and, for a metal, the conductivity, which
    depends on temperature as a parameter).  The equilibrium term uses
    the dielectric formula only when the wall is in the dielectric
    phase and the dc conductivity is disregarded; otherwise the
    conducting-wall formula applies.

    ``wall_state`` overrides the phase resolution; it exists for
    branch-limit analysis exactly at the transition temperature.
    ``dielectric_env_term`` switches the environment-temperature term
    of a metallic-phase wall to the dielectric model, an off-by-default
    variant exposed so the effect of that modelling choice can be
    explored.

    At t_wall = t_env the two nonequilibrium terms are computed
    identically and the stored total equals the equilibrium term
    exactly.
    """
    return _assemble(s, wall_state, dielectric_env_term, gradient=False)


def gradient_total(
    s: Scenario,
    *,
    wall_state: MaterialState | None = None,
    dielectric_env_term: bool = False,
) -> GradientBreakdown:
    """Assemble the total force gradient, N/m; same rules as
    :func:`force_total`."""
    return _assemble(s, wall_state, dielectric_env_term, gradient=True)


def validity_check(
    s: Scenario, *, state_wall: MaterialState | None = None
) -> list[ValidityWarning]:
    """Check the applicability conditions of the asymptotic formulas.

    Emitted warnings (never fatal):

    * thermal-vs-char-freq: dielectric phase, thermal frequency at the
      hotter temperature above one tenth of the characteristic
      absorption frequency;
    * thermal-vs-conductivity: metallic phase, thermal frequency above
      one tenth of the Drude conductivity at the same temperature;
    * separation-outside-asymptotic-range: separation outside 5-10 um;
    * dc-sigma-not-small: dc conductivity included while sigma0 is not
      small against the thermal frequency at the environment
      temperature (the coldest, hence most conservative, choice).
    """
    state = state_wall if state_wall is not None else resolve_state(s.material, s.t_wall)
    warnings: list[ValidityWarning] = []
    t_hot = max(s.t_env, s.t_wall)

    if state.is_metal:
        sigma = drude_conductivity(state.spec, t_hot)
        ratio = thermal_frequency(t_hot) / sigma
        if ratio > REGIME_RATIO_THRESHOLD:
            warnings.append(
                ValidityWarning(WarningKind.THERMAL_VS_CONDUCTIVITY, ratio, REGIME_RATIO_THRESHOLD)
            )
    else:
        ratio = thermal_frequency(t_hot) / state.spec.char_freq
        if ratio > REGIME_RATIO_THRESHOLD:
            warnings.append(
                ValidityWarning(WarningKind.THERMAL_VS_CHAR_FREQ, ratio, REGIME_RATIO_THRESHOLD)
            )
        if s.dc_mode is DcMode.INCLUDED and state.spec.dc_sigma0 is not None:
            ratio = state.spec.dc_sigma0 / thermal_frequency(s.t_env)
            if ratio > REGIME_RATIO_THRESHOLD:
                warnings.append(
                    ValidityWarning(WarningKind.DC_SIGMA_NOT_SMALL, ratio, REGIME_RATIO_THRESHOLD)
                )

    lo, hi = ASYMPTOTIC_RANGE_M
    if s.separation < lo:
        warnings.append(
            ValidityWarning(
                WarningKind.SEPARATION_OUTSIDE_ASYMPTOTIC_RANGE, s.separation / lo, 1.0
            )
        )
    elif s.separation > hi:
        warnings.append(
            ValidityWarning(
                WarningKind.SEPARATION_OUTSIDE_ASYMPTOTIC_RANGE, s.separation / hi, 1.0
            )
        )
    return warnings


def formula_identifiers(
    state_wall: MaterialState, state_env: MaterialState, dc_mode: DcMode
) -> dict[str, str]:
    """Names of the formulas an assembly used, for output metadata."""
    if state_wall.is_metal or dc_mode is DcMode.INCLUDED:
        eq = "equilibrium-conducting"
    else:
        eq = "equilibrium-dielectric"
    return {
        "eq_term": eq,
        "neq_wall_term": "nonequilibrium-metal" if state_wall.is_metal else "nonequilibrium-dielectric",
        "neq_env_term": "nonequilibrium-metal" if state_env.is_metal else "nonequilibrium-dielectric",
    }
