"""Wall-material models.

Three kinds of wall are supported:

* a fixed dielectric, described by its static permittivity eps(0) plus
  an optional residual dc conductivity (order-of-magnitude value, used
  for validity checks only) and a characteristic absorption frequency;
* a fixed metal, described by a Drude model whose relaxation rate grows
  linearly with temperature, gamma(T) = relaxation_slope * T;
* a phase-change composite that behaves as the dielectric below a
  critical temperature t_c and as the metal at or above it.

The built-in registry holds a vanadium-dioxide film on sapphire
(phase change at 341 K) and fused silica (fixed dielectric).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .errors import ConflictError, DomainError, UnknownNameError, ValidationError

#: Default characteristic absorption frequency, rad/s, used when a
#: dielectric entry does not specify one.  Affects validity warnings
#: only, never force values.
DEFAULT_CHAR_FREQ = 1.5e15


@dataclass(frozen=True)
class DielectricSpec:
    """Dielectric wall parameters.

    eps0:      static permittivity, >= 1 (1 gives a vanishing
               equilibrium force and is rejected by the nonequilibrium
               formula, which is singular there).
    dc_sigma0: residual dc conductivity in 1/s, or None.  Stored as an
               order-of-magnitude figure; it gates which equilibrium
               formula applies and feeds validity checks, but never
               enters a force value.
    char_freq: characteristic absorption frequency, rad/s; validity
               checks compare it against the thermal frequency.
    """

    eps0: float
    dc_sigma0: float | None = None
    char_freq: float = DEFAULT_CHAR_FREQ

    def __post_init__(self) -> None:
        if not (math.isfinite(self.eps0) and self.eps0 >= 1.0):
            raise ValidationError(f"eps0 must be >= 1, got {self.eps0}")
        if self.dc_sigma0 is not None and not (
            math.isfinite(self.dc_sigma0) and self.dc_sigma0 > 0.0
        ):
            raise ValidationError(f"dc_sigma0 must be > 0 s^-1, got {self.dc_sigma0}")
        if not (math.isfinite(self.char_freq) and self.char_freq > 0.0):
            raise ValidationError(f"char_freq must be > 0 rad/s, got {self.char_freq}")


@dataclass(frozen=True)
class MetalSpec:
    """Drude-metal wall parameters.

    plasma_freq:      plasma frequency, rad/s.
    relaxation_slope: slope of the linear relaxation rate, rad/(s K),
                      so gamma(T) = relaxation_slope * T.
    """

    plasma_freq: float
    relaxation_slope: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.plasma_freq) and self.plasma_freq > 0.0):
            raise ValidationError(f"plasma_freq must be > 0 rad/s, got {self.plasma_freq}")
        if not (math.isfinite(self.relaxation_slope) and self.relaxation_slope > 0.0):
            raise ValidationError(
                f"relaxation_slope must be > 0 rad/(s K), got {self.relaxation_slope}"
            )


@dataclass(frozen=True)
class WallMaterial:
    """A named wall material of one of the three supported kinds."""

    name: str
    dielectric: DielectricSpec | None = None
    metal: MetalSpec | None = None
    t_c: float | None = None

    def __post_init__(self) -> None:
        if not self.name:
            raise ValidationError("material name must be non-empty")
        if self.t_c is not None:
            if not (math.isfinite(self.t_c) and self.t_c > 0.0):
                raise ValidationError(f"t_c must be > 0 K, got {self.t_c}")
            if self.dielectric is None or self.metal is None:
                raise ValidationError(
                    f"material {self.name!r}: a phase-change material needs both "
                    "a dielectric and a metal spec"
                )
        elif (self.dielectric is None) == (self.metal is None):
            raise ValidationError(
                f"material {self.name!r}: exactly one of dielectric/metal must be set "
                "for a fixed material"
            )

    @property
    def kind(self) -> str:
        if self.t_c is not None:
            return "phase_change"
        return "dielectric" if self.dielectric is not None else "metal"

    @property
    def is_phase_change(self) -> bool:
        return self.t_c is not None

    @staticmethod
    def fixed_dielectric(
        name: str,
        eps0: float,
        dc_sigma0: float | None = None,
        char_freq: float = DEFAULT_CHAR_FREQ,
    ) -> "WallMaterial":
        return WallMaterial(name, dielectric=DielectricSpec(eps0, dc_sigma0, char_freq))

    @staticmethod
    def fixed_metal(name: str, plasma_freq: float, relaxation_slope: float) -> "WallMaterial":
        return WallMaterial(name, metal=MetalSpec(plasma_freq, relaxation_slope))

    @staticmethod
    def phase_change(
        name: str, t_c: float, dielectric: DielectricSpec, metal: MetalSpec
    ) -> "WallMaterial":
        return WallMaterial(name, dielectric=dielectric, metal=metal, t_c=t_c)


@dataclass(frozen=True)
class MaterialState:
    """A wall resolved to one concrete phase at one temperature.

    Keeps the temperature used for the resolution so that reports can
    audit which phase each term was computed in.
    """

    spec: Union[DielectricSpec, MetalSpec]
    resolved_at: float

    @property
    def phase(self) -> str:
        return "metal" if isinstance(self.spec, MetalSpec) else "dielectric"

    @property
    def is_metal(self) -> bool:
        return isinstance(self.spec, MetalSpec)


def resolve_state(material: WallMaterial, t_wall: float) -> MaterialState:
    """Resolve a material to its phase at the given wall temperature.

    Fixed materials return their single spec unconditionally.  A
    phase-change material is dielectric strictly below t_c and metallic
    at or above it (the boundary itself counts as metallic; reports
    record the resolution temperature so this convention is auditable).
    """
    if not (math.isfinite(t_wall) and t_wall > 0.0):
        raise DomainError(f"wall temperature must be > 0 K, got {t_wall}")
    if material.t_c is not None:
        if t_wall >= material.t_c:
            return MaterialState(material.metal, t_wall)
        return MaterialState(material.dielectric, t_wall)
    spec = material.dielectric if material.dielectric is not None else material.metal
    return MaterialState(spec, t_wall)


def drude_conductivity(metal: MetalSpec, temperature: float) -> float:
    """Drude conductivity omega_p^2 / (4 pi gamma(T)) in 1/s.

    With the linear relaxation rate gamma(T) = slope * T this decreases
    as 1/T, so conductivity * temperature is constant for a given metal.
    """
    if not (math.isfinite(temperature) and temperature > 0.0):
        raise DomainError(f"temperature must be > 0 K, got {temperature}")
    gamma = metal.relaxation_slope * temperature
    return metal.plasma_freq**2 / (4.0 * math.pi * gamma)


def low_freq_permittivity(
    diel: DielectricSpec, omega: float, temperature: float
) -> complex:
    """Low-frequency permittivity eps0 + 4 pi i sigma0 / omega.

    The imaginary part is exactly zero when the spec carries no dc
    conductivity.  The temperature argument is accepted for signature
    stability; the stored dc conductivity is treated as constant in the
    temperature range of interest.
    """
    if not (math.isfinite(omega) and omega > 0.0):
        raise DomainError(f"angular frequency must be > 0 rad/s, got {omega}")
    if diel.dc_sigma0 is None:
        return complex(diel.eps0, 0.0)
    return complex(diel.eps0, 4.0 * math.pi * diel.dc_sigma0 / omega)


class MaterialRegistry(Mapping[str, WallMaterial]):
    """Immutable name -> WallMaterial mapping; extension returns a new
    registry, mirroring :class:`atomwall.atoms.AtomRegistry`."""

    def __init__(self, materials: Iterator[WallMaterial] | list[WallMaterial]):
        entries: dict[str, WallMaterial] = {}
        for material in materials:
            if material.name in entries:
                raise ConflictError(f"duplicate material name {material.name!r}")
            entries[material.name] = material
        self._entries = entries

    def __getitem__(self, name: str) -> WallMaterial:
        return self.lookup(name)

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def lookup(self, name: str) -> WallMaterial:
        material = self._entries.get(name)
        if material is None:
            raise UnknownNameError(f"unknown material {name!r}")
        return material

    def register(self, material: WallMaterial) -> "MaterialRegistry":
        if material.name in self._entries:
            raise ConflictError(f"material name {material.name!r} already registered")
        return MaterialRegistry(list(self._entries.values()) + [material])


_BUILTIN_MATERIALS = MaterialRegistry(
    [
        WallMaterial.phase_change(
            "VO2_on_sapphire",
            t_c=341.0,
            dielectric=DielectricSpec(eps0=9.909, dc_sigma0=1e11, char_freq=1.5e15),
            # relaxation rate 1.0e15 rad/s at 355 K, linear in T
            metal=MetalSpec(plasma_freq=5.06e15, relaxation_slope=1.0e15 / 355.0),
        ),
        # dc_sigma0 is an order-of-magnitude placeholder; it only gates
        # the equilibrium-formula switch and validity warnings
        WallMaterial.fixed_dielectric("SiO2", eps0=3.8, dc_sigma0=1e11, char_freq=1.5e15),
    ]
)


def builtin_materials() -> MaterialRegistry:
    """The built-in material registry (shared immutable instance)."""
    return _BUILTIN_MATERIALS
