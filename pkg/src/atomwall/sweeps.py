"""Parameter sweeps, phase-transition jump reports, and crossover
root finding on top of the force kernel.

Grid points are evaluated independently of each other, so results are
deterministic and identical regardless of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Union

import numpy as np

from .atoms import Atom
from .errors import OutOfRangeError, ValidationError
from .forces import (
    ACCURACY_NOTE,
    STATE_RESOLUTION_NOTE,
    DcMode,
    ForceBreakdown,
    GradientBreakdown,
    Scenario,
    force_total,
    gradient_total,
)
from .materials import MaterialState, WallMaterial

Breakdown = Union[ForceBreakdown, GradientBreakdown]


class Quantity(Enum):
    FORCE = "force"
    GRADIENT = "gradient"


class SweepVariable(Enum):
    SEPARATION = "separation"
    WALL_TEMPERATURE = "wall_temperature"


class JumpMode(Enum):
    """How the two sides of the phase transition are probed.

    NONEQUILIBRIUM_FIXED_ENV holds the environment temperature fixed
    while the wall crosses the transition; FULL_EQUILIBRIUM heats the
    environment together with the wall, so each side is a pure
    equilibrium evaluation.
    """

    NONEQUILIBRIUM_FIXED_ENV = "nonequilibrium-fixed-env"
    FULL_EQUILIBRIUM = "full-equilibrium"


@dataclass(frozen=True)
class SweepSpec:
    """A linear grid over separation or wall temperature.

    The remaining scenario fields are taken from ``base``.  Temperature
    sweeps must start at or above the base environment temperature.
    """

    base: Scenario
    variable: SweepVariable
    start: float
    stop: float
    points: int
    scale: str = "linear"

    def __post_init__(self) -> None:
        if self.scale != "linear":
            raise ValidationError(f"only linear sweeps are supported, got {self.scale!r}")
        if self.points < 2:
            raise ValidationError(f"a sweep needs at least 2 points, got {self.points}")
        if not (self.start < self.stop):
            raise ValidationError(f"sweep needs start < stop, got [{self.start}, {self.stop}]")
        if self.variable is SweepVariable.WALL_TEMPERATURE and self.start < self.base.t_env:
            raise ValidationError(
                f"wall-temperature sweep must start at or above the environment "
                f"temperature ({self.base.t_env} K), got {self.start} K"
            )


@dataclass(frozen=True)
class SweepResult:
    """Ordered sweep rows plus phase-transition annotations.

    transition_indices lists every index i such that the grid interval
    [i, i+1] straddles a phase change of the wall.
    """

    variable: SweepVariable
    quantity: Quantity
    rows: tuple[tuple[float, Breakdown], ...]
    transition_indices: tuple[int, ...]
    metadata: dict


@dataclass(frozen=True)
class JumpReport:
    """Force breakdowns just below and just above the transition.

    delta is the relative temperature offset of each probe from the
    critical temperature; jump_ratio = |above.total| / |below.total|.
    """

    t_c: float
    below: ForceBreakdown
    above: ForceBreakdown
    delta: float
    jump_ratio: float
    mode: JumpMode


@dataclass(frozen=True)
class GapUnreachable:
    """Returned by :func:`find_crossover_temperature` when the target
    magnitude falls inside the discontinuity at the phase transition.

    below_limit is the magnitude the dielectric branch approaches at
    the critical temperature; above_limit is the metallic-branch value
    exactly there."""

    t_c: float
    below_limit: float
    above_limit: float
    target: float


@dataclass(frozen=True)
class MaterialComparison:
    """Breakdowns for the same scenario against two wall materials,
    with the magnitude ratio |first| / |second|."""

    first: Breakdown
    second: Breakdown
    ratio: float
    quantity: Quantity


def _evaluator(quantity: Quantity) -> Callable[..., Breakdown]:
    return force_total if quantity is Quantity.FORCE else gradient_total


def run_sweep(
    spec: SweepSpec,
    quantity: Quantity = Quantity.FORCE,
    *,
    dielectric_env_term: bool = False,
) -> SweepResult:
    """Evaluate the force or gradient on the sweep grid.

    Every row carries the full breakdown at its grid value.  A grid
    point exactly at the critical temperature resolves metallic, like
    any single-scenario evaluation.
    """
    evaluate = _evaluator(quantity)
    grid = [float(v) for v in np.linspace(spec.start, spec.stop, spec.points)]
    rows: list[tuple[float, Breakdown]] = []
    for value in grid:
        if spec.variable is SweepVariable.SEPARATION:
            scenario = replace(spec.base, separation=value)
        else:
            scenario = replace(spec.base, t_wall=value)
        rows.append((value, evaluate(scenario, dielectric_env_term=dielectric_env_term)))
    transitions = tuple(
        i
        for i in range(len(rows) - 1)
        if rows[i][1].state_wall.phase != rows[i + 1][1].state_wall.phase
    )
    metadata = {
        "quantity": quantity.value,
        "variable": spec.variable.value,
        "dc_mode": spec.base.dc_mode.value,
        "dielectric_env_term": dielectric_env_term,
        "state_resolution": STATE_RESOLUTION_NOTE,
        "accuracy_note": ACCURACY_NOTE,
        "formulas": [
            "equilibrium-dielectric",
            "equilibrium-conducting",
            "nonequilibrium-dielectric",
            "nonequilibrium-metal",
        ],
    }
    return SweepResult(spec.variable, quantity, tuple(rows), transitions, metadata)


def transition_jump_probes(
    base: Scenario,
    mode: JumpMode,
    t_below: float | None = None,
    t_above: float | None = None,
) -> JumpReport:
    """Jump report with explicit probe temperatures.

    Defaults to one kelvin on each side of the critical temperature,
    the canonical probe pair used by the built-in figure presets
    (340 K / 342 K for the built-in phase-change wall).
    """
    material = base.material
    if not material.is_phase_change:
        raise ValidationError(
            f"transition analysis needs a phase-change material, got {material.name!r}"
        )
    t_c = material.t_c
    if t_below is None:
        t_below = t_c - 1.0
    if t_above is None:
        t_above = t_c + 1.0
    if not (t_below < t_c <= t_above):
        raise ValidationError(
            f"probes must straddle the transition: need t_below < {t_c} <= t_above, "
            f"got {t_below} and {t_above}"
        )
    if mode is JumpMode.FULL_EQUILIBRIUM:
        below = force_total(replace(base, t_env=t_below, t_wall=t_below))
        above = force_total(replace(base, t_env=t_above, t_wall=t_above))
    else:
        below = force_total(replace(base, t_wall=t_below))
        above = force_total(replace(base, t_wall=t_above))
    return JumpReport(
        t_c=t_c,
        below=below,
        above=above,
        delta=(t_above - t_c) / t_c,
        jump_ratio=abs(above.total) / abs(below.total),
        mode=mode,
    )


def transition_jump(base: Scenario, delta: float, mode: JumpMode) -> JumpReport:
    """Jump report with probes at t_c (1 -+ delta), 0 < delta <= 1e-2."""
    if not base.material.is_phase_change:
        raise ValidationError(
            f"transition analysis needs a phase-change material, got {base.material.name!r}"
        )
    if not (math.isfinite(delta) and 0.0 < delta <= 1e-2):
        raise ValidationError(f"delta must satisfy 0 < delta <= 1e-2, got {delta}")
    t_c = base.material.t_c
    return transition_jump_probes(base, mode, t_c * (1.0 - delta), t_c * (1.0 + delta))


def find_crossover_temperature(
    atom: Atom,
    material: WallMaterial,
    separation: float,
    t_env: float,
    dc_mode: DcMode,
    target_magnitude: float,
    t_lo: float,
    t_hi: float,
    *,
    quantity: Quantity = Quantity.FORCE,
    temperature_tolerance: float = 1e-6,
) -> Union[float, GapUnreachable]:
    """Wall temperature at which |force| (or |gradient|) hits a target.

    The magnitude is strictly increasing in the wall temperature on
    each material phase, with at most one jump at the critical
    temperature, so plain bisection over the correct branch is robust.
    If the target falls inside the jump, a :class:`GapUnreachable`
    carrying both branch limits is returned instead of a temperature.

    The default interval tolerance of 1e-6 K is chosen so that the
    magnitude at the returned temperature matches the target to better
    than 1e-6 relative; looser tolerances trade accuracy for fewer
    evaluations.

    Raises :class:`OutOfRangeError` when the target lies below the
    magnitude at t_lo or above the one at t_hi.
    """
    if not (math.isfinite(target_magnitude) and target_magnitude > 0.0):
        raise ValidationError(f"target magnitude must be > 0, got {target_magnitude}")
    if t_lo < t_env:
        raise ValidationError(f"search start ({t_lo} K) must be >= t_env ({t_env} K)")
    if not (t_hi > t_lo):
        raise ValidationError(f"search interval needs t_hi > t_lo, got [{t_lo}, {t_hi}]")

    evaluate = _evaluator(quantity)

    def magnitude(t_wall: float, wall_state: MaterialState | None = None) -> float:
        scenario = Scenario(atom, material, separation, t_env, t_wall, dc_mode)
        return abs(evaluate(scenario, wall_state=wall_state).total)

    lo_val = magnitude(t_lo)
    hi_val = magnitude(t_hi)
    if target_magnitude < lo_val * (1.0 - 1e-12):
        raise OutOfRangeError(
            f"target {target_magnitude:.6e} below the value {lo_val:.6e} at t_lo",
            lo_val,
            hi_val,
            target_magnitude,
        )
    if target_magnitude > hi_val * (1.0 + 1e-12):
        raise OutOfRangeError(
            f"target {target_magnitude:.6e} above the value {hi_val:.6e} at t_hi",
            lo_val,
            hi_val,
            target_magnitude,
        )
    if target_magnitude <= lo_val:
        return t_lo
    if target_magnitude >= hi_val:
        return t_hi

    lo, hi = t_lo, t_hi
    if material.is_phase_change and t_lo < material.t_c <= t_hi:
        t_c = material.t_c
        # the dielectric branch is open at t_c; evaluate its limit there
        # by forcing the dielectric state
        below_limit = magnitude(t_c, wall_state=MaterialState(material.dielectric, t_c))
        above_limit = magnitude(t_c)
        if target_magnitude < below_limit:
            hi = t_c  # root strictly inside the dielectric branch
        elif target_magnitude >= above_limit:
            lo = t_c
        else:
            return GapUnreachable(t_c, below_limit, above_limit, target_magnitude)

    while hi - lo > temperature_tolerance:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # interval below float resolution
            break
        if magnitude(mid) < target_magnitude:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def compare_materials(
    separation: float,
    t_env: float,
    t_wall: float,
    atom: Atom,
    material_1: WallMaterial,
    material_2: WallMaterial,
    quantity: Quantity = Quantity.FORCE,
    dc_mode: DcMode = DcMode.DISREGARDED,
) -> MaterialComparison:
    """Evaluate one scenario against two wall materials and report the
    magnitude ratio |first| / |second|."""
    evaluate = _evaluator(quantity)
    first = evaluate(Scenario(atom, material_1, separation, t_env, t_wall, dc_mode))
    second = evaluate(Scenario(atom, material_2, separation, t_env, t_wall, dc_mode))
    return MaterialComparison(
        first=first,
        second=second,
        ratio=abs(first.total) / abs(second.total),
        quantity=quantity,
    )
