"""Built-in figure presets and figure-data regeneration.

Each figure is a set of line presets (plain data, iterable by tests),
and regeneration writes one CSV per line plus a JSON manifest that
describes every line.  CSV floats are written with full round-trip
precision so that a re-evaluation of any row reproduces the stored
values bit for bit.

Figures 1-2: force magnitude vs separation for a heated phase-change
wall (figure 2 rescaled by a^3 / alpha0, which removes the atom
dependence).  Figures 3-4: force vs wall temperature at fixed
separation, equilibrium vs fixed-environment heating and different
atoms.  Figures 5-6: phase-change wall vs plain dielectric wall, with
a zoom around the transition.  Figure 7: the force-gradient version.
"""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass, replace
from pathlib import Path

import numpy as np

from . import __version__
from .atoms import AtomRegistry, builtin_atoms, file_safe_name
from .errors import ValidationError
from .forces import ACCURACY_NOTE, STATE_RESOLUTION_NOTE, DcMode, Scenario, force_total, gradient_total
from .materials import MaterialRegistry, builtin_materials
from .quantities import force_to_display
from .sweeps import Quantity, SweepSpec, SweepVariable, run_sweep

#: Grid density for every preset line; temperature grids this dense
#: keep the phase-transition discontinuity visually sharp.
LINE_POINTS = 201

FIGURE_IDS = (1, 2, 3, 4, 5, 6, 7)


@dataclass(frozen=True)
class LinePreset:
    """One plotted line: a sweep plus display conventions.

    family is "fixed-env" (environment held at t_env) or "equilibrium"
    (environment heated together with the wall, in which case t_env is
    ignored and tracks the grid).  display names the derived column
    written next to the raw breakdown.
    """

    figure: int
    line_id: str
    quantity: Quantity
    atom: str
    material: str
    dc_mode: DcMode
    family: str
    variable: SweepVariable
    start: float
    stop: float
    points: int
    style: str
    display: str
    t_env: float | None = None
    t_wall: float | None = None
    separation: float | None = None  # fixed separation for temperature lines


def _separation_line(figure, line_id, t_wall, dc, style, display):
    return LinePreset(
        figure=figure,
        line_id=line_id,
        quantity=Quantity.FORCE,
        atom="Rb",
        material="VO2_on_sapphire",
        dc_mode=dc,
        family="fixed-env",
        variable=SweepVariable.SEPARATION,
        start=5e-6,
        stop=10e-6,
        points=LINE_POINTS,
        style=style,
        display=display,
        t_env=300.0,
        t_wall=t_wall,
    )


def _temperature_line(
    figure, line_id, *, atom="Rb", material="VO2_on_sapphire", dc, family="fixed-env",
    start, stop, style, t_env=None, quantity=Quantity.FORCE, display="signed-1e-13fN",
    points=LINE_POINTS, separation=5e-6,
):
    return LinePreset(
        figure=figure,
        line_id=line_id,
        quantity=quantity,
        atom=atom,
        material=material,
        dc_mode=dc,
        family=family,
        variable=SweepVariable.WALL_TEMPERATURE,
        start=start,
        stop=stop,
        points=points,
        style=style,
        display=display,
        t_env=t_env,
        separation=separation,
    )


def _separation_figure(figure: int, display: str) -> tuple[LinePreset, ...]:
    dis, inc = DcMode.DISREGARDED, DcMode.INCLUDED
    return (
        _separation_line(figure, "tw300-dc-disregarded-solid", 300.0, dis, "solid", display),
        _separation_line(figure, "tw300-dc-included-dashed", 300.0, inc, "dashed", display),
        _separation_line(figure, "tw340-dc-disregarded-solid", 340.0, dis, "solid", display),
        _separation_line(figure, "tw340-dc-included-dashed", 340.0, inc, "dashed", display),
        _separation_line(figure, "tw345-solid", 345.0, dis, "solid", display),
        _separation_line(figure, "tw385-solid", 385.0, dis, "solid", display),
    )


def _atom_triplet(figure: int, atom: str, t_env: float) -> tuple[LinePreset, ...]:
    tag = file_safe_name(atom).lower()
    dis, inc = DcMode.DISREGARDED, DcMode.INCLUDED
    return (
        _temperature_line(figure, f"{tag}-dc-disregarded-solid", atom=atom, dc=dis,
                          start=300.0, stop=340.0, style="solid", t_env=t_env),
        _temperature_line(figure, f"{tag}-dc-included-dashed", atom=atom, dc=inc,
                          start=300.0, stop=340.0, style="dashed", t_env=t_env),
        _temperature_line(figure, f"{tag}-metal-solid", atom=atom, dc=dis,
                          start=342.0, stop=380.0, style="solid", t_env=t_env),
    )


def _wall_comparison(figure, *, quantity, display, sio2_range, vo2_metal_stop, suffix=""):
    dis, inc = DcMode.DISREGARDED, DcMode.INCLUDED
    lo, hi = sio2_range
    kw = dict(quantity=quantity, display=display, t_env=310.0, separation=7e-6)
    return (
        _temperature_line(figure, f"sio2-dc-disregarded-solid{suffix}", material="SiO2", dc=dis,
                          start=lo, stop=hi, style="solid", **kw),
        _temperature_line(figure, f"sio2-dc-included-dashed{suffix}", material="SiO2", dc=inc,
                          start=lo, stop=hi, style="dashed", **kw),
        _temperature_line(figure, f"vo2-dc-disregarded-solid{suffix}", dc=dis,
                          start=max(lo, 310.0), stop=340.0, style="solid", **kw),
        _temperature_line(figure, f"vo2-dc-included-dashed{suffix}", dc=inc,
                          start=max(lo, 310.0), stop=340.0, style="dashed", **kw),
        _temperature_line(figure, f"vo2-metal-solid{suffix}", dc=dis,
                          start=342.0, stop=vo2_metal_stop, style="solid", **kw),
    )


def _build_presets() -> dict[int, tuple[LinePreset, ...]]:
    dis, inc = DcMode.DISREGARDED, DcMode.INCLUDED
    fig3 = (
        _temperature_line(3, "equilibrium-dielectric-dc-disregarded-solid", dc=dis,
                          family="equilibrium", start=300.0, stop=340.0, style="solid"),
        _temperature_line(3, "equilibrium-dielectric-dc-included-dashed", dc=inc,
                          family="equilibrium", start=300.0, stop=340.0, style="dashed"),
        _temperature_line(3, "equilibrium-metal-solid", dc=dis,
                          family="equilibrium", start=342.0, stop=380.0, style="solid"),
        _temperature_line(3, "noneq-dielectric-dc-disregarded-solid", dc=dis,
                          start=300.0, stop=340.0, style="solid", t_env=300.0),
        _temperature_line(3, "noneq-dielectric-dc-included-dashed", dc=inc,
                          start=300.0, stop=340.0, style="dashed", t_env=300.0),
        _temperature_line(3, "noneq-metal-solid", dc=dis,
                          start=342.0, stop=380.0, style="solid", t_env=300.0),
    )
    fig4 = sum((_atom_triplet(4, atom, 300.0) for atom in ("Na", "He*", "Cs")), ())
    grad = "gradient-N-per-m"
    fig7 = _wall_comparison(7, quantity=Quantity.GRADIENT, display=grad,
                            sio2_range=(310.0, 605.0), vo2_metal_stop=605.0)
    fig7_inset = _wall_comparison(7, quantity=Quantity.GRADIENT, display=grad,
                                  sio2_range=(336.0, 346.0), vo2_metal_stop=346.0,
                                  suffix="-inset")
    return {
        1: _separation_figure(1, "magnitude-1e-13fN"),
        2: _separation_figure(2, "magnitude-collapse-N"),
        3: fig3,
        4: fig4,
        5: _wall_comparison(5, quantity=Quantity.FORCE, display="signed-1e-13fN",
                            sio2_range=(310.0, 605.0), vo2_metal_stop=605.0),
        6: _wall_comparison(6, quantity=Quantity.FORCE, display="signed-1e-13fN",
                            sio2_range=(330.0, 350.0), vo2_metal_stop=350.0),
        7: fig7 + fig7_inset,
    }


FIGURE_PRESETS: dict[int, tuple[LinePreset, ...]] = _build_presets()

_DISPLAY_COLUMNS = {
    "magnitude-1e-13fN": "magnitude_1e-13fN",
    "magnitude-collapse-N": "magnitude_times_a3_over_alpha0_N",
    "signed-1e-13fN": "force_1e-13fN",
    "gradient-N-per-m": None,
}


def figure_presets(figure: int) -> tuple[LinePreset, ...]:
    if figure not in FIGURE_PRESETS:
        raise ValidationError(f"figure id must be one of {FIGURE_IDS}, got {figure}")
    return FIGURE_PRESETS[figure]


def evaluate_line(
    preset: LinePreset,
    atoms: AtomRegistry | None = None,
    materials: MaterialRegistry | None = None,
) -> list[dict]:
    """Evaluate a line preset into a list of row dicts (CSV-ready)."""
    atoms = atoms if atoms is not None else builtin_atoms()
    materials = materials if materials is not None else builtin_materials()
    atom = atoms.lookup(preset.atom)
    material = materials.lookup(preset.material)

    if preset.family == "equilibrium":
        grid = [float(v) for v in np.linspace(preset.start, preset.stop, preset.points)]
        evaluate = force_total if preset.quantity is Quantity.FORCE else gradient_total
        pairs = [
            (t, evaluate(Scenario(atom, material, preset.separation, t, t, preset.dc_mode)))
            for t in grid
        ]
    else:
        if preset.variable is SweepVariable.SEPARATION:
            base = Scenario(atom, material, preset.start, preset.t_env, preset.t_wall,
                            preset.dc_mode)
        else:
            base = Scenario(atom, material, preset.separation, preset.t_env, preset.start,
                            preset.dc_mode)
        spec = SweepSpec(base, preset.variable, preset.start, preset.stop, preset.points)
        pairs = list(run_sweep(spec, preset.quantity).rows)

    unit = "_N" if preset.quantity is Quantity.FORCE else "_N_per_m"
    rows = []
    for x, b in pairs:
        if preset.variable is SweepVariable.SEPARATION:
            row = {"separation_um": x * 1e6, "separation_m": x}
            a = x
        else:
            a = preset.separation
            t_env = x if preset.family == "equilibrium" else preset.t_env
            row = {"t_wall_K": x, "t_env_K": t_env}
        display_col = _DISPLAY_COLUMNS[preset.display]
        if display_col is not None:
            if preset.display == "magnitude-1e-13fN":
                row[display_col] = force_to_display(abs(b.total))
            elif preset.display == "magnitude-collapse-N":
                row[display_col] = abs(b.total) * a**3 / atom.alpha0
            else:
                row[display_col] = force_to_display(b.total)
        row["total" + unit] = b.total
        row["eq_term" + unit] = b.eq_term
        row["neq_wall_term" + unit] = b.neq_wall_term
        row["neq_env_term" + unit] = b.neq_env_term
        row["state_wall"] = b.state_wall.phase
        rows.append(row)
    return rows


def _line_manifest_entry(preset: LinePreset, csv_name: str) -> dict:
    entry = asdict(preset)
    entry["quantity"] = preset.quantity.value
    entry["dc_mode"] = preset.dc_mode.value
    entry["variable"] = preset.variable.value
    entry["atom_file_name"] = file_safe_name(preset.atom)
    entry["csv"] = csv_name
    return entry


def write_figure(
    figure: int,
    outdir: str | Path,
    atoms: AtomRegistry | None = None,
    materials: MaterialRegistry | None = None,
) -> dict:
    """Write every line CSV of a figure plus its manifest; returns the
    manifest dict."""
    presets = figure_presets(figure)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    entries = []
    for preset in presets:
        rows = evaluate_line(preset, atoms, materials)
        csv_name = f"fig{figure}_{preset.line_id}.csv"
        with open(outdir / csv_name, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            header = list(rows[0].keys())
            writer.writerow(header)
            for row in rows:
                writer.writerow(
                    [repr(v) if isinstance(v, float) else v for v in row.values()]
                )
        entries.append(_line_manifest_entry(preset, csv_name))
    manifest = {
        "figure": figure,
        "tool_version": __version__,
        "metadata": {
            "state_resolution": STATE_RESOLUTION_NOTE,
            "accuracy_note": ACCURACY_NOTE,
            "float_format": "round-trip repr",
        },
        "lines": entries,
    }
    with open(outdir / f"fig{figure}_manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    return manifest


def scenario_for_row(preset: LinePreset, x: float, atoms=None, materials=None) -> Scenario:
    """Rebuild the scenario behind one row of a line CSV; used by tests
    and by consumers re-deriving values from manifests."""
    atoms = atoms if atoms is not None else builtin_atoms()
    materials = materials if materials is not None else builtin_materials()
    atom = atoms.lookup(preset.atom)
    material = materials.lookup(preset.material)
    if preset.variable is SweepVariable.SEPARATION:
        return Scenario(atom, material, x, preset.t_env, preset.t_wall, preset.dc_mode)
    separation = 5e-6 if preset.figure in (3, 4) else 7e-6
    t_env = x if preset.family == "equilibrium" else preset.t_env
    return Scenario(atom, material, separation, t_env, x, preset.dc_mode)
