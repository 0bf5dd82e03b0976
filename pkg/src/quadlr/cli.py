"""Command-line front end: tables, curves, crossings, derived quantities.

All data goes to stdout as CSV (default) or a single JSON document;
diagnostics go to stderr.  Exit codes: 0 success, 2 bad species input,
3 invalid arguments (j, radial window, grid).  Numbers are printed with 12
significant digits, except table C5 values in atomic units, which are
rounded to integers to match the precision the input data supports.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from . import landscape, selfcheck, units
from .species import SpeciesError, SpeciesPair, resolve
from .spectra import c5_spectrum

__all__ = ["main", "entry", "OutputRecord"]

EXIT_OK = 0
EXIT_SPECIES = 2
EXIT_INVALID = 3


@dataclass
class OutputRecord:
    """One command's output: echo, species, and a column-oriented payload."""

    command: str
    species_name: str
    columns: list[str]
    units: dict[str, str]
    rows: list[list[object]]


def _fmt(value: object) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _json_value(value: object) -> object:
    # Floats are re-parsed from the printed form so CSV and JSON agree exactly.
    if isinstance(value, float):
        return float(_fmt(value))
    return value


def render_csv(record: OutputRecord) -> str:
    buffer = io.StringIO()
    buffer.write(f"# command: {record.command}\n")
    buffer.write(f"# species: {record.species_name}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    header = [
        f"{name}[{record.units[name]}]" if name in record.units else name
        for name in record.columns
    ]
    writer.writerow(header)
    for row in record.rows:
        writer.writerow([_fmt(value) for value in row])
    return buffer.getvalue()


def render_json(record: OutputRecord) -> str:
    document = {
        "command": record.command,
        "species": record.species_name,
        "columns": record.columns,
        "units": record.units,
        "rows": [[_json_value(value) for value in row] for row in record.rows],
    }
    return json.dumps(document, ensure_ascii=False, indent=2) + "\n"


def _round_au(value: float) -> int:
    """Round half away from zero, as printed physics tables do."""
    return int(math.floor(abs(value) + 0.5)) * (1 if value >= 0 else -1)


def cmd_table(species: SpeciesPair, j_list: list[int], command: str) -> OutputRecord:
    rows: list[list[object]] = []
    for j in j_list:
        if j < 0:
            raise ValueError(f"j must be non-negative, got {j}")
        for entry in c5_spectrum(j, species):
            rows.append(
                [entry.j, entry.m_total, entry.label, entry.c5_reduced, _round_au(entry.c5_au)]
            )
    return OutputRecord(
        command=command,
        species_name=species.name,
        columns=["j", "m_J", "label", "c5_reduced", "c5"],
        units={"j": "1", "m_J": "1", "c5_reduced": "q2_0*r2_atom", "c5": "a.u."},
        rows=rows,
    )


def cmd_curves(
    species: SpeciesPair,
    j_max: int,
    r_min: float | None,
    r_max: float,
    points: int,
    allow_below_leroy: bool,
    command: str,
) -> OutputRecord:
    if j_max < 0:
        raise ValueError(f"jmax must be non-negative, got {j_max}")
    floor = landscape.le_roy_radius(species)
    if r_min is None:
        r_min = floor
    if r_min < floor and not allow_below_leroy:
        raise ValueError(
            f"rmin = {r_min:g} bohr is below the Le Roy radius {floor:g}; "
            "pass --allow-below-leroy to override"
        )
    grid = landscape.default_grid(species, r_min=r_min, r_max=r_max, points=points)
    rows: list[list[object]] = []
    for j in range(j_max + 1):
        entries = c5_spectrum(j, species)
        ordinal: dict[tuple[int, int, str], int] = {}
        for entry in entries:
            key = (entry.j, entry.m_total, entry.label)
            k = ordinal.setdefault(key, 0)
            ordinal[key] = k + 1
            series = f"j{entry.j}:mJ{entry.m_total:+d}:{entry.label}:{k}"
            sampled = landscape.curve(entry, species, grid, min_radius=0.0 if allow_below_leroy else None)
            for radius, energy in zip(sampled.r.tolist(), sampled.energy.tolist()):
                rows.append(
                    [
                        series,
                        entry.j,
                        entry.m_total,
                        entry.label,
                        entry.c5_au,
                        radius,
                        energy,
                        units.hartree_to_invcm(energy),
                    ]
                )
    return OutputRecord(
        command=command,
        species_name=species.name,
        columns=["series", "j", "m_J", "label", "c5", "R", "E", "E_cm"],
        units={
            "j": "1",
            "m_J": "1",
            "c5": "a.u.",
            "R": "bohr",
            "E": "hartree",
            "E_cm": "cm^-1",
        },
        rows=rows,
    )


def cmd_crossings(
    species: SpeciesPair,
    j_max: int,
    r_min: float,
    r_max: float,
    command: str,
) -> OutputRecord:
    if j_max < 0:
        raise ValueError(f"jmax must be non-negative, got {j_max}")
    entries = [entry for j in range(j_max + 1) for entry in c5_spectrum(j, species)]
    found = landscape.crossings(entries, species, (r_min, r_max))
    rows: list[list[object]] = [
        [c.curve_a, c.curve_b, c.r_cross, c.e_cross, units.hartree_to_invcm(c.e_cross)]
        for c in found
    ]
    return OutputRecord(
        command=command,
        species_name=species.name,
        columns=["curve_a", "curve_b", "R", "E", "E_cm"],
        units={"R": "bohr", "E": "hartree", "E_cm": "cm^-1"},
        rows=rows,
    )


def cmd_derived(
    species: SpeciesPair,
    temperature_uk: float,
    n_max: int,
    command: str,
) -> OutputRecord:
    if temperature_uk <= 0:
        raise ValueError(f"temperature must be positive, got {temperature_uk} uK")
    if n_max < 1:
        raise ValueError(f"nmax must be at least 1, got {n_max}")
    temperature_k = temperature_uk * 1e-6
    rows: list[list[object]] = [
        ["temperature", "uK", temperature_uk],
        ["r0_squared", "bohr^2", landscape.r0_squared(species)],
        ["le_roy_radius", "bohr", landscape.le_roy_radius(species)],
        ["r_m_estimate", "bohr", landscape.r_m_estimate(species)],
    ]
    for n_wave in range(1, n_max + 1):
        barrier = landscape.barrier_height(n_wave, species)
        rows.append([f"barrier_N{n_wave}", "hartree", barrier])
        rows.append([f"barrier_N{n_wave}", "cm^-1", units.hartree_to_invcm(barrier)])
        rows.append([f"barrier_N{n_wave}", "uK", units.hartree_to_microkelvin(barrier)])
    rows.append(["max_partial_wave", "1", landscape.max_partial_wave(temperature_k, species)])
    return OutputRecord(
        command=command,
        species_name=species.name,
        columns=["quantity", "unit", "value"],
        units={"value": "per-row unit column"},
        rows=rows,
    )


def cmd_check(command: str) -> tuple[OutputRecord, bool]:
    results = selfcheck.run_all()
    rows: list[list[object]] = [
        [r.name, "PASS" if r.passed else "FAIL", r.detail] for r in results
    ]
    record = OutputRecord(
        command=command,
        species_name="builtin oracle suite",
        columns=["check", "status", "detail"],
        units={},
        rows=rows,
    )
    return record, all(r.passed for r in results)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadlr",
        description=(
            "Anisotropic C5 coefficients and long-range landscape for a "
            "rotating dimer interacting with a P-state atom."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, with_species: bool = True) -> None:
        if with_species:
            p.add_argument(
                "--species",
                required=True,
                help="built-in name (cs, li) or path to a species file "
                "(also searched in $QUADLR_SPECIES_DIR)",
            )
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p_table = sub.add_parser("table", help="C5 table for one or more j levels")
    add_common(p_table)
    p_table.add_argument("--j", action="append", type=int, required=True,
                         help="dimer rotational level (repeatable)")

    p_curves = sub.add_parser("curves", help="sampled potential curves")
    add_common(p_curves)
    p_curves.add_argument("--jmax", type=int, default=4)
    p_curves.add_argument("--rmin", type=float, default=None,
                          help="bohr; defaults to the Le Roy radius")
    p_curves.add_argument("--rmax", type=float, default=units.DEFAULT_R_MAX)
    p_curves.add_argument("--points", type=int, default=units.DEFAULT_GRID_POINTS)
    p_curves.add_argument("--allow-below-leroy", action="store_true",
                          help="permit radii below the Le Roy radius")

    p_cross = sub.add_parser("crossings", help="analytic curve crossings")
    add_common(p_cross)
    p_cross.add_argument("--jmax", type=int, default=4)
    p_cross.add_argument("--rmin", type=float, default=None,
                         help="bohr; defaults to the Le Roy radius")
    p_cross.add_argument("--rmax", type=float, default=units.DEFAULT_R_MAX)

    p_der = sub.add_parser("derived", help="Le Roy radius, validity radius, barriers")
    add_common(p_der)
    p_der.add_argument("--temperature-uK", dest="temperature_uk", type=float, default=100.0)
    p_der.add_argument("--nmax", type=int, default=8)

    p_check = sub.add_parser("check", help="run the built-in oracle suite")
    add_common(p_check, with_species=False)

    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(argv)
    command = "quadlr " + " ".join(argv)

    try:
        if args.subcommand == "check":
            record, passed = cmd_check(command)
            exit_code = EXIT_OK if passed else 1
        else:
            species = resolve(args.species)
            if args.subcommand == "table":
                record = cmd_table(species, args.j, command)
            elif args.subcommand == "curves":
                record = cmd_curves(
                    species,
                    args.jmax,
                    args.rmin,
                    args.rmax,
                    args.points,
                    args.allow_below_leroy,
                    command,
                )
            elif args.subcommand == "crossings":
                r_min = args.rmin if args.rmin is not None else landscape.le_roy_radius(species)
                record = cmd_crossings(species, args.jmax, r_min, args.rmax, command)
            elif args.subcommand == "derived":
                record = cmd_derived(species, args.temperature_uk, args.nmax, command)
            else:  # pragma: no cover - argparse enforces the choices
                raise AssertionError(args.subcommand)
            exit_code = EXIT_OK
    except SpeciesError as exc:
        print(f"quadlr: species error: {exc}", file=sys.stderr)
        return EXIT_SPECIES
    except (ValueError, ArithmeticError) as exc:
        print(f"quadlr: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID

    text = render_json(record) if args.format == "json" else render_csv(record)
    sys.stdout.write(text)
    return exit_code


def entry() -> None:
    raise SystemExit(main())
