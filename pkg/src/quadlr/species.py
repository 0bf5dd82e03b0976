"""Physical input data: built-in parameter sets and the species file format.

A species pair bundles everything the interaction and landscape layers need:
the dimer body-frame quadrupole moment q2_0, the atomic mean squared radius
<r_nl^2>, the atomic orbital momentum, the rotational constant, the bond
length, the atomic mass, and either the dimer quadrupole-tensor diagonals or
a direct <r_0^2> override for the Le Roy radius.

The on-disk format is flat UTF-8 ``key = value`` lines with ``#`` comments.
Unknown keys are rejected to catch typos.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path

from . import units

__all__ = [
    "SpeciesPair",
    "SpeciesError",
    "builtin_cs",
    "builtin_li",
    "builtin_names",
    "load",
    "loads",
    "serialize",
    "resolve",
    "SPECIES_DIR_ENV",
]

SPECIES_DIR_ENV = "QUADLR_SPECIES_DIR"

MASS_CONVENTIONS = ("bare", "reduced")


class SpeciesError(ValueError):
    """Bad species input: unreadable file, parse error, or violated invariant."""


@dataclass(frozen=True)
class SpeciesPair:
    """All physical inputs for one dimer + excited-atom pair (atomic units).

    ``mass_convention`` selects the mass entering the centrifugal-barrier
    estimate: "bare" uses the atomic mass (whose prefactor already accounts
    for the atom-dimer reduced mass of a homonuclear trimer), "reduced" uses
    two thirds of it.
    """

    name: str
    q2_0: float                      # dimer quadrupole moment, e*bohr^2
    r2_atom: float                   # <r_nl^2> of the excited electron, bohr^2
    ell: int                         # atomic orbital momentum
    b0_cm1: float                    # rotational constant, cm^-1
    r_e: float                       # equilibrium bond length, bohr
    atom_mass_amu: float             # atomic mass, unified amu
    q_xx: float | None = None        # dimer quadrupole tensor, a.u. (optional)
    q_zz: float | None = None
    r0_squared: float | None = None  # direct <r_0^2> override, bohr^2 (optional)
    mass_convention: str = "bare"

    def __post_init__(self) -> None:
        for field_name in ("q2_0", "r2_atom", "b0_cm1", "r_e", "atom_mass_amu"):
            value = getattr(self, field_name)
            if not value > 0:
                raise SpeciesError(f"{field_name} must be positive, got {value}")
        if self.ell < 1:
            raise SpeciesError(f"ell must be at least 1, got {self.ell}")
        has_tensor = self.q_xx is not None and self.q_zz is not None
        if not has_tensor and self.r0_squared is None:
            raise SpeciesError(
                "need either both Q_XX and Q_ZZ or a direct r0_squared value"
            )
        if self.mass_convention not in MASS_CONVENTIONS:
            raise SpeciesError(
                f"mass_convention must be one of {MASS_CONVENTIONS}, "
                f"got {self.mass_convention!r}"
            )

    @property
    def atom_mass(self) -> float:
        """Atomic mass in electron masses."""
        return units.amu_to_electron_masses(self.atom_mass_amu)


def builtin_cs() -> SpeciesPair:
    """Cs2(X, v=0) + Cs(6P): the reference cesium parameter set."""
    return SpeciesPair(
        name="Cs2+Cs(6P)",
        q2_0=18.56,
        r2_atom=62.65,
        ell=1,
        b0_cm1=1.17314e-2,
        r_e=8.7,
        atom_mass_amu=132.905451933,
        q_xx=-69.0,
        q_zz=-41.0,
    )


def builtin_li() -> SpeciesPair:
    """6Li2(X, v=0) + Li(2P), with a rigid-rotor rotational constant."""
    atom_mass_amu = 6.0151228874
    r_e = 5.05
    reduced_mass = units.amu_to_electron_masses(atom_mass_amu) / 2.0
    b0_hartree = 1.0 / (2.0 * reduced_mass * r_e**2)
    return SpeciesPair(
        name="Li2+Li(2P)",
        q2_0=10.7,
        r2_atom=32.5,
        ell=1,
        b0_cm1=units.hartree_to_invcm(b0_hartree),
        r_e=r_e,
        atom_mass_amu=atom_mass_amu,
        r0_squared=53.3,
    )


_BUILTINS = {"cs": builtin_cs, "li": builtin_li}


def builtin_names() -> tuple[str, ...]:
    return tuple(sorted(_BUILTINS))


# file key -> (dataclass field, converter)
_KEY_MAP = {
    "name": ("name", str),
    "q2_0": ("q2_0", float),
    "r2_atom": ("r2_atom", float),
    "ell": ("ell", int),
    "B0_cm1": ("b0_cm1", float),
    "r_e": ("r_e", float),
    "atom_mass_amu": ("atom_mass_amu", float),
    "Q_XX": ("q_xx", float),
    "Q_ZZ": ("q_zz", float),
    "r0_squared": ("r0_squared", float),
    "mass_convention": ("mass_convention", str),
}
_REQUIRED_KEYS = ("name", "q2_0", "r2_atom", "ell", "B0_cm1", "r_e", "atom_mass_amu")


def loads(text: str, source: str = "<string>") -> SpeciesPair:
    """Parse the key=value species format; errors carry the offending line number."""
    seen: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SpeciesError(f"{source}:{lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.split("#", 1)[0].strip()
        if key not in _KEY_MAP:
            raise SpeciesError(f"{source}:{lineno}: unknown key {key!r}")
        if key in seen:
            raise SpeciesError(f"{source}:{lineno}: duplicate key {key!r}")
        field_name, convert = _KEY_MAP[key]
        try:
            seen[key] = convert(value)
        except ValueError as exc:
            raise SpeciesError(f"{source}:{lineno}: bad value for {key}: {value!r}") from exc
    missing = [key for key in _REQUIRED_KEYS if key not in seen]
    if missing:
        raise SpeciesError(f"{source}: missing required keys: {', '.join(missing)}")
    kwargs = {_KEY_MAP[key][0]: value for key, value in seen.items()}
    return SpeciesPair(**kwargs)  # type: ignore[arg-type]


def load(path: str | Path) -> SpeciesPair:
    """Load and validate a species file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpeciesError(f"cannot read species file {path}: {exc}") from exc
    return loads(text, source=str(path))


def serialize(species: SpeciesPair) -> str:
    """Render a species as the key=value format; load(serialize(s)) == s."""
    field_to_key = {field: key for key, (field, _) in _KEY_MAP.items()}
    lines = []
    for field in fields(SpeciesPair):
        value = getattr(species, field.name)
        if value is None:
            continue
        lines.append(f"{field_to_key[field.name]} = {value}")
    return "\n".join(lines) + "\n"


def resolve(name_or_path: str, search_dir: str | None = None) -> SpeciesPair:
    """Turn a --species argument into a SpeciesPair.

    Built-in names ("cs", "li", case-insensitive) win; otherwise the value is
    a file path, tried verbatim and then inside ``search_dir`` (defaulting to
    the QUADLR_SPECIES_DIR environment variable) with and without a
    ``.species`` suffix.
    """
    key = name_or_path.lower()
    if key in _BUILTINS:
        return _BUILTINS[key]()
    candidate = Path(name_or_path)
    if candidate.exists():
        return load(candidate)
    if search_dir is None:
        search_dir = os.environ.get(SPECIES_DIR_ENV)
    if search_dir:
        for trial in (Path(search_dir) / name_or_path, Path(search_dir) / f"{name_or_path}.species"):
            if trial.exists():
                return load(trial)
    raise SpeciesError(
        f"unknown species {name_or_path!r}: not a built-in ({', '.join(builtin_names())}) "
        f"and no such file"
    )
