"""Long-range landscape quantities derived from the C5 spectra.

Potential curves are B0*j(j+1) + C5/R**5 in hartree over a radial grid in
bohr.  Curve crossings are solved analytically from the closed form
R = (delta_C5 / delta_asymptote)**(1/5); no root finding is involved.  The
module also provides the Le Roy radius chain, the validity-radius estimate,
centrifugal barrier heights, and the partial-wave count at a temperature.

Curves are refused below the Le Roy radius unless the caller lowers the
floor explicitly, since the multipole picture breaks down there.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import units
from .species import SpeciesPair
from .spectra import C5Entry

__all__ = [
    "PotentialCurve",
    "Crossing",
    "b0_hartree",
    "rotational_asymptote",
    "default_grid",
    "curve",
    "unique_curves",
    "crossings",
    "r0_squared",
    "le_roy_radius",
    "r_m_estimate",
    "barrier_height",
    "max_partial_wave",
]

BARRIER_PREFACTOR = (9.0 / 20.0) * (5.0 / 24.0) ** (2.0 / 3.0)  # ~0.158


@dataclass(frozen=True)
class PotentialCurve:
    """A sampled long-range curve E(R) = asymptote + C5/R**5 for one entry."""

    entry: C5Entry
    asymptote: float        # hartree
    r: np.ndarray           # bohr, strictly increasing
    energy: np.ndarray      # hartree

    @property
    def j(self) -> int:
        return self.entry.j

    @property
    def samples(self) -> tuple[tuple[float, float], ...]:
        return tuple(zip(self.r.tolist(), self.energy.tolist()))


@dataclass(frozen=True)
class Crossing:
    """Analytic intersection of two potential curves."""

    curve_a: str
    curve_b: str
    r_cross: float   # bohr
    e_cross: float   # hartree


def b0_hartree(species: SpeciesPair) -> float:
    return units.invcm_to_hartree(species.b0_cm1)


def rotational_asymptote(species: SpeciesPair, j: int) -> float:
    """Dissociation energy B0*j(j+1) of the j manifold, in hartree."""
    return b0_hartree(species) * j * (j + 1)


def default_grid(
    species: SpeciesPair,
    r_min: float | None = None,
    r_max: float = units.DEFAULT_R_MAX,
    points: int = units.DEFAULT_GRID_POINTS,
) -> np.ndarray:
    """Logarithmic radial grid from the Le Roy radius (by default) to 500 bohr."""
    if r_min is None:
        r_min = le_roy_radius(species)
    if points < 2:
        raise ValueError(f"need at least 2 grid points, got {points}")
    if not 0 < r_min < r_max:
        raise ValueError(f"invalid radial range [{r_min}, {r_max}]")
    return np.geomspace(r_min, r_max, points)


def curve(
    entry: C5Entry,
    species: SpeciesPair,
    r_grid: np.ndarray,
    min_radius: float | None = None,
) -> PotentialCurve:
    """Sample the curve of one C5 entry on a grid of radii (bohr).

    The grid must be non-empty, strictly increasing, and must not reach below
    ``min_radius`` (the Le Roy radius unless overridden).
    """
    grid = np.asarray(r_grid, dtype=float)
    if grid.size == 0:
        raise ValueError("radial grid is empty")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError("radial grid must be strictly increasing")
    floor = le_roy_radius(species) if min_radius is None else min_radius
    if grid[0] < floor:
        raise ValueError(
            f"grid starts at {grid[0]:g} bohr, below the allowed floor {floor:g}"
        )
    asym = rotational_asymptote(species, entry.j)
    energy = asym + entry.c5_au / grid**5
    grid.setflags(write=False)
    energy.setflags(write=False)
    return PotentialCurve(entry=entry, asymptote=asym, r=grid, energy=energy)


def unique_curves(
    entries: list[C5Entry], species: SpeciesPair
) -> list[tuple[str, int, float, float]]:
    """Collapse entries into geometrically distinct curves.

    Entries at +/-m_J (and accidental coincidences) share one curve.  Returns
    (curve id, j, asymptote, c5_au) sorted by (j, c5); the id lists every
    symmetry label that shares the curve.
    """
    grouped: dict[tuple[int, float], tuple[float, set[str]]] = {}
    for entry in entries:
        key = (entry.j, round(entry.c5_reduced, 9))
        c5_au, labels = grouped.setdefault(key, (entry.c5_au, set()))
        labels.add(entry.label)
    result = []
    for (j, _), (c5_au, labels) in sorted(grouped.items()):
        ident = f"j{j} {'/'.join(sorted(labels))} C5={c5_au:.6g}"
        result.append((ident, j, rotational_asymptote(species, j), c5_au))
    return result


def crossings(
    entries: list[C5Entry],
    species: SpeciesPair,
    window: tuple[float, float],
) -> list[Crossing]:
    """All pairwise curve crossings inside a radial window, sorted by radius.

    Two curves cross where asym_a + C5_a/R**5 = asym_b + C5_b/R**5, i.e. at
    R = (dC5/dE)**(1/5) with dC5 = C5_a - C5_b and dE = asym_b - asym_a; a
    crossing exists only when the two differences share a sign.  Curves with
    equal asymptote never cross (equal j), and duplicate curves are collapsed
    first, so the result is grid-independent and symmetric in the pair order.
    """
    r_lo, r_hi = window
    if not 0 < r_lo < r_hi:
        raise ValueError(f"invalid window [{r_lo}, {r_hi}]: need 0 < R_lo < R_hi")
    curves = unique_curves(entries, species)
    found = []
    for (id_a, _, asym_a, c5_a), (id_b, _, asym_b, c5_b) in itertools.combinations(curves, 2):
        d_c5 = c5_a - c5_b
        d_asym = asym_b - asym_a
        if d_asym == 0.0 or d_c5 == 0.0 or (d_c5 / d_asym) <= 0.0:
            continue
        r_cross = (d_c5 / d_asym) ** 0.2
        if r_lo <= r_cross <= r_hi:
            e_cross = asym_a + c5_a / r_cross**5
            found.append(Crossing(curve_a=id_a, curve_b=id_b, r_cross=r_cross, e_cross=e_cross))
    found.sort(key=lambda c: c.r_cross)
    return found


def r0_squared(species: SpeciesPair) -> float:
    """Mean squared valence-electron extent of the dimer, in bohr^2.

    A direct override wins; otherwise the rigid-rotor relation
    r_e**2/2 - Q_ZZ - 2*Q_XX converts the quadrupole-tensor diagonals.
    """
    if species.r0_squared is not None:
        return species.r0_squared
    if species.q_xx is None or species.q_zz is None:
        raise ValueError("species carries neither quadrupole diagonals nor r0_squared")
    return species.r_e**2 / 2.0 - species.q_zz - 2.0 * species.q_xx


def le_roy_radius(species: SpeciesPair) -> float:
    """Minimum radius for the multipole expansion: 2(sqrt<r_A^2> + sqrt<r_B^2>)."""
    return 2.0 * (math.sqrt(r0_squared(species)) + math.sqrt(species.r2_atom))


def r_m_estimate(species: SpeciesPair) -> float:
    """Validity radius below which rotational manifolds start to cross.

    Closed form (18 q2_0 <r^2> / (25 B0))**(1/5): the crossing of the j=0
    asymptote with the most attractive j=1 curve.  It matches the crossing
    computed from the j=0 and j=1 spectra to full precision.
    """
    b0 = b0_hartree(species)
    if b0 <= 0:
        raise ValueError(f"rotational constant must be positive, got {b0}")
    return (18.0 * species.q2_0 * species.r2_atom / (25.0 * b0)) ** 0.2


def _barrier_mass(species: SpeciesPair) -> float:
    """Mass entering the centrifugal barrier estimate, in electron masses.

    With the "bare" convention the barrier formula takes the atomic mass: its
    numeric prefactor was derived for a homonuclear trimer, where the
    atom-dimer reduced mass is two thirds of the atomic mass and the 3/2 has
    been absorbed.  "reduced" plugs in 2m/3 directly, which is the more
    conservative choice when the colliding partners are not one atom plus its
    own dimer.
    """
    mass = species.atom_mass
    return mass if species.mass_convention == "bare" else 2.0 * mass / 3.0


def barrier_height(n_wave: int, species: SpeciesPair) -> float:
    """Centrifugal barrier height (hartree) on the most attractive curve.

    E_N = 0.45 * (5/24)**(2/3) * (N(N+1)/m)**(5/3) * (q2_0 <r^2>)**(-2/3);
    zero for N = 0.
    """
    if n_wave < 0:
        raise ValueError(f"partial wave must be non-negative, got {n_wave}")
    if n_wave == 0:
        return 0.0
    centrifugal = n_wave * (n_wave + 1) / _barrier_mass(species)
    strength = species.q2_0 * species.r2_atom
    return BARRIER_PREFACTOR * centrifugal ** (5.0 / 3.0) * strength ** (-2.0 / 3.0)


def max_partial_wave(temperature_kelvin: float, species: SpeciesPair) -> int:
    """Largest partial wave whose barrier stays below k_B T."""
    if temperature_kelvin <= 0:
        raise ValueError(f"temperature must be positive, got {temperature_kelvin}")
    budget = units.kelvin_to_hartree(temperature_kelvin)
    n_wave = 0
    while barrier_height(n_wave + 1, species) <= budget:
        n_wave += 1
    return n_wave
