"""Unit constants and conversions (atomic units everywhere internally)."""

HARTREE_IN_INVCM = 219474.63137
HARTREE_IN_KELVIN = 315775.02
ELECTRON_MASSES_PER_AMU = 1822.888486

# Beyond ~500 bohr retardation matters; the model is not used past this point.
DEFAULT_R_MAX = 500.0
DEFAULT_GRID_POINTS = 200


def invcm_to_hartree(value: float) -> float:
    return value / HARTREE_IN_INVCM


def hartree_to_invcm(value: float) -> float:
    return value * HARTREE_IN_INVCM


def hartree_to_kelvin(value: float) -> float:
    return value * HARTREE_IN_KELVIN


def kelvin_to_hartree(value: float) -> float:
    return value / HARTREE_IN_KELVIN


def hartree_to_microkelvin(value: float) -> float:
    return value * HARTREE_IN_KELVIN * 1e6


def microkelvin_to_hartree(value: float) -> float:
    return value / (HARTREE_IN_KELVIN * 1e6)


def amu_to_electron_masses(value: float) -> float:
    return value * ELECTRON_MASSES_PER_AMU
