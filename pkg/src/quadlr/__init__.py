"""Long-range quadrupole-quadrupole interaction between a rotating dimer and a P-state atom.

The package computes anisotropic C5 coefficients from exact angular-momentum
algebra, labels them with molecular-style symmetries, and derives the
photoassociation landscape: potential curves, analytic curve crossings, the
Le Roy radius, the validity radius, centrifugal barriers and partial-wave
counts.
"""

from .interaction import (
    BasisState,
    BlockedMatrix,
    BlockStructureError,
    ReducedMatrix,
    atom_quadrupole_element,
    block_decompose,
    build_qq_matrix,
    dimer_quadrupole_element,
    interaction_element,
    multipole_prefactor,
)
from .landscape import (
    Crossing,
    PotentialCurve,
    barrier_height,
    crossings,
    curve,
    le_roy_radius,
    max_partial_wave,
    r0_squared,
    r_m_estimate,
)
from .species import SpeciesError, SpeciesPair, builtin_cs, builtin_li, load, serialize
from .spectra import C5Entry, ClassificationError, EigenResult, c5_spectrum, classify, symmetric_eigen
from .wigner import (
    AngularMomentum,
    ExactRadical,
    clebsch_gordan,
    reflection_phase,
    triple_d_integral,
    wigner_small_d,
)

__version__ = "0.1.0"

__all__ = [
    "AngularMomentum",
    "BasisState",
    "BlockedMatrix",
    "BlockStructureError",
    "C5Entry",
    "ClassificationError",
    "Crossing",
    "EigenResult",
    "ExactRadical",
    "PotentialCurve",
    "ReducedMatrix",
    "SpeciesError",
    "SpeciesPair",
    "atom_quadrupole_element",
    "barrier_height",
    "block_decompose",
    "build_qq_matrix",
    "builtin_cs",
    "builtin_li",
    "c5_spectrum",
    "classify",
    "clebsch_gordan",
    "crossings",
    "curve",
    "dimer_quadrupole_element",
    "interaction_element",
    "le_roy_radius",
    "load",
    "max_partial_wave",
    "multipole_prefactor",
    "r0_squared",
    "r_m_estimate",
    "reflection_phase",
    "serialize",
    "symmetric_eigen",
    "triple_d_integral",
    "wigner_small_d",
    "__version__",
]
