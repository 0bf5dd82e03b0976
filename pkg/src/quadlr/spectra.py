"""Diagonalization of the blocked interaction matrix and symmetry labelling.

Each conserved-projection block is diagonalized with a cyclic Jacobi sweep
(the dimensions never exceed a few tens, where Jacobi is simple and fully
accurate).  Eigenstates are labelled in the diatomic style by |m_J|:
Sigma, Pi, Delta, ... with a +/- reflection character for the axial states.
1x1 blocks bypass floating point entirely and carry their exact rational
value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import species as species_mod
from .interaction import BasisState, Block, block_decompose, build_qq_matrix, interaction_element
from .wigner import reflection_phase

__all__ = [
    "C5Entry",
    "EigenResult",
    "ClassificationError",
    "GREEK_LABELS",
    "label_for",
    "symmetric_eigen",
    "reflection_matrix",
    "classify",
    "c5_spectrum",
]

GREEK_LABELS = ("Σ", "Π", "Δ", "Φ", "Γ")
# After Gamma the diatomic convention continues with Latin letters, skipping J.
_LATIN_TAIL = "HIKLMNOPQRSTUVWXYZ"

CLASSIFY_TOLERANCE = 1e-8
DEGENERACY_TOLERANCE = 1e-8
JACOBI_TOLERANCE = 1e-13
JACOBI_MAX_SWEEPS = 100


class ClassificationError(RuntimeError):
    """An eigenvector is not a reflection eigenstate after degeneracy re-mixing."""


def label_for(abs_m_total: int) -> str:
    """Diatomic-style symmetry letter for |m_J| (without the Sigma +/- sign)."""
    if abs_m_total < 0:
        raise ValueError("|m_J| must be non-negative")
    if abs_m_total < len(GREEK_LABELS):
        return GREEK_LABELS[abs_m_total]
    tail = abs_m_total - len(GREEK_LABELS)
    if tail < len(_LATIN_TAIL):
        return _LATIN_TAIL[tail]
    return f"|mJ|={abs_m_total}"


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalues sorted ascending with the matching orthonormal eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # column k pairs with eigenvalues[k]


def symmetric_eigen(matrix: np.ndarray, tol: float = JACOBI_TOLERANCE) -> EigenResult:
    """Full eigendecomposition of a dense symmetric matrix by cyclic Jacobi.

    Sweeps rotate every off-diagonal pair until the off-diagonal Frobenius
    norm drops below tol * ||A||.  Raises ValueError for non-symmetric input
    and ArithmeticError if the sweep cap is hit (pathological input).
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    if float(np.abs(a - a.T).max(initial=0.0)) > tol * max(norm, 1e-300):
        raise ValueError("matrix is not symmetric within tolerance")
    a = (a + a.T) / 2.0
    v = np.eye(n)

    def off_norm(mat: np.ndarray) -> float:
        off = mat - np.diag(np.diag(mat))
        return float(np.linalg.norm(off))

    threshold = tol * norm
    for _ in range(JACOBI_MAX_SWEEPS):
        if off_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e153:  # theta**2 would overflow; use the limit
                    t = 1.0 / (2.0 * theta)
                elif theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = 1.0 / (theta - np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)

                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = a[q, p] = 0.0
                mask = np.ones(n, dtype=bool)
                mask[[p, q]] = False
                aip = a[mask, p].copy()
                aiq = a[mask, q].copy()
                a[mask, p] = aip - s * (aiq + tau * aip)
                a[p, mask] = a[mask, p]
                a[mask, q] = aiq + s * (aip - tau * aiq)
                a[q, mask] = a[mask, q]

                vip = v[:, p].copy()
                viq = v[:, q].copy()
                v[:, p] = vip - s * (viq + tau * vip)
                v[:, q] = viq + s * (vip - tau * viq)
    else:
        raise ArithmeticError(
            f"Jacobi failed to converge in {JACOBI_MAX_SWEEPS} sweeps "
            f"(off-norm {off_norm(a):.3e}, target {threshold:.3e})"
        )

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = v[:, order]
    values.setflags(write=False)
    vectors.setflags(write=False)
    return EigenResult(eigenvalues=values, eigenvectors=vectors)


def reflection_matrix(basis: tuple[BasisState, ...]) -> np.ndarray:
    """Matrix of the reflection through the trimer plane on a basis slice.

    The reflection sends |m_j, lambda> to (-1)**(m_j+lambda) |-m_j, -lambda>;
    it maps a conserved-projection block onto the block of opposite sign, so
    it is an involution exactly on m_J = 0 blocks.
    """
    index = {state: k for k, state in enumerate(basis)}
    n = len(basis)
    sigma = np.zeros((n, n))
    for col, state in enumerate(basis):
        mirrored = state.reflected()
        if mirrored not in index:
            raise ValueError(f"basis is not closed under reflection: {state}")
        phase = reflection_phase(abs(state.m_j), state.m_j) * reflection_phase(
            abs(state.lam), state.lam
        )
        sigma[index[mirrored], col] = phase
    return sigma


def classify(
    eigvec: np.ndarray,
    m_total: int,
    block_basis: tuple[BasisState, ...],
    tol: float = CLASSIFY_TOLERANCE,
) -> str:
    """Symmetry label of an eigenvector of one conserved-projection block.

    |m_J| > 0 states take the plain Greek/Latin letter.  Axial (m_J = 0)
    states must be reflection eigenstates: the expectation value of the
    reflection fixes the +/- superscript.  Vectors inside a degenerate
    eigenspace must be re-mixed into reflection eigenstates beforehand.
    """
    base = label_for(abs(m_total))
    if m_total != 0:
        return base
    vec = np.asarray(eigvec, dtype=float)
    character = float(vec @ reflection_matrix(block_basis) @ vec)
    if abs(character - 1.0) <= tol:
        return base + "+"
    if abs(character + 1.0) <= tol:
        return base + "-"
    raise ClassificationError(
        f"reflection expectation {character} is not +/-1 within {tol}; "
        "eigenvector was not reflection-adapted"
    )


def _reflection_adapted(eig: EigenResult, basis: tuple[BasisState, ...]) -> np.ndarray:
    """Re-mix degenerate eigenspaces so every column is a reflection eigenvector."""
    values = eig.eigenvalues
    vectors = eig.eigenvectors.copy()
    sigma = reflection_matrix(basis)
    tol = DEGENERACY_TOLERANCE * max(1.0, float(np.abs(values).max(initial=0.0)))
    n = len(values)
    start = 0
    while start < n:
        stop = start
        while stop + 1 < n and values[stop + 1] - values[start] <= tol:
            stop += 1
        if stop > start:
            group = slice(start, stop + 1)
            sub = vectors[:, group]
            overlap = sub.T @ sigma @ sub
            rotation = symmetric_eigen(overlap).eigenvectors
            vectors[:, group] = sub @ rotation
        start = stop + 1
    return vectors


@dataclass(frozen=True)
class C5Entry:
    """One eigenpair of the interaction matrix for a given dimer level j.

    ``c5_reduced`` is in units of q2_0 * <r^2>; ``c5_au`` is the physical
    coefficient in atomic units.  ``c5_exact`` carries the exact rational
    value when the eigenpair comes from a 1x1 block.  ``eigvec`` spans
    ``basis`` (the block's basis slice).
    """

    j: int
    m_total: int
    label: str
    c5_reduced: float
    c5_au: float
    eigvec: tuple[float, ...]
    basis: tuple[BasisState, ...]
    c5_exact: Fraction | None = None

    @property
    def abs_m_total(self) -> int:
        return abs(self.m_total)

    @property
    def reflection(self) -> int | None:
        if self.label.endswith("+"):
            return 1
        if self.label.endswith("-"):
            return -1
        return None


def _block_entries(j: int, ell: int, block: Block, scale: float) -> list[C5Entry]:
    if block.dimension == 1:
        exact = interaction_element(j, ell, block.basis[0], block.basis[0])
        value = float(exact)
        exact_fraction = exact.as_fraction() if exact.is_rational else None
        vectors = np.array([[1.0]])
        values = np.array([value])
    else:
        eig = symmetric_eigen(block.values)
        values = eig.eigenvalues
        vectors = eig.eigenvectors
        exact_fraction = None
        if block.m_total == 0:
            vectors = _reflection_adapted(eig, block.basis)
    entries = []
    for k in range(block.dimension):
        vec = vectors[:, k]
        entries.append(
            C5Entry(
                j=j,
                m_total=block.m_total,
                label=classify(vec, block.m_total, block.basis),
                c5_reduced=float(values[k]),
                c5_au=float(values[k]) * scale,
                eigvec=tuple(float(x) for x in vec),
                basis=block.basis,
                c5_exact=exact_fraction if block.dimension == 1 else None,
            )
        )
    return entries


def c5_spectrum(j: int, species: "species_mod.SpeciesPair") -> list[C5Entry]:
    """All (2j+1)(2 ell+1) anisotropic C5 entries for dimer level j.

    Entries are ordered by ascending m_J and, within a block, by ascending
    coefficient; this ordering is stable and is what the table output uses.
    """
    ell = species.ell
    blocked = block_decompose(build_qq_matrix(j, ell))
    scale = species.q2_0 * species.r2_atom
    entries: list[C5Entry] = []
    for m_total in sorted(blocked.blocks):
        entries.extend(_block_entries(j, ell, blocked.blocks[m_total], scale))
    return entries
