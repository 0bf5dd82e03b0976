"""Quadrupole-quadrupole interaction matrix in the |m_j, lambda> product basis.

The matrix element between product states couples the dimer rotational
quadrupole to the atomic orbital quadrupole.  Every individual element is a
single product of Clebsch-Gordan factors (the transferred projection is fixed
by the in/out states), so elements are carried exactly as radicals; the dense
matrix stores their float values.  Entries vanish identically unless
``m_j + lambda`` is conserved, which makes the matrix block diagonal in that
total projection.

Entries are dimensionless "reduced" values: multiply by the product of the
dimer quadrupole moment and the atomic mean squared radius, and divide by
R**5, to obtain energies.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .wigner import ExactRadical, clebsch_gordan

__all__ = [
    "BasisState",
    "ReducedMatrix",
    "Block",
    "BlockedMatrix",
    "BlockStructureError",
    "multipole_prefactor",
    "dimer_quadrupole_element",
    "atom_quadrupole_element",
    "interaction_element",
    "product_basis",
    "build_qq_matrix",
    "block_decompose",
]

OFF_BLOCK_TOLERANCE = 1e-14


class BlockStructureError(ValueError):
    """A matrix entry violates conservation of the total axial projection."""


@dataclass(frozen=True, order=True)
class BasisState:
    """Product state |m_j, lambda>: dimer and atom projections on the trimer axis."""

    m_j: int
    lam: int

    @property
    def m_total(self) -> int:
        return self.m_j + self.lam

    def reflected(self) -> "BasisState":
        return BasisState(-self.m_j, -self.lam)


def multipole_prefactor(l_a: int, l_b: int, m: int) -> Fraction:
    """Exact geometric factor multiplying Q_{l_a}^{m} Q_{l_b}^{-m} in the expansion.

    f = (-1)**l_b (l_a + l_b)! / sqrt((l_a+m)!(l_a-m)!(l_b+m)!(l_b-m)!).
    For the even-rank combinations used here the square root is an integer and
    the result is rational; combinations with an irrational f are refused.
    For the quadrupole pair this reduces to 24/((2+m)!(2-m)!).
    """
    l_a, l_b, m = operator.index(l_a), operator.index(l_b), operator.index(m)
    if l_a < 0 or l_b < 0:
        raise ValueError("multipole ranks must be non-negative")
    if abs(m) > min(l_a, l_b):
        raise ValueError(f"|m| = {abs(m)} exceeds min(l_a, l_b) = {min(l_a, l_b)}")
    fact = math.factorial
    sign = -1 if l_b % 2 else 1
    square = Fraction(
        fact(l_a + l_b) ** 2,
        fact(l_a + m) * fact(l_a - m) * fact(l_b + m) * fact(l_b - m),
    )
    value = ExactRadical.from_signed_radicand(sign, square)
    if not value.is_rational:
        raise ValueError(f"prefactor for ranks ({l_a}, {l_b}, {m}) is irrational: {value}")
    return value.as_fraction()


def dimer_quadrupole_element(j: int, mj_out: int, q: int, mj_in: int) -> ExactRadical:
    """<j mj_out| Q_2^q |j mj_in> in units of the body-frame quadrupole moment.

    Equals C(2 0, j 0 -> j 0) * C(2 q, j mj_in -> j mj_out); zero unless
    mj_out = mj_in + q.
    """
    return clebsch_gordan(2, 0, j, 0, j, 0) * clebsch_gordan(2, q, j, mj_in, j, mj_out)


def atom_quadrupole_element(ell: int, lam_out: int, q: int, lam_in: int) -> ExactRadical:
    """<ell lam_out| Q_2^q |ell lam_in> in units of the mean squared electron radius.

    The valence electron carries charge -1, so the sign is opposite to the
    dimer analogue: -C(2 0, ell 0 -> ell 0) * C(2 q, ell lam_in -> ell lam_out).
    """
    return -(clebsch_gordan(2, 0, ell, 0, ell, 0) * clebsch_gordan(2, q, ell, lam_in, ell, lam_out))


def interaction_element(j: int, ell: int, out: BasisState, inp: BasisState) -> ExactRadical:
    """Exact reduced matrix element <out| V_qq |inp> for given (j, ell).

    The projection transferred to the dimer is fixed to q = mj_out - mj_in,
    and the atom must absorb -q, so at most one term of the multipole sum
    survives; the element is therefore exactly representable.
    """
    q = out.m_j - inp.m_j
    if abs(q) > 2 or out.lam != inp.lam - q:
        return ExactRadical.zero()
    dimer = dimer_quadrupole_element(j, out.m_j, q, inp.m_j)
    atom = atom_quadrupole_element(ell, out.lam, -q, inp.lam)
    return multipole_prefactor(2, 2, q) * dimer * atom


def product_basis(j: int, ell: int) -> tuple[BasisState, ...]:
    """All |m_j, lambda> states, lexicographically ascending in (m_j, lambda)."""
    return tuple(
        BasisState(m_j, lam)
        for m_j in range(-j, j + 1)
        for lam in range(-ell, ell + 1)
    )


@dataclass(frozen=True)
class ReducedMatrix:
    """Dense symmetric interaction matrix in reduced units over the product basis."""

    j: int
    ell: int
    basis: tuple[BasisState, ...]
    values: np.ndarray

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def entry_exact(self, row: int, col: int) -> ExactRadical:
        """Recompute a single entry in exact arithmetic."""
        return interaction_element(self.j, self.ell, self.basis[row], self.basis[col])


@dataclass(frozen=True)
class Block:
    """One conserved-projection block: its basis slice and dense sub-matrix."""

    m_total: int
    basis: tuple[BasisState, ...]
    values: np.ndarray

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class BlockedMatrix:
    """The interaction matrix split into blocks keyed by the total projection."""

    j: int
    ell: int
    blocks: dict[int, Block]

    def total_dimension(self) -> int:
        return sum(block.dimension for block in self.blocks.values())


def build_qq_matrix(j: int, ell: int) -> ReducedMatrix:
    """Assemble the reduced quadrupole-quadrupole matrix for (j, ell).

    j = 0 or ell = 0 gives the zero matrix: a state without angular momentum
    has no quadrupole moment.
    """
    j, ell = operator.index(j), operator.index(ell)
    if j < 0 or ell < 0:
        raise ValueError(f"quantum numbers must be non-negative, got j={j}, ell={ell}")
    basis = product_basis(j, ell)
    n = len(basis)
    values = np.zeros((n, n))
    for a, out in enumerate(basis):
        for b, inp in enumerate(basis):
            if out.m_total == inp.m_total:
                values[a, b] = float(interaction_element(j, ell, out, inp))
    values.setflags(write=False)
    return ReducedMatrix(j=j, ell=ell, basis=basis, values=values)


def block_decompose(matrix: ReducedMatrix) -> BlockedMatrix:
    """Split the matrix into its conserved-m_total blocks.

    Raises BlockStructureError if any entry between different blocks exceeds
    the structural tolerance; that would signal a bug upstream, since such
    entries are zero by construction.
    """
    span = matrix.j + matrix.ell
    indices: dict[int, list[int]] = {m: [] for m in range(-span, span + 1)}
    for i, state in enumerate(matrix.basis):
        indices[state.m_total].append(i)

    for a, out in enumerate(matrix.basis):
        for b, inp in enumerate(matrix.basis):
            if out.m_total != inp.m_total and abs(matrix.values[a, b]) > OFF_BLOCK_TOLERANCE:
                raise BlockStructureError(
                    f"entry {out} -> {inp} = {matrix.values[a, b]} breaks the "
                    f"m_total selection rule"
                )

    blocks: dict[int, Block] = {}
    for m_total in range(-span, span + 1):
        idx = indices[m_total]
        if not idx:
            continue
        sub = matrix.values[np.ix_(idx, idx)].copy()
        sub.setflags(write=False)
        blocks[m_total] = Block(
            m_total=m_total,
            basis=tuple(matrix.basis[i] for i in idx),
            values=sub,
        )
    return BlockedMatrix(j=matrix.j, ell=matrix.ell, blocks=blocks)
