import math
from fractions import Fraction

import numpy as np
import pytest

from helpers import cg_product_via_gaunt
from quadlr.interaction import (
    BasisState,
    BlockStructureError,
    ReducedMatrix,
    atom_quadrupole_element,
    block_decompose,
    build_qq_matrix,
    dimer_quadrupole_element,
    interaction_element,
    multipole_prefactor,
    product_basis,
)


class TestMultipolePrefactor:
    @pytest.mark.parametrize(
        "ranks, expected",
        [
            ((2, 2, 0), Fraction(6)),
            ((2, 2, 1), Fraction(4)),
            ((2, 2, 2), Fraction(1)),
            ((1, 1, 0), Fraction(-2)),
        ],
    )
    def test_known_values(self, ranks, expected):
        assert multipole_prefactor(*ranks) == expected

    def test_quadrupole_form(self):
        # For the quadrupole pair the factor is 24/((2+m)!(2-m)!).
        for m in range(-2, 3):
            expected = Fraction(24, math.factorial(2 + m) * math.factorial(2 - m))
            assert multipole_prefactor(2, 2, m) == expected

    def test_projection_domain_error(self):
        with pytest.raises(ValueError):
            multipole_prefactor(2, 1, 2)

    def test_irrational_combination_refused(self):
        with pytest.raises(ValueError, match="irrational"):
            multipole_prefactor(2, 1, 1)


class TestQuadrupoleElements:
    def test_dimer_known_values(self):
        assert dimer_quadrupole_element(1, 0, 0, 0).as_fraction() == Fraction(2, 5)
        assert dimer_quadrupole_element(1, 1, 0, 1).as_fraction() == Fraction(-1, 5)
        assert dimer_quadrupole_element(0, 0, 0, 0).is_zero

    def test_atom_known_values(self):
        assert atom_quadrupole_element(1, 0, 0, 0).as_fraction() == Fraction(-2, 5)
        assert atom_quadrupole_element(1, 1, 0, 1).as_fraction() == Fraction(1, 5)

    def test_atom_opposite_sign_to_dimer(self):
        for ell in (1, 2):
            for lam_in in range(-ell, ell + 1):
                for q in range(-2, 3):
                    lam_out = lam_in + q
                    if abs(lam_out) > ell:
                        continue
                    assert atom_quadrupole_element(ell, lam_out, q, lam_in) == -(
                        dimer_quadrupole_element(ell, lam_out, q, lam_in)
                    )

    def test_projection_selection_rule(self):
        assert dimer_quadrupole_element(2, 1, 0, 0).is_zero
        assert atom_quadrupole_element(1, 1, 2, 1).is_zero

    def test_dimer_against_quadrature_oracle(self):
        for j in range(4):
            for m_in in range(-j, j + 1):
                for q in range(-2, 3):
                    m_out = m_in + q
                    if abs(m_out) > j:
                        continue
                    mine = float(dimer_quadrupole_element(j, m_out, q, m_in))
                    assert math.isclose(
                        mine, cg_product_via_gaunt(j, m_out, q, m_in), abs_tol=1e-12
                    )

    def test_diagonal_is_rational(self):
        # <j m|d^2_00|j m> = (j(j+1) - 3m^2)/((2j-1)(2j+3))
        for j in range(1, 6):
            for m in range(-j, j + 1):
                expected = Fraction(j * (j + 1) - 3 * m * m, (2 * j - 1) * (2 * j + 3))
                assert dimer_quadrupole_element(j, m, 0, m).as_fraction() == expected


class TestBasis:
    def test_lexicographic_order(self):
        basis = product_basis(1, 1)
        assert basis[0] == BasisState(-1, -1)
        assert basis[-1] == BasisState(1, 1)
        assert list(basis) == sorted(basis)
        assert len(basis) == 9

    def test_m_total_derived(self):
        state = BasisState(2, -1)
        assert state.m_total == 1
        assert state.reflected() == BasisState(-2, 1)


class TestBuildMatrix:
    def test_dimensions_and_symmetry(self):
        matrix = build_qq_matrix(1, 1)
        assert matrix.values.shape == (9, 9)
        assert float(np.abs(matrix.values - matrix.values.T).max()) == 0.0

    def test_extreme_block_exact_value(self):
        matrix = build_qq_matrix(1, 1)
        corner = interaction_element(1, 1, BasisState(-1, -1), BasisState(-1, -1))
        assert corner.as_fraction() == Fraction(-6, 25)
        assert matrix.entry_exact(0, 0).as_fraction() == Fraction(-6, 25)

    def test_zero_when_either_momentum_vanishes(self):
        assert float(np.abs(build_qq_matrix(0, 1).values).max()) == 0.0
        assert float(np.abs(build_qq_matrix(3, 0).values).max()) == 0.0

    def test_rejects_negative_quantum_numbers(self):
        with pytest.raises(ValueError):
            build_qq_matrix(-1, 1)

    @pytest.mark.parametrize("j", range(7))
    @pytest.mark.parametrize("ell", (1, 2))
    def test_structural_invariants(self, j, ell):
        matrix = build_qq_matrix(j, ell)
        values = matrix.values
        assert float(np.abs(values - values.T).max(initial=0.0)) <= 1e-14
        assert abs(float(np.trace(values))) <= 1e-12
        for a, out in enumerate(matrix.basis):
            for b, inp in enumerate(matrix.basis):
                if out.m_total != inp.m_total:
                    assert values[a, b] == 0.0

    @pytest.mark.parametrize("j", range(1, 5))
    def test_time_reversal_diagonal_pairing(self, j):
        matrix = build_qq_matrix(j, 1)
        index = {state: k for k, state in enumerate(matrix.basis)}
        for state in matrix.basis:
            mirrored = state.reflected()
            assert matrix.values[index[state], index[state]] == matrix.values[
                index[mirrored], index[mirrored]
            ]

    def test_values_read_only(self):
        matrix = build_qq_matrix(1, 1)
        with pytest.raises(ValueError):
            matrix.values[0, 0] = 1.0


class TestBlockDecompose:
    def test_block_sizes_j1(self):
        blocked = block_decompose(build_qq_matrix(1, 1))
        sizes = {m: block.dimension for m, block in blocked.blocks.items()}
        assert sizes == {-2: 1, -1: 2, 0: 3, 1: 2, 2: 1}

    def test_block_sizes_j2(self):
        blocked = block_decompose(build_qq_matrix(2, 1))
        sizes = {m: block.dimension for m, block in blocked.blocks.items()}
        assert sizes == {-3: 1, -2: 2, -1: 3, 0: 3, 1: 3, 2: 2, 3: 1}

    def test_j0_gives_three_trivial_zero_blocks(self):
        blocked = block_decompose(build_qq_matrix(0, 1))
        assert sorted(blocked.blocks) == [-1, 0, 1]
        for block in blocked.blocks.values():
            assert block.dimension == 1
            assert block.values[0, 0] == 0.0

    def test_reassembly_reproduces_input(self):
        matrix = build_qq_matrix(3, 1)
        blocked = block_decompose(matrix)
        rebuilt = np.zeros_like(matrix.values)
        position = {state: k for k, state in enumerate(matrix.basis)}
        for block in blocked.blocks.values():
            idx = [position[state] for state in block.basis]
            rebuilt[np.ix_(idx, idx)] = block.values
        assert np.array_equal(rebuilt, matrix.values)
        assert blocked.total_dimension() == matrix.dimension

    def test_detects_corrupt_off_block_entry(self):
        matrix = build_qq_matrix(1, 1)
        corrupted = matrix.values.copy()
        corrupted[0, 1] = 1e-9  # states with different total projection
        bad = ReducedMatrix(j=1, ell=1, basis=matrix.basis, values=corrupted)
        with pytest.raises(BlockStructureError):
            block_decompose(bad)
