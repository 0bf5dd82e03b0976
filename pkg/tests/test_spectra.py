import math
from fractions import Fraction

import numpy as np
import pytest

from helpers import TABLE_HIGHER_J_AU, TABLE_J1_ROWS, dedup_plus_minus
from quadlr.interaction import BasisState, block_decompose, build_qq_matrix
from quadlr.species import builtin_cs
from quadlr.spectra import (
    ClassificationError,
    c5_spectrum,
    classify,
    label_for,
    reflection_matrix,
    symmetric_eigen,
)


class TestSymmetricEigen:
    def test_identity(self):
        result = symmetric_eigen(np.eye(3))
        assert np.allclose(result.eigenvalues, [1.0, 1.0, 1.0])
        assert np.allclose(result.eigenvectors @ result.eigenvectors.T, np.eye(3))

    def test_swap_matrix(self):
        result = symmetric_eigen(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.allclose(result.eigenvalues, [-1.0, 1.0])

    def test_zero_matrix(self):
        result = symmetric_eigen(np.zeros((4, 4)))
        assert np.array_equal(result.eigenvalues, np.zeros(4))

    def test_rejects_non_symmetric(self):
        with pytest.raises(ValueError):
            symmetric_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(ValueError):
            symmetric_eigen(np.zeros((2, 3)))

    @pytest.mark.parametrize("n", [2, 3, 5, 8, 12])
    def test_against_numpy(self, n):
        rng = np.random.default_rng(n)
        a = rng.standard_normal((n, n))
        a = (a + a.T) / 2.0
        mine = symmetric_eigen(a)
        reference = np.linalg.eigvalsh(a)
        scale = np.linalg.norm(a)
        assert np.abs(mine.eigenvalues - reference).max() < 1e-12 * scale
        # eigenpair residuals and orthonormality
        residual = a @ mine.eigenvectors - mine.eigenvectors * mine.eigenvalues
        assert np.abs(residual).max() < 1e-10 * scale
        gram = mine.eigenvectors.T @ mine.eigenvectors
        assert np.abs(gram - np.eye(n)).max() < 1e-10

    def test_axial_block_of_j1(self):
        block = block_decompose(build_qq_matrix(1, 1)).blocks[0]
        result = symmetric_eigen(block.values)
        assert np.allclose(result.eigenvalues, [-36 / 25, 0.0, 0.0], atol=1e-14)


class TestClassify:
    BASIS = (BasisState(-1, 1), BasisState(0, 0), BasisState(1, -1))

    def test_symmetric_axial_vector(self):
        vec = np.array([1.0, 2.0, 1.0]) / math.sqrt(6.0)
        assert classify(vec, 0, self.BASIS) == "Σ+"

    def test_antisymmetric_axial_vector(self):
        vec = np.array([1.0, 0.0, -1.0]) / math.sqrt(2.0)
        assert classify(vec, 0, self.BASIS) == "Σ-"

    def test_nonaxial_labels(self):
        assert classify(np.array([1.0]), 2, (BasisState(1, 1),)) == "Δ"
        assert classify(np.array([1.0]), -2, (BasisState(-1, -1),)) == "Δ"
        assert classify(np.array([1.0, 0.0]), -1, (BasisState(-1, 0), BasisState(0, -1))) == "Π"

    def test_unadapted_axial_vector_raises(self):
        vec = np.array([1.0, 0.0, 0.0])  # mixes both reflection characters
        with pytest.raises(ClassificationError):
            classify(vec, 0, self.BASIS)

    def test_label_sequence(self):
        assert [label_for(k) for k in range(8)] == ["Σ", "Π", "Δ", "Φ", "Γ", "H", "I", "K"]

    def test_reflection_matrix_is_involution(self):
        sigma = reflection_matrix(self.BASIS)
        assert np.array_equal(sigma @ sigma, np.eye(3))


class TestSpectrumJ1:
    def test_reduced_multiset(self):
        entries = c5_spectrum(1, builtin_cs())
        assert len(entries) == 9
        got = sorted(e.c5_reduced for e in entries)
        expected = sorted(float(row[1]) for row in TABLE_J1_ROWS)
        assert np.allclose(got, expected, atol=1e-12)

    def test_one_dimensional_blocks_exact(self):
        entries = c5_spectrum(1, builtin_cs())
        exact = sorted(e.c5_exact for e in entries if e.c5_exact is not None)
        assert exact == [Fraction(-6, 25), Fraction(-6, 25)]

    def test_rounded_physical_values(self):
        entries = c5_spectrum(1, builtin_cs())
        got = sorted(round(e.c5_au) for e in entries)
        assert got == sorted(row[2] for row in TABLE_J1_ROWS)

    def test_most_attractive_eigenvector(self):
        entries = c5_spectrum(1, builtin_cs())
        deepest = min(entries, key=lambda e: e.c5_reduced)
        assert deepest.m_total == 0 and deepest.label == "Σ+"
        assert deepest.basis == (BasisState(-1, 1), BasisState(0, 0), BasisState(1, -1))
        vec = np.array(deepest.eigvec)
        expected = np.array([1.0, 2.0, 1.0]) / math.sqrt(6.0)
        assert min(np.abs(vec - expected).max(), np.abs(vec + expected).max()) < 1e-10

    def test_axial_zero_subspace_projector(self):
        # The two zero modes of the axial block span the orthogonal complement
        # of the attractive eigenvector; compare projectors, not vectors.
        entries = [e for e in c5_spectrum(1, builtin_cs()) if e.m_total == 0]
        zeros = [np.array(e.eigvec) for e in entries if abs(e.c5_reduced) < 1e-10]
        assert len(zeros) == 2
        projector = sum(np.outer(v, v) for v in zeros)
        deep = np.array([1.0, 2.0, 1.0]) / math.sqrt(6.0)
        assert np.allclose(projector, np.eye(3) - np.outer(deep, deep), atol=1e-10)

    def test_axial_zero_labels(self):
        entries = [e for e in c5_spectrum(1, builtin_cs()) if e.m_total == 0]
        labels = sorted(e.label for e in entries if abs(e.c5_reduced) < 1e-10)
        assert labels == ["Σ+", "Σ-"]

    def test_eigvec_unit_norm(self):
        for e in c5_spectrum(1, builtin_cs()):
            assert abs(np.linalg.norm(e.eigvec) - 1.0) < 1e-12


class TestSpectrumHigherJ:
    def test_published_values_and_labels(self):
        species = builtin_cs()
        got: dict[str, dict[int, list[float]]] = {}
        for j in (2, 3, 4):
            for entry in dedup_plus_minus(c5_spectrum(j, species)):
                got.setdefault(entry.label, {}).setdefault(j, []).append(entry.c5_au)
        assert sorted(got) == sorted(TABLE_HIGHER_J_AU)
        for label, per_j in TABLE_HIGHER_J_AU.items():
            assert sorted(got[label]) == sorted(per_j), label
            for j, published in per_j.items():
                mine = sorted(got[label][j])
                assert len(mine) == len(published)
                for value, reference in zip(mine, sorted(published)):
                    assert abs(value - reference) <= 1.0, (label, j)

    def test_entry_count(self):
        species = builtin_cs()
        for j in (2, 3, 4):
            assert len(c5_spectrum(j, species)) == 3 * (2 * j + 1)


class TestSpectrumInvariants:
    @pytest.mark.parametrize("j", range(5))
    def test_blocks_reproduce_full_spectrum(self, j):
        matrix = build_qq_matrix(j, 1)
        full = symmetric_eigen(matrix.values).eigenvalues
        entries = c5_spectrum(j, builtin_cs())
        union = np.sort([e.c5_reduced for e in entries])
        assert np.abs(union - full).max() < 1e-10

    @pytest.mark.parametrize("j", range(1, 5))
    def test_mirror_blocks_degenerate(self, j):
        blocked = block_decompose(build_qq_matrix(j, 1))
        for m_total in range(1, j + 2):
            plus = symmetric_eigen(blocked.blocks[m_total].values).eigenvalues
            minus = symmetric_eigen(blocked.blocks[-m_total].values).eigenvalues
            assert np.abs(plus - minus).max() < 1e-12

    @pytest.mark.parametrize("j", range(11))
    def test_trace_preserved(self, j):
        entries = c5_spectrum(j, builtin_cs())
        assert abs(sum(e.c5_reduced for e in entries)) < 1e-10

    def test_j0_spectrum_is_flat(self):
        entries = c5_spectrum(0, builtin_cs())
        assert [e.c5_au for e in entries] == [0.0, 0.0, 0.0]

    def test_deterministic_order(self):
        first = c5_spectrum(3, builtin_cs())
        second = c5_spectrum(3, builtin_cs())
        assert [(e.m_total, e.c5_reduced, e.label) for e in first] == [
            (e.m_total, e.c5_reduced, e.label) for e in second
        ]
        assert [e.m_total for e in first] == sorted(e.m_total for e in first)
