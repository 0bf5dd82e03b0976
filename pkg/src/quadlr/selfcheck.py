"""Built-in oracle suite behind the `check` subcommand.

Runs the structural cross-checks that gate the whole pipeline: exact
Clebsch-Gordan orthogonality, the quadrature-vs-algebra identity for the
rotational quadrupole elements, exactness of the analytic j=1 spectrum, and
the structural invariants of the interaction matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .interaction import block_decompose, build_qq_matrix
from .species import builtin_cs
from .spectra import c5_spectrum, symmetric_eigen
from .wigner import clebsch_gordan, triple_d_integral

__all__ = ["CheckResult", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_cg_orthogonality(j_max: int = 4) -> CheckResult:
    """Sum over m1 of squared coupling coefficients is exactly 1 (rationals)."""
    cases = 0
    for j1 in range(j_max + 1):
        for j2 in range(j_max + 1):
            for j3 in range(abs(j1 - j2), min(j1 + j2, j_max) + 1):
                for m3 in range(-j3, j3 + 1):
                    total = Fraction(0)
                    for m1 in range(-j1, j1 + 1):
                        m2 = m3 - m1
                        if abs(m2) > j2:
                            continue
                        total += clebsch_gordan(j1, m1, j2, m2, j3, m3).squared()
                    if total != 1:
                        return CheckResult(
                            "cg-orthogonality",
                            False,
                            f"sum = {total} for (j1={j1}, j2={j2}, J={j3}, M={m3})",
                        )
                    cases += 1
    return CheckResult("cg-orthogonality", True, f"{cases} (j1, j2, J, M) cases exact")


def check_triple_d_oracle(j_max: int = 4, tol: float = 1e-10) -> CheckResult:
    """Quadrature of the triple-d product equals the Clebsch-Gordan route."""
    worst = 0.0
    cases = 0
    for j in range(j_max + 1):
        for m_in in range(-j, j + 1):
            for q in range(-2, 3):
                m_out = m_in + q
                if abs(m_out) > j:
                    continue
                algebra = float(
                    clebsch_gordan(2, 0, j, 0, j, 0)
                    * clebsch_gordan(2, q, j, m_in, j, m_out)
                )
                quadrature = triple_d_integral(j, m_out, q, m_in)
                worst = max(worst, abs(quadrature - algebra))
                cases += 1
    passed = worst < tol
    return CheckResult(
        "triple-d-oracle", passed, f"{cases} integrals, worst |delta| = {worst:.2e}"
    )


def check_table_j1_exact() -> CheckResult:
    """The analytic j=1 spectrum: exact 1x1 blocks and the known multiset."""
    species = builtin_cs()
    entries = c5_spectrum(1, species)
    expected_reduced = sorted(
        [-36 / 25, -6 / 25, -6 / 25, 0.0, 0.0, 0.0, 0.0, 24 / 25, 24 / 25]
    )
    got_reduced = sorted(e.c5_reduced for e in entries)
    if any(abs(a - b) > 1e-12 for a, b in zip(got_reduced, expected_reduced)):
        return CheckResult("table-j1-exact", False, f"reduced multiset {got_reduced}")
    one_dim = sorted(e.c5_exact for e in entries if e.c5_exact is not None)
    if one_dim != [Fraction(-6, 25), Fraction(-6, 25)]:
        return CheckResult("table-j1-exact", False, f"1x1 blocks {one_dim}")
    scale = species.q2_0 * species.r2_atom
    rounded = sorted(round(e.c5_reduced * scale) for e in entries)
    if rounded != sorted([-1674, -279, -279, 0, 0, 0, 0, 1116, 1116]):
        return CheckResult("table-j1-exact", False, f"physical multiset {rounded}")
    return CheckResult("table-j1-exact", True, "9 entries match, 1x1 blocks exact")


def check_matrix_structure(j_max: int = 6, ell_max: int = 2) -> CheckResult:
    """Symmetry, block zeros, zero trace, +/-m_J degeneracy, block = full spectrum."""
    for j in range(j_max + 1):
        for ell in range(1, ell_max + 1):
            matrix = build_qq_matrix(j, ell)
            values = matrix.values
            if float(np.abs(values - values.T).max(initial=0.0)) > 1e-14:
                return CheckResult("matrix-structure", False, f"asymmetry at j={j}, ell={ell}")
            if abs(float(np.trace(values))) > 1e-12:
                return CheckResult("matrix-structure", False, f"trace at j={j}, ell={ell}")
            for a, out in enumerate(matrix.basis):
                for b, inp in enumerate(matrix.basis):
                    if out.m_total != inp.m_total and values[a, b] != 0.0:
                        return CheckResult(
                            "matrix-structure", False, f"off-block leak at j={j}, ell={ell}"
                        )
            blocked = block_decompose(matrix)
            block_values = []
            for m_total, block in blocked.blocks.items():
                eig = symmetric_eigen(block.values)
                block_values.extend(eig.eigenvalues.tolist())
                if m_total > 0:
                    mirror = symmetric_eigen(blocked.blocks[-m_total].values)
                    gap = np.abs(eig.eigenvalues - mirror.eigenvalues).max(initial=0.0)
                    if gap > 1e-12:
                        return CheckResult(
                            "matrix-structure",
                            False,
                            f"+/-m_J spectra differ by {gap:.2e} at j={j}, ell={ell}",
                        )
            full = symmetric_eigen(values).eigenvalues
            gap = np.abs(np.sort(np.array(block_values)) - full).max(initial=0.0)
            if gap > 1e-10:
                return CheckResult(
                    "matrix-structure",
                    False,
                    f"block vs full spectrum differ by {gap:.2e} at j={j}, ell={ell}",
                )
    return CheckResult(
        "matrix-structure", True, f"all invariants hold for j <= {j_max}, ell <= {ell_max}"
    )


def run_all() -> list[CheckResult]:
    return [
        check_cg_orthogonality(),
        check_triple_d_oracle(),
        check_table_j1_exact(),
        check_matrix_structure(),
    ]
