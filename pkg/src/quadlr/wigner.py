"""Exact and numerical angular-momentum algebra.

Clebsch-Gordan coefficients are evaluated with the Racah sum in rational
arithmetic and returned as :class:`ExactRadical` values of the form
``sign * sqrt(p/q)``.  Reduced rotation matrices ``d^l_{m,m'}(beta)`` use
Wigner's explicit sum formula.  A Gauss-Legendre quadrature of the
triple-d product over the internal bending angle provides an independent
oracle for the Clebsch-Gordan route used by the interaction matrix.

Everything here is a pure function of its arguments; all values are
immutable and safe to share between threads.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "ExactRadical",
    "AngularMomentum",
    "clebsch_gordan",
    "wigner_small_d",
    "triple_d_integral",
    "reflection_phase",
]


@dataclass(frozen=True)
class ExactRadical:
    """A value ``sign * sqrt(radicand)`` with a non-negative rational radicand.

    The representation is canonical: the radicand is kept in lowest terms
    (guaranteed by :class:`~fractions.Fraction`) and ``sign == 0`` exactly
    when the radicand is zero.  The set is closed under multiplication and
    negation, which is all the matrix assembly needs; sums of radicals are
    in general not radicals and are therefore not provided.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")
        if self.radicand < 0:
            raise ValueError(f"radicand must be non-negative, got {self.radicand}")
        if (self.sign == 0) != (self.radicand == 0):
            raise ValueError("sign must be 0 exactly when the radicand is 0")

    @classmethod
    def zero(cls) -> "ExactRadical":
        return cls(0, Fraction(0))

    @classmethod
    def from_rational(cls, value: Fraction | int) -> "ExactRadical":
        """Represent an exact rational as a radical (radicand = value**2)."""
        value = Fraction(value)
        if value == 0:
            return cls.zero()
        return cls(1 if value > 0 else -1, value * value)

    @classmethod
    def from_signed_radicand(cls, sign: int, radicand: Fraction | int) -> "ExactRadical":
        radicand = Fraction(radicand)
        if radicand == 0:
            return cls.zero()
        return cls(sign, radicand)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def is_rational(self) -> bool:
        """True when the radicand is a perfect square of a rational."""
        num, den = self.radicand.numerator, self.radicand.denominator
        return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den

    def as_fraction(self) -> Fraction:
        """Exact rational value; raises ValueError when irrational."""
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        root = Fraction(math.isqrt(self.radicand.numerator), math.isqrt(self.radicand.denominator))
        return self.sign * root

    def squared(self) -> Fraction:
        return self.radicand

    def __mul__(self, other: "ExactRadical | Fraction | int") -> "ExactRadical":
        if isinstance(other, ExactRadical):
            return ExactRadical.from_signed_radicand(
                self.sign * other.sign, self.radicand * other.radicand
            )
        if isinstance(other, (Fraction, int)):
            other = Fraction(other)
            sign = self.sign * (1 if other > 0 else -1 if other < 0 else 0)
            return ExactRadical.from_signed_radicand(sign, self.radicand * other * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "ExactRadical":
        return ExactRadical.from_signed_radicand(-self.sign, self.radicand)

    def __float__(self) -> float:
        return self.sign * math.sqrt(self.radicand.numerator / self.radicand.denominator)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.is_rational:
            return str(self.as_fraction())
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}sqrt({self.radicand})"


@dataclass(frozen=True)
class AngularMomentum:
    """An angular momentum stored as twice its value plus an integer projection.

    ``two_j`` keeps the door open for half-integer momenta; the operations in
    this module reject them, since only spinless integer states appear here.
    """

    two_j: int
    m: int

    def __post_init__(self) -> None:
        if self.two_j < 0:
            raise ValueError(f"two_j must be non-negative, got {self.two_j}")
        if 2 * abs(self.m) > self.two_j:
            raise ValueError(f"|m| = {abs(self.m)} exceeds j = {self.two_j}/2")

    @classmethod
    def from_j(cls, j: int, m: int) -> "AngularMomentum":
        return cls(2 * j, m)

    @property
    def is_integer(self) -> bool:
        return self.two_j % 2 == 0

    @property
    def j(self) -> int:
        if not self.is_integer:
            raise ValueError(f"j = {self.two_j}/2 is not an integer")
        return self.two_j // 2


def _check_jm(j: int, m: int, what: str = "momentum") -> tuple[int, int]:
    j, m = operator.index(j), operator.index(m)
    if j < 0:
        raise ValueError(f"{what}: j must be non-negative, got {j}")
    if abs(m) > j:
        raise ValueError(f"{what}: |m| = {abs(m)} exceeds j = {j}")
    return j, m


def clebsch_gordan(j1: int, m1: int, j2: int, m2: int, j3: int, m3: int) -> ExactRadical:
    """Exact Clebsch-Gordan coefficient <j1 m1, j2 m2 | j3 m3>.

    Condon-Shortley phase convention.  Total on valid momenta: selection-rule
    violations (m3 != m1 + m2 or a broken triangle) give an exact zero.
    """
    j1, m1 = _check_jm(j1, m1, "j1")
    j2, m2 = _check_jm(j2, m2, "j2")
    j3, m3 = _check_jm(j3, m3, "j3")
    if m3 != m1 + m2 or not abs(j1 - j2) <= j3 <= j1 + j2:
        return ExactRadical.zero()

    fact = math.factorial
    prefactor = Fraction(
        (2 * j3 + 1)
        * fact(j3 + j1 - j2)
        * fact(j3 - j1 + j2)
        * fact(j1 + j2 - j3),
        fact(j1 + j2 + j3 + 1),
    ) * (
        fact(j3 + m3)
        * fact(j3 - m3)
        * fact(j1 - m1)
        * fact(j1 + m1)
        * fact(j2 - m2)
        * fact(j2 + m2)
    )

    k_min = max(0, j2 - j3 - m1, j1 - j3 + m2)
    k_max = min(j1 + j2 - j3, j1 - m1, j2 + m2)
    total = Fraction(0)
    for k in range(k_min, k_max + 1):
        total += Fraction(
            (-1) ** k,
            fact(k)
            * fact(j1 + j2 - j3 - k)
            * fact(j1 - m1 - k)
            * fact(j2 + m2 - k)
            * fact(j3 - j2 + m1 + k)
            * fact(j3 - j1 - m2 + k),
        )
    if total == 0:
        return ExactRadical.zero()
    sign = 1 if total > 0 else -1
    return ExactRadical.from_signed_radicand(sign, total * total * prefactor)


def wigner_small_d(ell: int, m: int, mp: int, beta: float) -> float:
    """Reduced rotation matrix element d^ell_{m,mp}(beta) by Wigner's sum formula."""
    ell, m = _check_jm(ell, m, "d-matrix")
    ell, mp = _check_jm(ell, mp, "d-matrix")
    fact = math.factorial
    norm = math.sqrt(fact(ell + m) * fact(ell - m) * fact(ell + mp) * fact(ell - mp))
    cos_half = math.cos(beta / 2.0)
    sin_half = math.sin(beta / 2.0)
    total = 0.0
    for s in range(max(0, mp - m), min(ell + mp, ell - m) + 1):
        denom = fact(ell + mp - s) * fact(s) * fact(m - mp + s) * fact(ell - m - s)
        total += (
            (-1) ** (m - mp + s)
            / denom
            * cos_half ** (2 * ell + mp - m - 2 * s)
            * sin_half ** (m - mp + 2 * s)
        )
    return norm * total


_LEG_NODES: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_legendre_on_0_pi(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    if nodes not in _LEG_NODES:
        x, w = np.polynomial.legendre.leggauss(nodes)
        _LEG_NODES[nodes] = ((x + 1.0) * (math.pi / 2.0), w * (math.pi / 2.0))
    return _LEG_NODES[nodes]


def triple_d_integral(j: int, mj_out: int, q: int, mj_in: int, nodes: int = 64) -> float:
    """Quadrature oracle for the rank-2 rotational matrix element.

    Evaluates (2j+1)/2 * integral_0^pi d^j_{mj_out,0} d^2_{q,0} d^j_{mj_in,0}
    sin(delta) d(delta) by Gauss-Legendre quadrature.  The result must equal
    clebsch_gordan(2,0,j,0 -> j,0) * clebsch_gordan(2,q,j,mj_in -> j,mj_out);
    the production matrix elements use the Clebsch-Gordan route, this
    integral only cross-checks it.
    """
    j, mj_out = _check_jm(j, mj_out, "rotor")
    j, mj_in = _check_jm(j, mj_in, "rotor")
    _check_jm(2, q, "operator")
    if nodes < 2:
        raise ValueError(f"need at least 2 quadrature nodes, got {nodes}")
    delta, weights = _gauss_legendre_on_0_pi(nodes)
    values = np.array(
        [
            wigner_small_d(j, mj_out, 0, d)
            * wigner_small_d(2, q, 0, d)
            * wigner_small_d(j, mj_in, 0, d)
            * math.sin(d)
            for d in delta
        ]
    )
    return (2 * j + 1) / 2.0 * float(weights @ values)


def reflection_phase(j: int, m: int) -> int:
    """Phase of |j, m> under reflection through the trimer plane: (-1)**m.

    The reflection maps |j, m> to (-1)**m |j, -m>; this phase combined with
    the projection flip assigns the +/- character of Sigma states.
    """
    _check_jm(j, m, "reflection")
    return -1 if m % 2 else 1
