"""Two dimensional module over the split-complex numbers.

Vectors carry an indefinite sesquilinear product

    inner(u, v) = u1 * conj(v1) + u2 * conj(v2)

which is linear in the first argument, conjugate-symmetric, and, viewed as a
real bilinear form on the four real coordinates, has signature (+,-,+,-).
A 2x2 matrix is *unitary* here when its rows are orthonormal under this
product.  Taking the squared modulus of every entry of a unitary matrix
whose entries all sit in the positive cone yields a doubly stochastic
probability matrix, the bridge between the linear algebra and probability
bookkeeping built on top of it in :mod:`hyperq.born`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import EPS_ALG, ONE, ZERO, SplitComplex
from .errors import NotUnitaryError

__all__ = [
    "Vec2",
    "Mat2",
    "inner",
    "orthonormality_residual",
    "is_orthonormal_rows",
    "change_basis",
    "prob_matrix",
    "doubly_stochastic_residual",
]


@dataclass(frozen=True)
class Vec2:
    """Pair of split-complex coordinates in an implicit ordered basis."""

    c1: SplitComplex
    c2: SplitComplex

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.c1 - other.c1, self.c2 - other.c2)

    def __mul__(self, scalar: SplitComplex | float | int) -> Vec2:
        return Vec2(self.c1 * scalar, self.c2 * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> Vec2:
        return Vec2(-self.c1, -self.c2)

    def coords(self) -> tuple[SplitComplex, SplitComplex]:
        return (self.c1, self.c2)

    def norms_sq(self) -> tuple[float, float]:
        """Squared moduli of both coordinates."""
        return (self.c1.norm_sq(), self.c2.norm_sq())

    def norm_sq_sum(self) -> float:
        return self.c1.norm_sq() + self.c2.norm_sq()

    def dist(self, other: Vec2) -> float:
        return max(self.c1.dist(other.c1), self.c2.dist(other.c2))

    def to_list(self) -> list[list[float]]:
        """JSON form ``[[x1, y1], [x2, y2]]``."""
        return [self.c1.to_list(), self.c2.to_list()]

    @classmethod
    def from_list(cls, data: object) -> Vec2:
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise ValueError(f"expected [[x1,y1],[x2,y2]], got {data!r}")
        return cls(SplitComplex.from_list(data[0]), SplitComplex.from_list(data[1]))

    @classmethod
    def basis1(cls) -> Vec2:
        return cls(ONE, ZERO)

    @classmethod
    def basis2(cls) -> Vec2:
        return cls(ZERO, ONE)


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix of split-complex entries, row major."""

    a11: SplitComplex
    a12: SplitComplex
    a21: SplitComplex
    a22: SplitComplex

    @property
    def row1(self) -> Vec2:
        return Vec2(self.a11, self.a12)

    @property
    def row2(self) -> Vec2:
        return Vec2(self.a21, self.a22)

    def rows(self) -> tuple[Vec2, Vec2]:
        return (self.row1, self.row2)

    def entries(self) -> tuple[SplitComplex, SplitComplex, SplitComplex, SplitComplex]:
        return (self.a11, self.a12, self.a21, self.a22)

    def to_list(self) -> list[list[list[float]]]:
        """JSON form ``[[[x11,y11],[x12,y12]], [[x21,y21],[x22,y22]]]``."""
        return [self.row1.to_list(), self.row2.to_list()]

    @classmethod
    def from_list(cls, data: object) -> Mat2:
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise ValueError(f"expected two rows, got {data!r}")
        r1 = Vec2.from_list(data[0])
        r2 = Vec2.from_list(data[1])
        return cls.from_rows(r1, r2)

    @classmethod
    def from_rows(cls, r1: Vec2, r2: Vec2) -> Mat2:
        return cls(r1.c1, r1.c2, r2.c1, r2.c2)

    @classmethod
    def identity(cls) -> Mat2:
        return cls(ONE, ZERO, ZERO, ONE)


def inner(u: Vec2, v: Vec2) -> SplitComplex:
    """Indefinite sesquilinear product, conjugation on the second argument.

    ``inner(u, u)`` always has a vanishing j component, so self-products are
    real; they may still be negative, which is the whole point of working
    over an indefinite form.
    """
    return u.c1 * v.c1.conj() + u.c2 * v.c2.conj()


def orthonormality_residual(m: Mat2) -> float:
    """Largest deviation of the row products from the orthonormal pattern.

    Measures ``inner(r1, r1)`` and ``inner(r2, r2)`` against 1 and
    ``inner(r1, r2)`` against 0, componentwise, and returns the worst case.
    """
    r1, r2 = m.rows()
    return max(
        inner(r1, r1).dist(ONE),
        inner(r2, r2).dist(ONE),
        inner(r1, r2).dist(ZERO),
    )


def is_orthonormal_rows(m: Mat2, tol: float = EPS_ALG) -> bool:
    """True when both rows are unit vectors orthogonal to each other."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    return orthonormality_residual(m) <= tol


def change_basis(coeffs: Vec2, basis: Mat2, tol: float = EPS_ALG) -> Vec2:
    """Coordinates of a vector after expressing each old basis vector in a new one.

    Row i of ``basis`` holds the new-basis coordinates of old basis vector i,
    so the transformed coefficient pair is the row vector ``coeffs`` times
    the matrix:

        out_k = coeffs.c1 * basis[1][k] + coeffs.c2 * basis[2][k]

    The matrix must pass :func:`is_orthonormal_rows` at ``tol``; anything
    else is not a legitimate basis change and raises :class:`NotUnitaryError`.
    """
    if not is_orthonormal_rows(basis, tol):
        raise NotUnitaryError(
            f"rows are not orthonormal (residual {orthonormality_residual(basis)})"
        )
    return Vec2(
        coeffs.c1 * basis.a11 + coeffs.c2 * basis.a21,
        coeffs.c1 * basis.a12 + coeffs.c2 * basis.a22,
    )


def prob_matrix(m: Mat2) -> np.ndarray:
    """Entrywise squared moduli as a (2, 2) float array.

    For a unitary matrix with all entries in the positive cone the result is
    doubly stochastic; no such condition is checked here.
    """
    return np.array(
        [
            [m.a11.norm_sq(), m.a12.norm_sq()],
            [m.a21.norm_sq(), m.a22.norm_sq()],
        ]
    )


def doubly_stochastic_residual(p: np.ndarray) -> float:
    """Largest deviation of any row or column sum from 1."""
    p = np.asarray(p, dtype=float)
    sums = np.concatenate([p.sum(axis=1), p.sum(axis=0)])
    return float(np.max(np.abs(sums - 1.0)))
