"""The standard symplectic space Q^{2g}: the form omega, symplectic maps,
oriented lagrangians, transvections, and stabilization.

Basis order is (p1..pg, q1..qg); vectors are columns and maps act by left
multiplication, so omega has Gram matrix J = [[0, I], [-I, 0]].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratlinalg import QMatrix, Subspace, Vector, kernel_basis, vec


def omega(u: Sequence, v: Sequence) -> Fraction:
    """u^T J v for the standard form; bilinear and antisymmetric."""
    a, b = vec(u), vec(v)
    if len(a) != len(b) or len(a) % 2 != 0:
        raise ValueError("omega needs two vectors of equal even length")
    g = len(a) // 2
    return sum(a[i] * b[g + i] - a[g + i] * b[i] for i in range(g))


def symplectic_gram(g: int) -> QMatrix:
    rows = []
    for i in range(2 * g):
        row = [Fraction(0)] * 2 * g
        if i < g:
            row[g + i] = Fraction(1)
        else:
            row[i - g] = Fraction(-1)
        rows.append(row)
    return QMatrix(rows)


def is_symplectic(m: QMatrix, g: int) -> bool:
    if m.rows != 2 * g or m.cols != 2 * g:
        return False
    j = symplectic_gram(g)
    return m.transpose() * j * m == j


@dataclass(frozen=True)
class SymplecticMap:
    """An element of Sp(g, Q) as its 2g x 2g matrix."""

    g: int
    matrix: QMatrix

    def __post_init__(self):
        if not is_symplectic(self.matrix, self.g):
            raise ValueError("matrix does not preserve the symplectic form")

    @classmethod
    def identity(cls, g: int) -> "SymplecticMap":
        return cls(g, QMatrix.identity(2 * g))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SymplecticMap":
        m = QMatrix(rows)
        if m.rows % 2 != 0:
            raise ValueError("matrix must be 2g x 2g")
        return cls(m.rows // 2, m)

    def __mul__(self, other: "SymplecticMap") -> "SymplecticMap":
        if self.g != other.g:
            raise ValueError("genus mismatch")
        return SymplecticMap(self.g, self.matrix * other.matrix)

    def inverse(self) -> "SymplecticMap":
        # f^{-1} = J^{-1} f^T J for symplectic f; exact, no elimination
        j = symplectic_gram(self.g)
        return SymplecticMap(self.g, (-j) * self.matrix.transpose() * j)

    def apply(self, v: Sequence) -> Vector:
        return self.matrix.apply(v)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.matrix.entries for x in row)


@dataclass(frozen=True)
class OrientedLagrangian:
    """A lagrangian of Q^{2g} with an ordered basis fixing an orientation."""

    g: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        n = 2 * self.g
        if len(self.basis) != self.g or any(len(b) != n for b in self.basis):
            raise ValueError(f"need {self.g} vectors of length {n}")
        for i, u in enumerate(self.basis):
            for v in self.basis[i:]:
                if omega(u, v) != 0:
                    raise ValueError("basis is not isotropic")
        if kernel_basis(QMatrix.from_columns(self.basis, n)).dim != 0:
            raise ValueError("basis is not linearly independent")

    @property
    def span(self) -> Subspace:
        return Subspace(2 * self.g, self.basis)

    def reoriented(self) -> "OrientedLagrangian":
        """The same lagrangian with the opposite orientation."""
        flipped = (tuple(-x for x in self.basis[0]),) + self.basis[1:]
        return OrientedLagrangian(self.g, flipped)


def standard_lagrangian(g: int) -> OrientedLagrangian:
    """lambda_0 = span(p1..pg), oriented by that ordered basis."""
    basis = []
    for i in range(g):
        v = [Fraction(0)] * 2 * g
        v[i] = Fraction(1)
        basis.append(tuple(v))
    return OrientedLagrangian(g, tuple(basis))


def pushforward(f: SymplecticMap, lag: OrientedLagrangian) -> OrientedLagrangian:
    if f.g != lag.g:
        raise ValueError("genus mismatch")
    return OrientedLagrangian(f.g, tuple(f.apply(b) for b in lag.basis))


def perp(s: Subspace) -> Subspace:
    """The omega-orthogonal complement {v : omega(v, s) = 0 for all s}."""
    n = s.ambient_dim
    if n % 2 != 0:
        raise ValueError("ambient space is not symplectic")
    if not s.basis:
        from .ratlinalg import full_space

        return full_space(n)
    j = symplectic_gram(n // 2)
    constraints = QMatrix([j.apply(b) for b in s.basis])
    return kernel_basis(constraints)


def transvection(v: Sequence, t) -> SymplecticMap:
    """The map x -> x + t * omega(x, v) * v; always symplectic."""
    w = vec(v)
    if all(x == 0 for x in w):
        raise ValueError("transvection direction must be nonzero")
    if len(w) % 2 != 0:
        raise ValueError("vector length must be 2g")
    g = len(w) // 2
    tf = Fraction(t)
    n = 2 * g
    cols = []
    for j in range(n):
        e = [Fraction(0)] * n
        e[j] = Fraction(1)
        c = tf * omega(e, w)
        cols.append(tuple(e[i] + c * w[i] for i in range(n)))
    return SymplecticMap(g, QMatrix.from_columns(cols, n))


def stabilize(f: SymplecticMap) -> SymplecticMap:
    """Genus g+1 map: f on the old coordinates, identity on the new pair.

    Index bookkeeping respects the (p1..p_{g+1}, q1..qg+1) basis order:
    old p_i keeps index i, old q_i moves from g+i to g+1+i.
    """
    g = f.g
    n = 2 * (g + 1)

    def newidx(i: int) -> int:
        return i if i < g else i + 1

    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(2 * g):
        for j in range(2 * g):
            rows[newidx(i)][newidx(j)] = f.matrix.entries[i][j]
    rows[g][g] = Fraction(1)
    rows[n - 1][n - 1] = Fraction(1)
    return SymplecticMap(g + 1, QMatrix(rows))
