"""Exact rational linear algebra: ranks, kernels, solving, subspace
lattice operations, determinants, and signatures by congruence
diagonalization.

Everything is a pure function over immutable values; the scalar type is
``fractions.Fraction`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels

Rational = Fraction
Vector = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(entries) -> Vector:
    return tuple(_frac(x) for x in entries)


class QMatrix:
    """Immutable dense matrix of rationals, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(vec(row) for row in entries)
        self.entries: tuple[Vector, ...] = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], ambient: int | None = None) -> "QMatrix":
        if not columns:
            return cls.zero(ambient or 0, 0)
        n = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)])

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "QMatrix":
        return QMatrix([self.column(j) for j in range(self.cols)])

    def apply(self, v: Sequence) -> Vector:
        w = vec(v)
        if len(w) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(row[j] * w[j] for j in range(self.cols)) for row in self.entries)

    def __mul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = [other.column(j) for j in range(other.cols)]
        return QMatrix(
            [[sum(row[k] * col[k] for k in range(self.cols)) for col in cols]
             for row in self.entries]
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-x for x in row] for row in self.entries])

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return QMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, QMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"QMatrix({[[str(x) for x in row] for row in self.entries]})"


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n given by a linearly independent basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        if not self.basis:
            return all(x == 0 for x in v)
        m = QMatrix.from_columns(self.basis, self.ambient_dim)
        return solve_particular(m, vec(v)) is not None

    def spans_equal(self, other: "Subspace") -> bool:
        return (
            self.ambient_dim == other.ambient_dim
            and self.dim == other.dim
            and all(self.contains(v) for v in other.basis)
        )


@dataclass(frozen=True)
class SymBilinearForm:
    """A symmetric bilinear form carried on an explicit basis of its space."""

    space_basis: tuple[Vector, ...]
    gram: QMatrix

    def __post_init__(self):
        g = self.gram
        if g.rows != g.cols or g.rows != len(self.space_basis):
            raise ValueError("gram size does not match basis")
        if g != g.transpose():
            raise ValueError("gram matrix is not symmetric")

    @property
    def dim(self) -> int:
        return len(self.space_basis)


def _canonical_span(vectors: Sequence[Vector], ambient: int) -> Subspace:
    """Canonical (rref-row) basis of the span of the given vectors."""
    if not vectors:
        return Subspace(ambient, ())
    reduced, pivots = kernels.rref([list(v) for v in vectors])
    return Subspace(ambient, tuple(tuple(reduced[i]) for i in range(len(pivots))))


def subspace_from_vectors(vectors: Sequence[Sequence], ambient: int) -> Subspace:
    return _canonical_span([vec(v) for v in vectors], ambient)


def full_space(n: int) -> Subspace:
    return Subspace(n, tuple(QMatrix.identity(n).entries))


def zero_space(n: int) -> Subspace:
    return Subspace(n, ())


def rank(m: QMatrix) -> int:
    _, pivots = kernels.rref(m.entries)
    return len(pivots)


def kernel_basis(m: QMatrix) -> Subspace:
    """Canonical basis of {v : Mv = 0}, one vector per free column."""
    reduced, pivots = kernels.rref(m.entries)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -reduced[i][fc]
        basis.append(tuple(v))
    return Subspace(m.cols, tuple(basis))


def image_basis(m: QMatrix) -> Subspace:
    """Canonical basis of the column space."""
    return _canonical_span([m.column(j) for j in range(m.cols)], m.rows)


def solve_particular(m: QMatrix, b: Sequence) -> Vector | None:
    """One solution of Mx = b with free variables zeroed, or None."""
    target = vec(b)
    if len(target) != m.rows:
        raise ValueError("dimension mismatch")
    aug = [list(row) + [target[i]] for i, row in enumerate(m.entries)]
    reduced, pivots = kernels.rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = reduced[i][m.cols]
    return tuple(x)


def det(m: QMatrix) -> Fraction:
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    return kernels.det(m.entries)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Canonical basis of S1 n S2."""
    if s1.ambient_dim != s2.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    n = s1.ambient_dim
    if not s1.basis or not s2.basis:
        return zero_space(n)
    # nullspace of [B1 | -B2]; intersection vectors are B1 @ c1
    stacked = QMatrix(
        [list(row1) + [-x for x in row2]
         for row1, row2 in zip(
             QMatrix.from_columns(s1.basis, n).entries,
             QMatrix.from_columns(s2.basis, n).entries,
         )]
    )
    b1 = QMatrix.from_columns(s1.basis, n)
    vectors = [b1.apply(k[: s1.dim]) for k in kernel_basis(stacked).basis]
    return _canonical_span(vectors, n)


def sum_subspace(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.ambient_dim != s2.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return _canonical_span(list(s1.basis) + list(s2.basis), s1.ambient_dim)


def signature(form: SymBilinearForm) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia counts of the form."""
    diag = kernels.symmetric_diagonal(form.gram.entries)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg


def signature_index(form: SymBilinearForm) -> int:
    """Positives minus negatives; the radical contributes zero."""
    pos, neg, _ = signature(form)
    return pos - neg
