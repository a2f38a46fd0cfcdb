"""The core invariants on oriented lagrangian pairs and symplectic maps:
the orientation sign epsilon, the fourth-root invariant of a map, the
signature form of a map and its restriction to a lagrangian, the derived
integer invariants, and the pair form with its signature two-cochain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratlinalg import (
    QMatrix,
    Subspace,
    SymBilinearForm,
    det,
    image_basis,
    intersect,
    rank,
    signature_index,
    solve_particular,
)
from .symplectic import (
    OrientedLagrangian,
    SymplecticMap,
    omega,
    pushforward,
    standard_lagrangian,
)


@dataclass(frozen=True)
class FourthRoot:
    """i^exponent, a value in {1, i, -1, -i}."""

    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % 4)

    @classmethod
    def one(cls) -> "FourthRoot":
        return cls(0)

    @classmethod
    def from_sign(cls, sign: int) -> "FourthRoot":
        if sign == 1:
            return cls(0)
        if sign == -1:
            return cls(2)
        raise ValueError("sign must be +1 or -1")

    def __mul__(self, other: "FourthRoot") -> "FourthRoot":
        return FourthRoot(self.exponent + other.exponent)

    def inverse(self) -> "FourthRoot":
        return FourthRoot(-self.exponent)

    def __str__(self) -> str:
        return ("1", "i", "-1", "-i")[self.exponent]


def _sign(x: Fraction) -> int:
    if x == 0:
        raise ValueError("sign of zero")
    return 1 if x > 0 else -1


def _extend_through(kappa: Subspace, lag: OrientedLagrangian):
    """Extend kappa's basis to a basis of lag by greedy lifting.

    Returns (lifts, sigma): the appended vectors, and the determinant
    sign of expressing lag's oriented basis in the extended basis.
    """
    n = 2 * lag.g
    current = list(kappa.basis)
    lifts = []
    current_rank = len(current)
    for b in lag.basis:
        candidate = QMatrix.from_columns(tuple(current) + (b,), n)
        if rank(candidate) > current_rank:
            current.append(b)
            lifts.append(b)
            current_rank += 1
    if current_rank != lag.g:
        raise RuntimeError("kappa is not contained in the lagrangian")
    ext = QMatrix.from_columns(tuple(current), n)
    cols = []
    for b in lag.basis:
        c = solve_particular(ext, b)
        if c is None:
            raise RuntimeError("basis vector escaped its own span")
        cols.append(c)
    sigma = _sign(det(QMatrix.from_columns(tuple(cols), lag.g)))
    return lifts, sigma


def epsilon(l1: OrientedLagrangian, l2: OrientedLagrangian) -> int:
    """The orientation-comparison sign of an ordered pair, in {+1, -1}.

    kappa = L1 n L2 is given an auxiliary orientation (the canonical
    intersection basis); the result does not depend on it since the
    choice enters twice.  The transverse case reduces to the sign of
    det[omega(a_i, b_j)]; equal spans compare orientations directly.
    Both are the kappa = 0 and kappa = L cases of one computation on the
    symplectic quotient perp(kappa)/kappa, represented here by the
    greedy lifts themselves (omega of lifts equals the quotient form).
    """
    if l1.g != l2.g:
        raise ValueError("genus mismatch")
    return epsilon_with_kappa(l1, l2, intersect(l1.span, l2.span))


def epsilon_with_kappa(l1: OrientedLagrangian, l2: OrientedLagrangian,
                       kappa: Subspace) -> int:
    """epsilon computed against an explicitly (re)oriented intersection
    basis; exposed so the harness can verify the choice drops out."""
    lifts1, sigma1 = _extend_through(kappa, l1)
    lifts2, sigma2 = _extend_through(kappa, l2)
    gram = QMatrix([[omega(u, v) for v in lifts2] for u in lifts1])
    return sigma1 * sigma2 * _sign(det(gram))


def s_pair(l1: OrientedLagrangian, l2: OrientedLagrangian) -> FourthRoot:
    """i^(g - dim(L1 n L2)) * epsilon(L1, L2)."""
    kappa_dim = intersect(l1.span, l2.span).dim
    return FourthRoot(l1.g - kappa_dim) * FourthRoot.from_sign(epsilon(l1, l2))


def s_of_map(f: SymplecticMap) -> FourthRoot:
    """The fourth-root invariant of f, via the standard lagrangian.

    Independent of the orientation chosen for lambda_0: that orientation
    enters the computation twice.
    """
    lam0 = standard_lagrangian(f.g)
    return s_pair(lam0, pushforward(f, lam0))


def _displacement(f: SymplecticMap) -> QMatrix:
    return f.matrix - QMatrix.identity(2 * f.g)


def star_matrix(f: SymplecticMap) -> tuple[tuple, QMatrix]:
    """Gram matrix of a *_f b = omega((f-1)^{-1} a, b) on image(f-1).

    Returns (basis of image(f-1), Gram matrix).  Well defined because
    ker(f-1) is omega-orthogonal to image(f-1); not symmetric in general;
    empty for f = Id.
    """
    a = _displacement(f)
    img = image_basis(a)
    xs = [solve_particular(a, b) for b in img.basis]
    gram = QMatrix([[omega(x, b) for b in img.basis] for x in xs])
    return img.basis, gram


def det_sign_star(f: SymplecticMap) -> int:
    """Sign of det of the *_f Gram matrix; +1 for f = Id by convention."""
    _, gram = star_matrix(f)
    d = det(gram)
    if d == 0:
        raise RuntimeError("the full form of f must be non-singular")
    return _sign(d)


def star_lambda(f: SymplecticMap, lag: OrientedLagrangian) -> SymBilinearForm:
    """Restriction of *_f to L n image(f-1); symmetric by construction.

    Asymmetry of the computed Gram matrix signals a bug and raises.
    """
    a = _displacement(f)
    domain = intersect(lag.span, image_basis(a))
    xs = [solve_particular(a, b) for b in domain.basis]
    gram = QMatrix([[omega(x, b) for b in domain.basis] for x in xs])
    return SymBilinearForm(domain.basis, gram)


def n_of_map(f: SymplecticMap) -> int:
    """Signature of the restricted form, minus dim image(f-1), minus the
    determinant sign, plus one."""
    lam0 = standard_lagrangian(f.g)
    r = rank(_displacement(f))
    return signature_index(star_lambda(f, lam0)) - r - det_sign_star(f) + 1


def j_of_map(f: SymplecticMap) -> int:
    lam0 = standard_lagrangian(f.g)
    return -signature_index(star_lambda(f, lam0))


def k_of_map(f: SymplecticMap) -> int:
    return rank(_displacement(f)) + det_sign_star(f) - 1


def pair_form(f1: SymplecticMap, f2: SymplecticMap) -> SymBilinearForm:
    """The symmetric form x * y = omega((f1-1)^{-1}x + (f2-1)^{-1}x + x, y)
    on image(f1-1) n image(f2-1); preimages are arbitrary particular
    solutions, and symmetry is asserted."""
    if f1.g != f2.g:
        raise ValueError("genus mismatch")
    a1, a2 = _displacement(f1), _displacement(f2)
    domain = intersect(image_basis(a1), image_basis(a2))
    ws = []
    for d in domain.basis:
        u = solve_particular(a1, d)
        v = solve_particular(a2, d)
        ws.append(tuple(ui + vi + di for ui, vi, di in zip(u, v, d)))
    gram = QMatrix([[omega(w, d) for d in domain.basis] for w in ws])
    return SymBilinearForm(domain.basis, gram)


def phi(f1: SymplecticMap, f2: SymplecticMap) -> int:
    """Signature of the pair form, a 2-cochain on the symplectic group."""
    return signature_index(pair_form(f1, f2))
