"""The Maslov index of a lagrangian triple and the 2-cocycle built from it.

Orientation of the inputs is irrelevant here: everything depends only on
the underlying lagrangian subspaces.
"""

from __future__ import annotations

from .ratlinalg import (
    QMatrix,
    SymBilinearForm,
    intersect,
    signature_index,
    solve_particular,
    sum_subspace,
)
from .symplectic import OrientedLagrangian, SymplecticMap, omega, pushforward, standard_lagrangian


def maslov_form(l1: OrientedLagrangian, l2: OrientedLagrangian,
                l3: OrientedLagrangian) -> SymBilinearForm:
    """The symmetric form B(a, b) = omega(x, b) on W = (L1+L2) n L3.

    For each basis vector a of W, x is the L2-part of any decomposition
    a = x' + x with x' in L1, x in L2.  B does not depend on the choice;
    symmetry of the Gram matrix is asserted on construction.
    """
    if not (l1.g == l2.g == l3.g):
        raise ValueError("genus mismatch")
    n = 2 * l1.g
    w = intersect(sum_subspace(l1.span, l2.span), l3.span)
    if w.dim == 0:
        return SymBilinearForm((), QMatrix.zero(0, 0))
    stacked = QMatrix.from_columns(l1.basis + l2.basis, n)
    xs = []
    for a in w.basis:
        coords = solve_particular(stacked, a)
        if coords is None:  # impossible: a lies in L1 + L2 by construction
            raise RuntimeError("failed to decompose a vector of (L1+L2) n L3")
        c2 = coords[l1.g:]
        xs.append(tuple(sum(c2[k] * l2.basis[k][i] for k in range(l2.g))
                        for i in range(n)))
    gram = QMatrix([[omega(x, b) for b in w.basis] for x in xs])
    return SymBilinearForm(w.basis, gram)


def maslov_index(l1: OrientedLagrangian, l2: OrientedLagrangian,
                 l3: OrientedLagrangian) -> int:
    """Signature of the triple form; an integer in [-g, g]."""
    return signature_index(maslov_form(l1, l2, l3))


def nu_cocycle(f1: SymplecticMap, f2: SymplecticMap) -> int:
    """mu(lambda_0, f1(lambda_0), f1 f2(lambda_0)), the extension cocycle."""
    if f1.g != f2.g:
        raise ValueError("genus mismatch")
    lam0 = standard_lagrangian(f1.g)
    return maslov_index(lam0, pushforward(f1, lam0), pushforward(f1 * f2, lam0))
