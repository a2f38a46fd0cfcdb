"""Exact-rational symplectic invariants: fourth-root and integer
invariants of symplectic maps, the Maslov index, signature forms, the
level extension and its characters, and a seeded verification harness.
"""

from .extension import ExtElement, chi_r, chi_s, ext_inverse, ext_mul, in_kernel_r
from .invariants import (
    FourthRoot,
    det_sign_star,
    epsilon,
    j_of_map,
    k_of_map,
    n_of_map,
    pair_form,
    phi,
    s_of_map,
    s_pair,
    star_lambda,
    star_matrix,
)
from .kernels import BACKEND as kernel_backend
from .maslov import maslov_form, maslov_index, nu_cocycle
from .ratlinalg import (
    QMatrix,
    Rational,
    Subspace,
    SymBilinearForm,
    det,
    image_basis,
    intersect,
    kernel_basis,
    rank,
    signature,
    signature_index,
    solve_particular,
    sum_subspace,
)
from .symplectic import (
    OrientedLagrangian,
    SymplecticMap,
    is_symplectic,
    omega,
    perp,
    pushforward,
    stabilize,
    standard_lagrangian,
    transvection,
)

__version__ = "0.1.0"
