import pytest

from splab.extension import (
    ExtElement,
    chi_r,
    chi_s,
    ext_inverse,
    ext_mul,
    in_kernel_r,
)
from splab.invariants import FourthRoot
from splab.lab import SampleParams, random_sp, trial_rng
from splab.symplectic import SymplecticMap

ROT = SymplecticMap.from_rows([[0, 1], [-1, 0]])


def test_ext_mul_examples():
    ident = ExtElement.identity(1)
    assert ext_mul(ident, ident) == ident
    e = ext_mul(ExtElement(SymplecticMap.identity(1), 2),
                ExtElement(SymplecticMap.identity(1), -5))
    assert e.m == -3
    sq = ext_mul(ExtElement(ROT, 0), ExtElement(ROT, 0))
    assert sq.f.matrix.entries == ((-1, 0), (0, -1)) and sq.m == 0


def test_chi_s_examples():
    assert chi_s(ExtElement(SymplecticMap.identity(1), 3)) == FourthRoot(3)
    assert chi_s(ExtElement(ROT, 0)) == FourthRoot(3)  # -i
    sq = ext_mul(ExtElement(ROT, 0), ExtElement(ROT, 0))
    assert chi_s(sq) == FourthRoot(2)  # (-i)^2 = -1 = s(-Id)


def test_chi_r_examples():
    assert chi_r(ExtElement.identity(1)) == FourthRoot(0)
    assert chi_r(ExtElement(ROT, 0)) == FourthRoot(1)  # i^{-3}
    e = ExtElement(ROT, 2)
    assert chi_r(e) * chi_s(e) == FourthRoot(0)


def test_in_kernel_r():
    assert in_kernel_r(ExtElement.identity(1))
    assert not in_kernel_r(ExtElement(SymplecticMap.identity(1), 1))
    assert in_kernel_r(ExtElement(ROT, -3))
    assert in_kernel_r(ExtElement(ROT, 1))
    rational = SymplecticMap.from_rows([[2, 0], [0, "1/2"]])
    with pytest.raises(ValueError):
        in_kernel_r(ExtElement(rational, 0))


def test_inverse_law():
    params = SampleParams(g=2, seed=61)
    for t in range(8):
        rng = trial_rng(61, t)
        e = ExtElement(random_sp(params, rng), rng.randint(-3, 3))
        assert ext_mul(e, ext_inverse(e)) == ExtElement.identity(2)
        assert ext_mul(ext_inverse(e), e) == ExtElement.identity(2)


def test_kernel_closed_under_mul_and_inverse():
    params = SampleParams(g=2, seed=62)
    from splab.invariants import n_of_map

    for t in range(6):
        rng = trial_rng(62, t)
        f1, f2 = random_sp(params, rng), random_sp(params, rng)
        e1 = ExtElement(f1, n_of_map(f1))
        e2 = ExtElement(f2, n_of_map(f2))
        assert in_kernel_r(e1) and in_kernel_r(e2)
        assert in_kernel_r(ext_mul(e1, e2))
        assert in_kernel_r(ext_inverse(e1))
