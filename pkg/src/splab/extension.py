"""The central extension of the symplectic group by the integers:
level-carrying elements, the cocycle multiplication, the two characters,
and kernel membership for integral elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .invariants import FourthRoot, n_of_map, s_of_map
from .maslov import nu_cocycle
from .symplectic import SymplecticMap


@dataclass(frozen=True)
class ExtElement:
    """A pair (f, m): a symplectic map and an unbounded integer level."""

    f: SymplecticMap
    m: int

    @classmethod
    def identity(cls, g: int) -> "ExtElement":
        return cls(SymplecticMap.identity(g), 0)


def ext_mul(e1: ExtElement, e2: ExtElement) -> ExtElement:
    """(f1, m1)(f2, m2) = (f1 f2, m1 + m2 + nu(f1, f2))."""
    return ExtElement(e1.f * e2.f, e1.m + e2.m + nu_cocycle(e1.f, e2.f))


def ext_inverse(e: ExtElement) -> ExtElement:
    """Derived from the multiplication law; e * inverse(e) = (Id, 0)."""
    finv = e.f.inverse()
    return ExtElement(finv, -e.m - nu_cocycle(e.f, finv))


def chi_s(e: ExtElement) -> FourthRoot:
    """i^m * s(f); a character on the whole extended group."""
    return FourthRoot(e.m) * s_of_map(e.f)


def chi_r(e: ExtElement) -> FourthRoot:
    """i^(n(f) - m); a character on the integral extended group."""
    return FourthRoot(n_of_map(e.f) - e.m)


def in_kernel_r(e: ExtElement) -> bool:
    """n(f) = m mod 4; membership in the index-four subgroup of the
    integral extended group cut out by the second character."""
    if not e.f.is_integral():
        raise ValueError("kernel membership is defined for integral maps only")
    return (n_of_map(e.f) - e.m) % 4 == 0
