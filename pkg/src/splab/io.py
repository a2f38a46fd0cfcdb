"""JSON wire formats: exact rational strings, matrices, lagrangians, and
campaign reports.  Rationals travel as "p/q" or "n" strings (or bare JSON
integers); decimal notation is rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ratlinalg import QMatrix
from .symplectic import OrientedLagrangian, SymplecticMap

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(value) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        return Fraction(value)
    raise ValueError(f"not an exact rational: {value!r}")


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def map_to_obj(f: SymplecticMap) -> dict:
    return {
        "g": f.g,
        "rows": [[format_rational(x) for x in row] for row in f.matrix.entries],
    }


def map_from_obj(obj: dict) -> SymplecticMap:
    g = int(obj["g"])
    rows = [[parse_rational(x) for x in row] for row in obj["rows"]]
    m = QMatrix(rows)
    if m.rows != 2 * g or m.cols != 2 * g:
        raise ValueError(f"expected a {2*g}x{2*g} matrix for g={g}")
    return SymplecticMap(g, m)


def lagrangian_to_obj(lag: OrientedLagrangian) -> dict:
    return {
        "g": lag.g,
        "basis": [[format_rational(x) for x in b] for b in lag.basis],
    }


def lagrangian_from_obj(obj: dict) -> OrientedLagrangian:
    g = int(obj["g"])
    basis = tuple(tuple(parse_rational(x) for x in b) for b in obj["basis"])
    return OrientedLagrangian(g, basis)
