# cython: language_level=3
"""Exact rational elimination kernels, compiled backend.

Mirrors _kernels_py bit for bit (same pivot choices, same canonical
forms) but carries entries as normalized (numerator, denominator) pairs
of Python ints, avoiding Fraction's per-operation overhead.
"""

from fractions import Fraction
from math import gcd


cdef inline tuple _q(num, den):
    # normalize: positive denominator, lowest terms
    if num == 0:
        return (0, 1)
    if den < 0:
        num = -num
        den = -den
    g = gcd(num, den)
    if g != 1:
        num //= g
        den //= g
    return (num, den)


cdef inline tuple _sub_mul(tuple a, tuple f, tuple b):
    # a - f*b
    pn = f[0] * b[0]
    pd = f[1] * b[1]
    return _q(a[0] * pd - pn * a[1], a[1] * pd)


cdef inline tuple _add(tuple a, tuple b):
    return _q(a[0] * b[1] + b[0] * a[1], a[1] * b[1])


cdef inline tuple _mul(tuple a, tuple b):
    return _q(a[0] * b[0], a[1] * b[1])


cdef inline tuple _div(tuple a, tuple b):
    return _q(a[0] * b[1], a[1] * b[0])


cdef list _unpack(rows):
    return [[(e.numerator, e.denominator) for e in row] for row in rows]


cdef list _repack_row(list row):
    return [Fraction(n, d) for n, d in row]


def rref(rows):
    """Reduced row echelon form; returns (new_rows, pivot_cols)."""
    cdef list m = _unpack(rows)
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t ncols = len(m[0]) if nrows else 0
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef list pivots = []
    cdef list row_r, row_i
    cdef tuple f, inv
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<tuple>(<list>m[i])[c])[0] != 0:
                pr = i
                break
        if pr < 0:
            continue
        m[r], m[pr] = m[pr], m[r]
        row_r = <list>m[r]
        inv = _q((<tuple>row_r[c])[1], (<tuple>row_r[c])[0])
        for j in range(ncols):
            row_r[j] = _mul(<tuple>row_r[j], inv)
        for i in range(nrows):
            if i == r:
                continue
            row_i = <list>m[i]
            f = <tuple>row_i[c]
            if f[0] != 0:
                for j in range(ncols):
                    row_i[j] = _sub_mul(<tuple>row_i[j], f, <tuple>row_r[j])
        pivots.append(c)
        r += 1
    return [_repack_row(<list>row) for row in m], pivots


def det(rows):
    """Exact determinant; 1 for the 0x0 matrix."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return Fraction(1)
    cdef list m = _unpack(rows)
    cdef Py_ssize_t c, i, j, pr
    cdef tuple result = (1, 1)
    cdef tuple piv, f
    cdef list row_c, row_i
    for c in range(n):
        pr = -1
        for i in range(c, n):
            if (<tuple>(<list>m[i])[c])[0] != 0:
                pr = i
                break
        if pr < 0:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            result = (-result[0], result[1])
        row_c = <list>m[c]
        piv = <tuple>row_c[c]
        result = _mul(result, piv)
        for i in range(c + 1, n):
            row_i = <list>m[i]
            if (<tuple>row_i[c])[0] != 0:
                f = _div(<tuple>row_i[c], piv)
                for j in range(n):
                    row_i[j] = _sub_mul(<tuple>row_i[j], f, <tuple>row_c[j])
    return Fraction(result[0], result[1])


def symmetric_diagonal(rows):
    """Diagonal of a congruence diagonalization of a symmetric matrix."""
    cdef Py_ssize_t n = len(rows)
    cdef list g = _unpack(rows)
    cdef list diag = []
    cdef Py_ssize_t k, i, j, l, swap, partner
    cdef tuple piv, f
    cdef list row_k, row_i
    for k in range(n):
        row_k = <list>g[k]
        if (<tuple>row_k[k])[0] == 0:
            swap = -1
            for l in range(k + 1, n):
                if (<tuple>(<list>g[l])[l])[0] != 0:
                    swap = l
                    break
            if swap >= 0:
                g[k], g[swap] = g[swap], g[k]
                for i in range(n):
                    row_i = <list>g[i]
                    row_i[k], row_i[swap] = row_i[swap], row_i[k]
                row_k = <list>g[k]
            else:
                partner = -1
                for l in range(k + 1, n):
                    if (<tuple>row_k[l])[0] != 0:
                        partner = l
                        break
                if partner < 0:
                    diag.append(Fraction(0))
                    continue
                row_i = <list>g[partner]
                for j in range(n):
                    row_k[j] = _add(<tuple>row_k[j], <tuple>row_i[j])
                for i in range(n):
                    row_i = <list>g[i]
                    row_i[k] = _add(<tuple>row_i[k], <tuple>row_i[partner])
        piv = <tuple>row_k[k]
        for i in range(k + 1, n):
            row_i = <list>g[i]
            if (<tuple>row_i[k])[0] != 0:
                f = _div(<tuple>row_i[k], piv)
                for j in range(n):
                    row_i[j] = _sub_mul(<tuple>row_i[j], f, <tuple>row_k[j])
        for i in range(k + 1, n):
            if (<tuple>row_k[i])[0] != 0:
                f = _div(<tuple>row_k[i], piv)
                for j in range(n):
                    row_i = <list>g[j]
                    row_i[i] = _sub_mul(<tuple>row_i[i], f, <tuple>row_i[k])
        diag.append(Fraction(piv[0], piv[1]))
    return diag
