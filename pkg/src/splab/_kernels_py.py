"""Exact rational elimination kernels, pure-Python reference backend.

The compiled backend (``_kernels_c``) must produce bit-identical output:
same pivot choices, same canonical forms.  Any change here has to be
mirrored there.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rref(rows):
    """Reduced row echelon form.

    Returns (new_rows, pivot_cols).  The input is not mutated.  Pivot
    selection is "first nonzero entry from the top", which makes the
    output deterministic and shared with the compiled backend.
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        row_r = m[r]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
    return m, pivots


def det(rows):
    """Exact determinant of a square matrix; 1 for the 0x0 matrix."""
    n = len(rows)
    if n == 0:
        return ONE
    m = [list(row) for row in rows]
    result = ONE
    for c in range(n):
        pr = -1
        for i in range(c, n):
            if m[i][c] != 0:
                pr = i
                break
        if pr < 0:
            return ZERO
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            result = -result
        piv = m[c][c]
        result *= piv
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def symmetric_diagonal(rows):
    """Diagonal of a congruence diagonalization P^T G P of a symmetric G.

    Symmetric Gaussian elimination.  A zero pivot is repaired by first
    looking for a nonzero diagonal entry to swap in, and otherwise adding
    the row/column of a nonzero off-diagonal partner (which creates the
    pivot 2*G[k][l] in characteristic zero).
    """
    n = len(rows)
    g = [list(row) for row in rows]
    diag = []
    for k in range(n):
        if g[k][k] == 0:
            swap = -1
            for l in range(k + 1, n):
                if g[l][l] != 0:
                    swap = l
                    break
            if swap >= 0:
                g[k], g[swap] = g[swap], g[k]
                for row in g:
                    row[k], row[swap] = row[swap], row[k]
            else:
                partner = -1
                for l in range(k + 1, n):
                    if g[k][l] != 0:
                        partner = l
                        break
                if partner < 0:
                    # row (and by symmetry column) k is zero in the block
                    diag.append(ZERO)
                    continue
                for j in range(n):
                    g[k][j] += g[partner][j]
                for i in range(n):
                    g[i][k] += g[i][partner]
        piv = g[k][k]
        for i in range(k + 1, n):
            if g[i][k] != 0:
                f = g[i][k] / piv
                for j in range(n):
                    g[i][j] -= f * g[k][j]
        for i in range(k + 1, n):
            if g[k][i] != 0:
                f = g[k][i] / piv
                for j in range(n):
                    g[j][i] -= f * g[j][k]
        diag.append(piv)
    return diag
