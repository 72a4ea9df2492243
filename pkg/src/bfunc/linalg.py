"""Exact rational linear algebra helpers."""

from .rationals import Rational


def nullspace(rows, ncols):
    """Kernel basis of a rational matrix given as a list of rows.

    Gauss-Jordan elimination with exact arithmetic; pivots are the first
    nonzero entry in each column, so the result is deterministic.  Basis
    vectors have a 1 in their free column.
    """
    mat = [list(row) for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        vec = [Rational(0)] * ncols
        vec[fc] = Rational(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(vec)
    return basis
