"""Small exact linear algebra helpers shared across modules."""

from fractions import Fraction


def fraction_rank(rows):
    """Rank of a matrix given as an iterable of rows of ints/Fractions."""
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prow = 0
    for col in range(ncols):
        sel = None
        for r in range(prow, len(mat)):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[prow], mat[sel] = mat[sel], mat[prow]
        piv = mat[prow]
        inv = Fraction(1) / piv[col]
        for r in range(prow + 1, len(mat)):
            f = mat[r][col]
            if f:
                factor = f * inv
                row = mat[r]
                for c in range(col, ncols):
                    row[c] -= factor * piv[c]
        rank += 1
        prow += 1
        if prow == len(mat):
            break
    return rank
