"""Exact linear algebra over cyclotomic scalars.

Plain Gaussian elimination; every pivot decision is an exact zero test,
so ranks and inverses are certificates rather than estimates.
"""

from __future__ import annotations

from .cyclo import Cyclo


class SingularMatrix(ValueError):
    """Matrix inversion requested for a singular matrix."""


def identity_matrix(m: int, conductor: int) -> list[list[Cyclo]]:
    one = Cyclo.one(conductor)
    zero = Cyclo.zero(conductor)
    return [[one if i == j else zero for j in range(m)] for i in range(m)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for t in range(1, k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_conj_transpose(a):
    return [[a[j][i].conjugate() for j in range(len(a))] for i in range(len(a[0]))]


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def rank(matrix) -> int:
    """Rank of a matrix of Cyclo entries (all sharing one conductor)."""
    if not matrix:
        return 0
    rows = [list(r) for r in matrix]
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [inv * v for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def p_family(m: int, conductor: int) -> list[list[list[Cyclo]]]:
    """Permutation matrices plus one transvection: generates the general
    linear group, so conjugation checks over this family are meaningful
    coverage without random search."""
    from itertools import permutations

    family = []
    one = Cyclo.one(conductor)
    zero = Cyclo.zero(conductor)
    for perm in permutations(range(m)):
        family.append([[one if perm[i] == j else zero for j in range(m)] for i in range(m)])
    if m >= 2:
        transvection = [[one if i == j else zero for j in range(m)] for i in range(m)]
        transvection[0][1] = one
        family.append(transvection)
    return family


def mat_inverse(matrix) -> list[list[Cyclo]]:
    """Exact inverse; raises SingularMatrix when no inverse exists."""
    m = len(matrix)
    conductor = matrix[0][0].conductor
    aug = [list(row) + identity_matrix(m, conductor)[i] for i, row in enumerate(matrix)]
    for col in range(m):
        pivot = next((i for i in range(col, m) if aug[i][col]), None)
        if pivot is None:
            raise SingularMatrix("matrix has no inverse")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [inv * v for v in aug[col]]
        for i in range(m):
            if i != col and aug[i][col]:
                c = aug[i][col]
                aug[i] = [a - c * b for a, b in zip(aug[i], aug[col])]
    return [row[m:] for row in aug]
