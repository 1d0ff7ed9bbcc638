"""Determinants over noncommutative rings, and polynomials in a central z.

The determinant kernels enumerate the symmetric group directly and
multiply factors in exactly the defining order; no step assumes the
entries commute.  Entries may be anything ring-like: they must support
+, -, *, unary -, bool (nonzero test), ==, and scalar multiplication by
ints and Fractions from the left.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations


class SizeLimit(ValueError):
    """Matrix size beyond the configured enumeration limit."""


DEFAULT_SIZE_LIMIT = 6


def perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _check_size(matrix, limit):
    m = len(matrix)
    if m > limit:
        raise SizeLimit(f"matrix size {m} exceeds limit {limit}")
    if any(len(row) != m for row in matrix):
        raise ValueError("matrix is not square")
    return m


def coldet(matrix, limit: int = DEFAULT_SIZE_LIMIT):
    """Column determinant: sum of sgn(s) * a[s(1)][1] * a[s(2)][2] * ..."""
    m = _check_size(matrix, limit)
    total = None
    for perm in permutations(range(m)):
        term = matrix[perm[0]][0]
        for col in range(1, m):
            term = term * matrix[perm[col]][col]
        if perm_sign(perm) < 0:
            term = -term
        total = term if total is None else total + term
    return total


def rowdet(matrix, limit: int = DEFAULT_SIZE_LIMIT):
    """Row determinant: sum of sgn(s) * a[1][s(1)] * a[2][s(2)] * ..."""
    m = _check_size(matrix, limit)
    total = None
    for perm in permutations(range(m)):
        term = matrix[0][perm[0]]
        for row in range(1, m):
            term = term * matrix[row][perm[row]]
        if perm_sign(perm) < 0:
            term = -term
        total = term if total is None else total + term
    return total


def doubledet(matrix, limit: int = DEFAULT_SIZE_LIMIT):
    """Double determinant: (1/m!) * sum over (s, t) of
    sgn(st) * a[s(1)][t(1)] * ... * a[s(m)][t(m)], factors in index order.

    Requires the entries to admit exact division by m! (Fraction action).
    """
    m = _check_size(matrix, limit)
    total = None
    for sigma in permutations(range(m)):
        ssign = perm_sign(sigma)
        for tau in permutations(range(m)):
            term = matrix[sigma[0]][tau[0]]
            for i in range(1, m):
                term = term * matrix[sigma[i]][tau[i]]
            if ssign * perm_sign(tau) < 0:
                term = -term
            total = term if total is None else total + term
    return Fraction(1, math.factorial(m)) * total


def positioned_doubledet(matrix, diagonal_terms, limit: int = DEFAULT_SIZE_LIMIT):
    """Double determinant of a matrix with factor-position diagonal shifts:
    (1/m!) * sum over (s, t) of sgn(st) * prod over i of
    (a[s(i)][t(i)] + delta_{s(i), t(i)} * diagonal_terms[i]).

    For column and row determinants, adding a diagonal matrix and shifting
    the i-th factor are the same thing, because the (i, i) entry can only
    occur as the i-th factor.  In the symmetrized double sum a diagonal
    entry wanders through every factor position, so the two readings
    genuinely differ; this is the per-position one.
    """
    m = _check_size(matrix, limit)
    if len(diagonal_terms) != m:
        raise ValueError("need one diagonal term per factor position")
    total = None
    for sigma in permutations(range(m)):
        ssign = perm_sign(sigma)
        for tau in permutations(range(m)):
            term = None
            for i in range(m):
                entry = matrix[sigma[i]][tau[i]]
                if sigma[i] == tau[i]:
                    entry = entry + diagonal_terms[i]
                term = entry if term is None else term * entry
            if ssign * perm_sign(tau) < 0:
                term = -term
            total = term if total is None else total + term
    return Fraction(1, math.factorial(m)) * total


# -- diagonal shift patterns ------------------------------------------------


def natural_shift(m: int) -> list[int]:
    """Diagonal (m-1, m-2, ..., 0) as used with the column determinant."""
    return list(range(m - 1, -1, -1))


def natural_star(m: int) -> list[int]:
    """Diagonal (0, 1, ..., m-1) as used with the row determinant."""
    return list(range(m))


def natural_sigma(m: int, sigma) -> list[int]:
    """Diagonal (sigma(m), sigma(m-1), ..., sigma(1)) for sigma in S_m,
    given in one-line notation on 1..m."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, m + 1)):
        raise ValueError(f"not a permutation of 1..{m}: {sigma}")
    return [sigma[m - 1 - i] for i in range(m)]


# -- polynomials in a central variable ---------------------------------------


class ZPoly:
    """Polynomial in a central variable z over an arbitrary ring.

    Coefficients keep their ring's multiplication order; z itself
    commutes with everything.  Trailing zero coefficients are trimmed so
    equality is coefficient-wise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @staticmethod
    def constant(value) -> "ZPoly":
        return ZPoly([value])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, power: int):
        return self.coeffs[power] if power < len(self.coeffs) else None

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        out = []
        for i in range(max(len(a), len(b))):
            if i >= len(a):
                out.append(b[i])
            elif i >= len(b):
                out.append(a[i])
            else:
                out.append(a[i] + b[i])
        return ZPoly(out)

    def __neg__(self):
        return ZPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZPoly([])
        slots: list = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                prod = a * b
                k = i + j
                slots[k] = prod if slots[k] is None else slots[k] + prod
        if all(s is None for s in slots):
            return ZPoly([])
        return ZPoly(_fill(slots))

    def __rmul__(self, scalar):
        return ZPoly([scalar * c for c in self.coeffs])

    def map_coeffs(self, fn) -> "ZPoly":
        return ZPoly([fn(c) for c in self.coeffs])

    def __call__(self, value):
        """Evaluate at a central scalar value."""
        if not self.coeffs:
            raise ValueError("cannot evaluate the empty zero polynomial without a ring zero")
        acc = self.coeffs[0]
        power = value
        for c in self.coeffs[1:]:
            acc = acc + power * c
            power = power * value
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            zpart = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            cs = str(c)
            if zpart and cs == "1":
                term = zpart
            elif zpart and cs == "-1":
                term = "-" + zpart
            elif zpart:
                term = f"({cs})*{zpart}" if (" " in cs) else f"{cs}*{zpart}"
            else:
                term = f"({cs})" if " " in cs else cs
            parts.append(term)
        return " + ".join(parts)

    def __repr__(self):
        return f"ZPoly({self})"


def _fill(slots):
    # replace gaps (all-cancelled powers) with a ring zero built from a neighbor
    witness = next(s for s in slots if s is not None)
    zero = witness - witness
    return [zero if s is None else s for s in slots]
