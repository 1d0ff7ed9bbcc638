"""Independent oracles for the test suite.

Everything here is deliberately naive and separate from the package
implementation: permutation composition from scratch, polynomial
reduction from scratch, convolution straight off the definition, the
Leibniz determinant, a free-word ring, and a direct differential-action
evaluator.  Tests compare package output against these.
"""

from fractions import Fraction
from itertools import permutations


# -- permutations (1-based one-line notation) --------------------------------


def compose(p, q):
    """Apply q first, then p."""
    return tuple(p[q[x] - 1] for x in range(len(p)))


def brute_closure(degree, generators):
    identity = tuple(range(1, degree + 1))
    elements = {identity}
    frontier = {identity}
    while frontier:
        nxt = set()
        for a in frontier:
            for g in generators:
                b = compose(a, g)
                if b not in elements:
                    elements.add(b)
                    nxt.add(b)
        frontier = nxt
    return elements


# -- integer/fraction polynomials (dense, constant first) ----------------------


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_divmod(num, den):
    num = [Fraction(v) for v in num]
    den = [Fraction(v) for v in den]
    dd = len(den) - 1
    while len(den) > 1 and den[-1] == 0:
        den.pop()
    quot = [Fraction(0)] * max(len(num) - dd, 1)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] / den[-1]
        if c:
            quot[k - dd] = c
            for j, dj in enumerate(den):
                num[k - dd + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def reduce_mod(poly, modulus):
    """Remainder of poly modulo a monic modulus, as Fractions."""
    _, rem = poly_divmod(list(poly), list(modulus))
    rem = list(rem) + [Fraction(0)] * (len(modulus) - 1 - len(rem))
    return [Fraction(v) for v in rem[: len(modulus) - 1]]


def zeta_power_coeffs(conductor, power, phi):
    """Coefficients of zeta^power in the power basis mod phi."""
    mono = [0] * (power % conductor) + [1]
    return reduce_mod(mono, phi)


# -- naive group-algebra convolution ----------------------------------------------


def naive_convolve(table, a, b, zero):
    n = len(table)
    out = [zero] * n
    for g in range(n):
        for h in range(n):
            out[table[g][h]] = out[table[g][h]] + a[g] * b[h]
    return out


# -- Leibniz determinant (field entries) --------------------------------------------


def leibniz_det(matrix):
    m = len(matrix)
    total = None
    for perm in permutations(range(m)):
        sign = _perm_sign(perm)
        term = matrix[perm[0]][0]
        for col in range(1, m):
            term = term * matrix[perm[col]][col]
        term = term if sign > 0 else -term
        total = term if total is None else total + term
    return total


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


# -- free noncommutative words over the rationals -------------------------------------


class FreeWord:
    """Formal linear combinations of words in named symbols; the perfect
    ring for checking that determinant formulas respect factor order."""

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @staticmethod
    def symbol(name):
        return FreeWord({(name,): Fraction(1)})

    @staticmethod
    def const(value):
        return FreeWord({(): Fraction(value)}) if value else FreeWord()

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return FreeWord(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FreeWord({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FreeWord({w: c * other for w, c in self.terms.items()})
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, Fraction(0)) + c1 * c2
        return FreeWord(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FreeWord({w: other * c for w, c in self.terms.items()})
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return "FreeWord(" + " + ".join(
            f"{c}*{''.join(w) or '1'}" for w, c in sorted(self.terms.items())
        ) + ")" if self.terms else "FreeWord(0)"


# -- direct differential action ---------------------------------------------------------


def act(op_terms, alpha, poly):
    """Apply sum of c * x^A d^B terms to {multidegree: coeff}, with d
    acting as alpha * d/dx; written independently of the package."""
    out = {}
    for (xdeg, ddeg), c in op_terms.items():
        for pdeg, pc in poly.items():
            if any(b > p for b, p in zip(ddeg, pdeg)):
                continue
            factor = Fraction(1)
            for b, p in zip(ddeg, pdeg):
                for step in range(b):
                    factor *= (p - step) * alpha
            new = tuple(p - b + a for p, b, a in zip(pdeg, ddeg, xdeg))
            out[new] = out.get(new, 0) + c * pc * factor
    return {k: v for k, v in out.items() if v}
