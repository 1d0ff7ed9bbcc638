"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is a polynomial in zeta_N reduced modulo the N-th cyclotomic
polynomial Phi_N, stored as integer numerators over one positive
denominator with all common factors removed.  The representation is
canonical, so equality of values is tuple equality, and every identity
check downstream is a decidable comparison instead of a floating-point
judgement call.

Conductor 1 embeds the rationals (Phi_1 = x - 1, so zeta_1 = 1).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


class ConductorMismatch(ValueError):
    """Arithmetic between values of unrelated conductors."""


class NotDivisible(ValueError):
    """Promotion target is not a multiple of the current conductor."""


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_divmod_monic(num, den):
    # den must be monic; exact division over the integers.
    num = list(num)
    dd = len(den) - 1
    quot = [0] * max(len(num) - dd, 1)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j, dj in enumerate(den):
                num[k - dd + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first.

    Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d of n.
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_monic(num, cyclotomic_polynomial(d))
            assert rem == [0]
    return tuple(num)


@lru_cache(maxsize=None)
def cyclo_degree(n: int) -> int:
    """Degree of Phi_n, i.e. Euler's totient of n."""
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # x^k mod Phi_n for 0 <= k <= max(n - 1, 2*(deg - 1)); integer rows
    # since Phi_n is monic over the integers.
    phi = cyclotomic_polynomial(n)
    d = cyclo_degree(n)
    top = max(n - 1, 2 * (d - 1))
    rows = []
    row = [0] * d
    row[0] = 1
    rows.append(tuple(row))
    for _ in range(top):
        lead = row[-1]
        row = [0] + row[:-1]
        if lead:
            for j in range(d):
                row[j] -= lead * phi[j]
        rows.append(tuple(row))
    return tuple(rows)


def _make(conductor, nums, den):
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        if v:
            g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        den //= g
        nums = [v // g for v in nums]
    c = object.__new__(Cyclo)
    c.conductor = conductor
    c.num = tuple(nums)
    c.den = den
    return c


class Cyclo:
    """An element of Q(zeta_N) in the canonical power basis mod Phi_N."""

    __slots__ = ("conductor", "num", "den")

    def __init__(self, conductor: int, coeffs):
        d = cyclo_degree(conductor)
        nums = [0] * d
        common = 1
        fracs = []
        for c in coeffs:
            f = Fraction(c)
            fracs.append(f)
            common = common * f.denominator // math.gcd(common, f.denominator)
        if len(fracs) > d:
            raise ValueError("too many coefficients for conductor %d" % conductor)
        for i, f in enumerate(fracs):
            nums[i] = f.numerator * (common // f.denominator)
        made = _make(conductor, nums, common)
        self.conductor = made.conductor
        self.num = made.num
        self.den = made.den

    # -- constructors ---------------------------------------------------

    @staticmethod
    def rational(value, conductor: int = 1) -> "Cyclo":
        f = Fraction(value)
        d = cyclo_degree(conductor)
        return _make(conductor, [f.numerator] + [0] * (d - 1), f.denominator)

    @staticmethod
    def zero(conductor: int = 1) -> "Cyclo":
        return _make(conductor, [0] * cyclo_degree(conductor), 1)

    @staticmethod
    def one(conductor: int = 1) -> "Cyclo":
        return Cyclo.rational(1, conductor)

    @staticmethod
    def zeta(conductor: int, power: int = 1) -> "Cyclo":
        """zeta_N^power, reduced into the canonical basis."""
        row = _power_table(conductor)[power % conductor]
        return _make(conductor, list(row), 1)

    # -- helpers --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor {other.conductor} != {self.conductor}; promote first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.rational(other, self.conductor)
        return None

    # -- ring / field operations ----------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        g = math.gcd(self.den, o.den)
        den = self.den // g * o.den
        fa = den // self.den
        fb = den // o.den
        return _make(self.conductor, [a * fa + b * fb for a, b in zip(self.num, o.num)], den)

    __radd__ = __add__

    def __neg__(self):
        return _make(self.conductor, [-v for v in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        d = len(a)
        if d == 1:
            return _make(self.conductor, [a[0] * b[0]], self.den * o.den)
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        rows = _power_table(self.conductor)
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            ck = conv[k]
            if ck:
                row = rows[k]
                for j in range(d):
                    if row[j]:
                        out[j] += ck * row[j]
        return _make(self.conductor, out, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        """Multiplicative inverse via the extended Euclidean algorithm
        against Phi_N (which is irreducible, so any nonzero value is a unit).
        """
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        a = [Fraction(v, self.den) for v in self.num]
        # invariant: r0 = s0 * a (mod Phi), r1 = s1 * a (mod Phi)
        r0, r1 = phi, _trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        g = r0[0]  # nonzero constant gcd
        d = cyclo_degree(self.conductor)
        inv = [c / g for c in s0] + [Fraction(0)] * d
        return Cyclo(self.conductor, inv[:d])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def conjugate(self) -> "Cyclo":
        """Complex conjugation: the field map zeta_N -> zeta_N^(N-1)."""
        n = self.conductor
        if n <= 2:
            return self
        rows = _power_table(n)
        d = len(self.num)
        out = [0] * d
        for i, c in enumerate(self.num):
            if c:
                row = rows[(i * (n - 1)) % n]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return _make(n, out, self.den)

    def promote(self, conductor: int) -> "Cyclo":
        """Reinterpret in Q(zeta_M) for a multiple M via zeta_N = zeta_M^(M/N)."""
        n = self.conductor
        if conductor == n:
            return self
        if conductor % n:
            raise NotDivisible(f"{n} does not divide {conductor}")
        step = conductor // n
        rows = _power_table(conductor)
        d = cyclo_degree(conductor)
        out = [0] * d
        for i, c in enumerate(self.num):
            if c:
                row = rows[i * step]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return _make(conductor, out, self.den)

    # -- predicates and views ---------------------------------------------

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.rational(other, self.conductor)
        if not isinstance(other, Cyclo):
            return NotImplemented
        if other.conductor == self.conductor:
            return self.num == other.num and self.den == other.den
        m = math.lcm(self.conductor, other.conductor)
        return self.promote(m) == other.promote(m)

    __hash__ = None  # canonical form is per-conductor; hashing would lie across fields

    def as_rational(self):
        """The value as a Fraction if it lies in Q, else None."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def coefficients(self) -> list[Fraction]:
        return [Fraction(v, self.den) for v in self.num]

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [str(Fraction(v, self.den)) for v in self.num],
        }

    @staticmethod
    def from_dict(data: dict) -> "Cyclo":
        n = int(data["conductor"])
        coeffs = [Fraction(s) for s in data["coeffs"]]
        if len(coeffs) != cyclo_degree(n):
            raise ValueError(
                f"expected {cyclo_degree(n)} coefficients for conductor {n}, got {len(coeffs)}"
            )
        return Cyclo(n, coeffs)

    def __repr__(self):
        return f"Cyclo({self.conductor}, {self.__str__()!r})"

    def __str__(self):
        n = self.conductor
        if not self:
            return "0"
        parts = []
        for i, v in enumerate(self.num):
            if not v:
                continue
            q = Fraction(v, self.den)
            if i == 0:
                term = str(q)
            else:
                base = f"ζ{n}" if i == 1 else f"ζ{n}^{i}"
                if q == 1:
                    term = base
                elif q == -1:
                    term = "-" + base
                else:
                    term = f"{q}*{base}"
            if parts and not term.startswith("-"):
                parts.append("+ " + term)
            elif parts:
                parts.append("- " + term[1:])
            else:
                parts.append(term)
        return " ".join(parts)


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _frac_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _frac_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for j, bj in enumerate(b):
        out[j] -= bj
    return _trim(out)


def _frac_divmod(num, den):
    num = list(num)
    lead = den[-1]
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [Fraction(0)], _trim(num)
    quot = [Fraction(0)] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] / lead
        if c:
            quot[k - dd] = c
            for j, dj in enumerate(den):
                num[k - dd + j] -= c * dj
    return _trim(quot), _trim(num)
