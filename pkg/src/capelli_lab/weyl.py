"""Symbolic Weyl algebra with exact normal ordering.

Operators are stored normal-ordered: a sparse map from (x-multidegree,
d-multidegree) pairs to cyclotomic coefficients, with all multiplication
operators to the left of all differentiations.  The single reordering
rule is d^b x^a = sum over k of C(b,k) * falling(a,k) * alpha^k *
x^(a-k) d^(b-k) per variable, distinct variables commuting.  Canonical
form makes operator equality a term-by-term comparison, which is
strictly stronger than agreeing on any bounded-degree polynomial.

Two variable layouts occur: an m x m grid of formal entries (the
generic setting, any alpha), and one variable per group element (the
representation setting, base alpha 1, where the matrix combinations
X, D built from a unitary irrep satisfy the grid relations with
alpha = group order / degree).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from . import linalg
from .cyclo import Cyclo
from .irreps import Irrep
from .ncdet import (
    SizeLimit,
    ZPoly,
    coldet,
    doubledet,
    natural_shift,
    natural_sigma,
    natural_star,
    positioned_doubledet,
    rowdet,
)
from .reports import Report

GENERIC_SIZE_LIMIT = 3
REP_DEGREE_LIMIT = 2
THEOREM_M_LIMIT = 2


class ContextMismatch(ValueError):
    pass


@dataclass(frozen=True)
class WeylContext:
    names: tuple[str, ...]
    alpha: Fraction
    conductor: int = 1

    @property
    def size(self) -> int:
        return len(self.names)


def _falling(a: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= a - i
    return out


class WeylOp:
    __slots__ = ("context", "terms")

    def __init__(self, context: WeylContext, terms: dict):
        self.context = context
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ctx: WeylContext) -> "WeylOp":
        return WeylOp(ctx, {})

    @staticmethod
    def one(ctx: WeylContext) -> "WeylOp":
        empty = (0,) * ctx.size
        return WeylOp(ctx, {(empty, empty): Cyclo.one(ctx.conductor)})

    @staticmethod
    def x(ctx: WeylContext, var: int, coeff=1) -> "WeylOp":
        empty = (0,) * ctx.size
        deg = tuple(1 if v == var else 0 for v in range(ctx.size))
        c = coeff if isinstance(coeff, Cyclo) else Cyclo.rational(coeff, ctx.conductor)
        return WeylOp(ctx, {(deg, empty): c} if c else {})

    @staticmethod
    def d(ctx: WeylContext, var: int, coeff=1) -> "WeylOp":
        empty = (0,) * ctx.size
        deg = tuple(1 if v == var else 0 for v in range(ctx.size))
        c = coeff if isinstance(coeff, Cyclo) else Cyclo.rational(coeff, ctx.conductor)
        return WeylOp(ctx, {(empty, deg): c} if c else {})

    @staticmethod
    def scalar(ctx: WeylContext, value) -> "WeylOp":
        empty = (0,) * ctx.size
        c = value if isinstance(value, Cyclo) else Cyclo.rational(value, ctx.conductor)
        return WeylOp(ctx, {(empty, empty): c} if c else {})

    # -- ring operations ------------------------------------------------------

    def _check(self, other):
        if other.context is not self.context:
            raise ContextMismatch("operators from different Weyl contexts")

    def __add__(self, other):
        if not isinstance(other, WeylOp):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            cur = out.get(key)
            acc = c if cur is None else cur + c
            if acc:
                out[key] = acc
            elif cur is not None:
                del out[key]
        return WeylOp(self.context, out)

    def __neg__(self):
        return WeylOp(self.context, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> "WeylOp":
        if isinstance(scalar, Cyclo):
            s = scalar.promote(self.context.conductor) if scalar.conductor != self.context.conductor else scalar
        else:
            s = Cyclo.rational(scalar, self.context.conductor)
        if not s:
            return WeylOp.zero(self.context)
        return WeylOp(self.context, {k: s * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.scale(other)
        if not isinstance(other, WeylOp):
            return NotImplemented
        self._check(other)
        alpha = self.context.alpha
        add = int.__add__
        out: dict = {}
        out_get = out.get
        for (xa, da), ca in self.terms.items():
            da_support = [v for v, e in enumerate(da) if e]
            for (xb, db), cb in other.terms.items():
                base = ca * cb
                hot = [v for v in da_support if xb[v]]
                if not hot:
                    key = (tuple(map(add, xa, xb)), tuple(map(add, da, db)))
                    cur = out_get(key)
                    acc = base if cur is None else cur + base
                    if acc:
                        out[key] = acc
                    elif cur is not None:
                        del out[key]
                    continue
                ranges = [range(min(da[v], xb[v]) + 1) for v in hot]
                for ks in product(*ranges):
                    mult = Fraction(1)
                    for v, k in zip(hot, ks):
                        if k:
                            mult *= math.comb(da[v], k) * _falling(xb[v], k) * alpha**k
                    xs = list(map(add, xa, xb))
                    ds = list(map(add, da, db))
                    for v, k in zip(hot, ks):
                        xs[v] -= k
                        ds[v] -= k
                    coeff = base * mult
                    key = (tuple(xs), tuple(ds))
                    cur = out_get(key)
                    acc = coeff if cur is None else cur + coeff
                    if acc:
                        out[key] = acc
                    elif cur is not None:
                        del out[key]
        return WeylOp(self.context, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.scale(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self.context is other.context and self.terms == other.terms

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.context.names
        rendered = []
        for (xd, dd) in sorted(self.terms.keys()):
            c = self.terms[(xd, dd)]
            monos = []
            for v, e in enumerate(xd):
                if e:
                    monos.append(f"x{names[v]}" + (f"^{e}" if e > 1 else ""))
            for v, e in enumerate(dd):
                if e:
                    monos.append(f"d{names[v]}" + (f"^{e}" if e > 1 else ""))
            body = "*".join(monos)
            cs = str(c)
            if not body:
                rendered.append(cs if " " not in cs else f"({cs})")
            elif cs == "1":
                rendered.append(body)
            elif cs == "-1":
                rendered.append("-" + body)
            else:
                rendered.append((f"({cs})" if " " in cs else cs) + "*" + body)
        return " + ".join(rendered).replace("+ -", "- ")

    def __repr__(self):
        return f"WeylOp({self})"


def commutator(a: WeylOp, b: WeylOp) -> WeylOp:
    return a * b - b * a


# -- action on commutative polynomials ------------------------------------------


def apply_to_polynomial(op: WeylOp, poly: dict) -> dict:
    """Act on a polynomial {x-multidegree: coefficient}, with each d
    variable acting as alpha * d/dx.  A semantic cross-check of the
    normal ordering, independent of operator multiplication."""
    alpha = op.context.alpha
    out: dict = {}
    for (xd, dd), c in op.terms.items():
        for pdeg, pc in poly.items():
            if any(b > p for b, p in zip(dd, pdeg)):
                continue
            mult = Fraction(1)
            for b, p in zip(dd, pdeg):
                if b:
                    mult *= _falling(p, b) * alpha**b
            new = tuple(p - b + a for p, b, a in zip(pdeg, dd, xd))
            coeff = c * pc * mult
            cur = out.get(new)
            acc = coeff if cur is None else cur + coeff
            if acc:
                out[new] = acc
            elif cur is not None:
                del out[new]
    return out


# -- matrix builders --------------------------------------------------------------


def build_generic(m: int, alpha) -> tuple[WeylContext, list, list, list]:
    """The m x m grid of variables with X = (x_ij), D = (d_ij) and
    Pi = transpose(X) * D."""
    if m > GENERIC_SIZE_LIMIT:
        raise SizeLimit(f"generic size {m} exceeds limit {GENERIC_SIZE_LIMIT}")
    names = tuple(f"{i+1}{j+1}" for i in range(m) for j in range(m))
    ctx = WeylContext(names, Fraction(alpha), 1)
    xm = [[WeylOp.x(ctx, i * m + j) for j in range(m)] for i in range(m)]
    dm = [[WeylOp.d(ctx, i * m + j) for j in range(m)] for i in range(m)]
    pi = _transpose_product(ctx, xm, dm)
    return ctx, xm, dm, pi


def build_rep(irrep: Irrep) -> tuple[WeylContext, list, list, list]:
    """One variable per group element; X uses conjugated matrix entries,
    D the plain ones, Pi = transpose(X) * D."""
    group = irrep.group
    names = tuple(group.element_names)
    ctx = WeylContext(names, Fraction(1), irrep.conductor)
    m = irrep.degree
    xm = [[WeylOp.zero(ctx) for _ in range(m)] for _ in range(m)]
    dm = [[WeylOp.zero(ctx) for _ in range(m)] for _ in range(m)]
    for g in range(group.order):
        mat = irrep.matrices[g]
        for i in range(m):
            for j in range(m):
                v = mat[i][j]
                if v:
                    xm[i][j] = xm[i][j] + WeylOp.x(ctx, g, v.conjugate())
                    dm[i][j] = dm[i][j] + WeylOp.d(ctx, g, v)
    pi = _transpose_product(ctx, xm, dm)
    return ctx, xm, dm, pi


def _transpose_product(ctx, xm, dm):
    m = len(xm)
    pi = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = WeylOp.zero(ctx)
            for k in range(m):
                acc = acc + xm[k][i] * dm[k][j]
            row.append(acc)
        pi.append(row)
    return pi


# -- relation verifiers --------------------------------------------------------------


def verify_rep_relations(irrep: Irrep) -> Report:
    """[X,X] = 0, [D,D] = 0, [D_ij, X_kl] = (|G|/degree) delta delta.

    The two vanishing checks run over unordered distinct pairs (the
    commutator is antisymmetric and vanishes identically on equal
    operands); the mixed relation runs over all index 4-tuples.
    """
    report = Report()
    ctx, xm, dm, _ = build_rep(irrep)
    m = irrep.degree
    alpha = irrep.alpha
    zero = WeylOp.zero(ctx)
    ok_xx = ok_dd = ok_dx = True
    witness = {}
    for i in range(m):
        for j in range(m):
            for k in range(m):
                for l in range(m):
                    if (k, l) > (i, j):
                        if ok_xx and commutator(xm[i][j], xm[k][l]) != zero:
                            ok_xx, witness["xx"] = False, (i, j, k, l)
                        if ok_dd and commutator(dm[i][j], dm[k][l]) != zero:
                            ok_dd, witness["dd"] = False, (i, j, k, l)
                    expected = (
                        WeylOp.scalar(ctx, alpha) if (i == k and j == l) else zero
                    )
                    if ok_dx and commutator(dm[i][j], xm[k][l]) != expected:
                        ok_dx, witness["dx"] = False, (i, j, k, l)
    report.add("x-commute", irrep.label, ok_xx, str(witness.get("xx", "")))
    report.add("d-commute", irrep.label, ok_dd, str(witness.get("dd", "")))
    report.add("d-x-relation", irrep.label, ok_dx,
               str(witness.get("dx", "")) or f"alpha = {alpha}")
    return report


def verify_pi_relations(pi, alpha, label="generic") -> Report:
    """[Pi_ij, Pi_kl] = alpha * (delta_jk Pi_il - delta_il Pi_kj).

    Both sides are antisymmetric under swapping (i,j) with (k,l), and for
    (i,j) = (k,l) both sides are identically zero in any ring, so only
    unordered distinct pairs carry content.
    """
    report = Report()
    m = len(pi)
    ctx = pi[0][0].context
    alpha = Fraction(alpha)
    ok = True
    witness = ""
    for i in range(m):
        for j in range(m):
            for k in range(m):
                for l in range(m):
                    if (k, l) <= (i, j):
                        continue
                    lhs = commutator(pi[i][j], pi[k][l])
                    rhs = WeylOp.zero(ctx)
                    if j == k:
                        rhs = rhs + pi[i][l].scale(alpha)
                    if i == l:
                        rhs = rhs - pi[k][j].scale(alpha)
                    if lhs != rhs:
                        ok = False
                        witness = f"tuple {(i + 1, j + 1, k + 1, l + 1)}"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("pi-relations", label, ok, witness)
    return report


# -- Capelli identity and element ------------------------------------------------------


def _shift_matrix(mat, diag, alpha, one):
    m = len(mat)
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            entry = mat[i][j]
            if i == j and diag[i]:
                entry = entry + one.scale(Fraction(alpha) * diag[i])
            row.append(entry)
        out.append(row)
    return out


def _z_matrix(mat, diag, alpha, one, z_shift=Fraction(0)):
    m = len(mat)
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            const = mat[i][j]
            if i == j:
                s = Fraction(alpha) * diag[i] - z_shift
                if s:
                    const = const + one.scale(s)
                row.append(ZPoly([const, -one]))
            else:
                row.append(ZPoly([const]))
        out.append(row)
    return out


def verify_capelli(xm, dm, pi, alpha, label="generic") -> Report:
    """coldet(Pi + alpha*(m-1,...,0)) = coldet(X) * coldet(D)."""
    report = Report()
    ctx = pi[0][0].context
    m = len(pi)
    one = WeylOp.one(ctx)
    lhs = coldet(_shift_matrix(pi, natural_shift(m), alpha, one))
    rhs = coldet(xm) * coldet(dm)
    report.add("capelli-identity", label, lhs == rhs)
    return report


def verify_capelli_rep(irrep: Irrep) -> Report:
    if irrep.degree > REP_DEGREE_LIMIT:
        raise SizeLimit(
            f"representation Capelli check limited to degree {REP_DEGREE_LIMIT}"
        )
    _, xm, dm, pi = build_rep(irrep)
    return verify_capelli(xm, dm, pi, irrep.alpha, label=irrep.label)


def capelli_zpoly(pi, alpha) -> ZPoly:
    """The characteristic-style column determinant as a z-polynomial."""
    ctx = pi[0][0].context
    m = len(pi)
    one = WeylOp.one(ctx)
    return coldet(_z_matrix(pi, natural_shift(m), alpha, one))


def verify_capelli_properties(pi, alpha, label="generic") -> Report:
    """The z-polynomial commutes with every Pi entry and is invariant
    under conjugation by the permutation + transvection family."""
    report = Report()
    ctx = pi[0][0].context
    m = len(pi)
    cz = capelli_zpoly(pi, alpha)
    ok = True
    witness = ""
    for i in range(m):
        for j in range(m):
            for coeff in cz.coeffs:
                if commutator(pi[i][j], coeff):
                    ok = False
                    witness = f"[Pi_{i+1}{j+1}, C(z)] != 0"
                    break
            if not ok:
                break
        if not ok:
            break
    report.add("capelli-central", label, ok, witness)

    one = WeylOp.one(ctx)
    for idx, p in enumerate(linalg.p_family(m, ctx.conductor)):
        p_inv = linalg.mat_inverse(p)
        conj = []
        for i in range(m):
            row = []
            for j in range(m):
                acc = WeylOp.zero(ctx)
                for k in range(m):
                    for l in range(m):
                        s = p[i][k] * p_inv[l][j]
                        if s:
                            acc = acc + pi[k][l].scale(s)
                row.append(acc)
            conj.append(row)
        got = coldet(_z_matrix(conj, natural_shift(m), alpha, one))
        report.add("capelli-conjugation", f"{label}#P{idx}", got == cz)
    return report


# -- three determinants --------------------------------------------------------------


def positioned_double_det_weyl(mat, alpha, one, sigma, shift_constant) -> ZPoly:
    """Symmetrized determinant with the shift sequence (sigma(m), ...,
    sigma(1)) scaled by alpha attached to factor positions; every diagonal
    hit also picks up -(z + c)."""
    m = len(mat)
    pattern = natural_sigma(m, sigma)
    matrix = [[ZPoly([entry]) for entry in row] for row in mat]
    diagonal_terms = [
        ZPoly([one.scale(Fraction(alpha) * pattern[i] - Fraction(shift_constant)), -one])
        for i in range(m)
    ]
    return positioned_doubledet(matrix, diagonal_terms)


def verify_det_equalities(m: int) -> Report:
    """Column, row and double determinant of the generic Pi at alpha = 1.

    The three-way equality: the column determinant with shifts
    (m-1, ..., 0), the row determinant with shifts (0, ..., m-1), and for
    every permutation the symmetrized double determinant with the permuted
    shift sequence attached to factor positions and the variable moved to
    z + 1.  The other parse of the double form, with the shift pattern
    baked into the matrix before the double sum, coincides in size 1 but
    differs by a multiple of Pi_11 - Pi_22 in size 2; it is evaluated and
    recorded as a measurement so the difference is visible.
    """
    if m > THEOREM_M_LIMIT:
        raise SizeLimit(f"double determinant over operators limited to size {THEOREM_M_LIMIT}")
    report = Report()
    alpha = Fraction(1)
    ctx, _, _, pi = build_generic(m, alpha)
    one = WeylOp.one(ctx)

    cd = coldet(_z_matrix(pi, natural_shift(m), alpha, one))
    rd = rowdet(_z_matrix(pi, natural_star(m), alpha, one))
    report.add("coldet-eq-rowdet", f"m={m}", cd == rd)

    for sigma in permutations(range(1, m + 1)):
        dd = positioned_double_det_weyl(pi, alpha, one, sigma, Fraction(1))
        report.add("doubledet-positioned", f"m={m} sigma={sigma}", dd == cd,
                   "" if dd == cd else f"difference {dd - cd}")
        naive = doubledet(_z_matrix(pi, natural_sigma(m, sigma), alpha, one, Fraction(1)))
        report.measure(
            "doubledet-matrix", f"m={m} sigma={sigma}",
            "matches coldet" if naive == cd else f"differs by {naive - cd}",
        )
    return report
