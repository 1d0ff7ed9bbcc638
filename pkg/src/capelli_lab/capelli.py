"""Capelli elements of the group algebra and the identities they satisfy.

The Capelli element of an irrep is the column determinant of the E
matrix shifted by alpha*(m-1, m-2, ..., 0) on the diagonal minus z; it
is a z-polynomial with group-algebra coefficients.  The closed form
says it collapses to u-polynomial times identity plus character element
times the next u-polynomial; evaluating at any z that misses the roots
of that next u-polynomial yields a basis of the center, one element per
irrep.

The determinant-variant checks at the bottom compare the column form
against the row form (which matches exactly) and against the symmetrized
double determinant with permuted diagonal shifts.  A diagonal shift can
be read two ways there: attached to the factor positions of each product
(for column and row determinants this is the same as adding a diagonal
matrix, since the (i, i) entry only ever occurs as factor i), or baked
into the matrix before the double sum runs.  The positioned reading
reproduces the Capelli element for every shift permutation with shift
constant alpha; the matrix reading does so only in degree 1.  Both
outcomes are measured and reported rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import linalg
from .algebra import AlgebraElement, character_element
from .groups import conjugacy_classes
from .irreps import E_matrix, Irrep, IrrepSet
from .ncdet import (
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


class BadK(ValueError):
    """Evaluation point hits a root of the relevant u-polynomial."""


DEFAULT_K = Fraction(-1)


@dataclass(frozen=True)
class CapelliElement:
    irrep_label: str
    poly: ZPoly  # coefficients are AlgebraElements

    def __str__(self):
        return render_capelli(self.poly)


# -- u polynomials ------------------------------------------------------------


def u_factor(irrep: Irrep, i: int) -> ZPoly:
    """alpha * (m - i) - z for 1 <= i <= m, over exact rationals."""
    m = irrep.degree
    if not 1 <= i <= m:
        raise IndexError(f"factor index {i} outside 1..{m}")
    return ZPoly([irrep.alpha * (m - i), Fraction(-1)])


def u_product(irrep: Irrep, count: int) -> ZPoly:
    """Product of the last `count` factors: u_m * u_(m-1) * ... ;
    the empty product is 1."""
    m = irrep.degree
    if not 0 <= count <= m:
        raise IndexError(f"factor count {count} outside 0..{m}")
    acc = ZPoly([Fraction(1)])
    for i in range(m, m - count, -1):
        acc = acc * u_factor(irrep, i)
    return acc


# -- the Capelli element -------------------------------------------------------


def shifted_matrix(irrep: Irrep, diag, z_shift=Fraction(0)) -> list[list[ZPoly]]:
    """E + alpha*diag(...) - (z + z_shift) I over z-polynomials with
    algebra-element coefficients."""
    em = E_matrix(irrep)
    group = irrep.group
    conductor = irrep.conductor
    one = AlgebraElement.identity(group, conductor)
    m = irrep.degree
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            if i == j:
                const = em[i][j] + (irrep.alpha * diag[i] - z_shift) * one
                row.append(ZPoly([const, -one]))
            else:
                row.append(ZPoly([em[i][j]]))
        out.append(row)
    return out


def capelli_element(irrep: Irrep) -> CapelliElement:
    """Column determinant of E + alpha*(m-1,...,0) - zI."""
    return CapelliElement(irrep.label, coldet(shifted_matrix(irrep, natural_shift(irrep.degree))))


def capelli_via_subsets(irrep: Irrep) -> CapelliElement:
    """Independent expansion: sum over subsets T of {1..m} of
    (-alpha)^(|T|-1) * E_(max T, max T) * product of u_s over s not in T,
    with the empty subset contributing the full u-product times identity.
    """
    m = irrep.degree
    em = E_matrix(irrep)
    group = irrep.group
    one = AlgebraElement.identity(group, irrep.conductor)
    alpha = irrep.alpha
    total = u_product(irrep, m).map_coeffs(lambda c: c * one)
    for mask in range(1, 1 << m):
        members = [s for s in range(1, m + 1) if mask & (1 << (s - 1))]
        top = max(members)
        scalar = (-alpha) ** (len(members) - 1)
        poly = ZPoly([scalar * em[top - 1][top - 1]])
        for s in range(1, m + 1):
            if s not in members:
                poly = poly * u_factor(irrep, s).map_coeffs(lambda c: c * one)
        total = total + poly
    return CapelliElement(irrep.label, total)


def verify_closed_form(irrep: Irrep) -> Report:
    """The determinant must equal u^(m) + character * u^(m-1) exactly,
    and the subset expansion must reproduce it term for term."""
    report = Report()
    one = AlgebraElement.identity(irrep.group, irrep.conductor)
    direct = capelli_element(irrep).poly
    chi = character_element(irrep)
    closed = u_product(irrep, irrep.degree).map_coeffs(lambda c: c * one) + u_product(
        irrep, irrep.degree - 1
    ).map_coeffs(lambda c: c * chi)
    report.add(
        "closed-form", irrep.label, direct == closed,
        "" if direct == closed else f"det: {render_capelli(direct)} vs closed: {render_capelli(closed)}",
    )
    subsets = capelli_via_subsets(irrep).poly
    report.add(
        "subset-expansion", irrep.label, direct == subsets,
        "" if direct == subsets else f"det: {render_capelli(direct)} vs subsets: {render_capelli(subsets)}",
    )
    return report


def verify_centrality(irrep: Irrep, irrep_set: IrrepSet | None = None) -> Report:
    """Every z-coefficient central; the element commutes with every E
    entry of its own irrep and of every inequivalent one."""
    report = Report()
    poly = capelli_element(irrep).poly
    ok = all(c.is_central() for c in poly.coeffs)
    report.add("coefficients-central", irrep.label, ok)

    conductor = irrep.conductor
    if irrep_set is not None:
        conductor = math.lcm(*[r.conductor for r in irrep_set.irreps])
    coeffs = [c.promote(conductor) for c in poly.coeffs]

    others = [irrep] if irrep_set is None else list(irrep_set.irreps)
    for other in others:
        em = E_matrix(other)
        ok = True
        witness = ""
        for i in range(other.degree):
            for j in range(other.degree):
                e = em[i][j].promote(conductor)
                if any(e * c != c * e for c in coeffs):
                    ok = False
                    witness = f"[E^{other.label}_{i+1}{j+1}, C(z)] != 0"
                    break
            if not ok:
                break
        report.add("commutes-with-E", f"{irrep.label}|{other.label}", ok, witness)
    return report


# -- conjugation invariance ------------------------------------------------------


def conjugated_capelli(irrep: Irrep, p_matrix) -> ZPoly:
    """Column determinant of P E P^-1 + alpha*shift - zI."""
    p_inv = linalg.mat_inverse(p_matrix)
    em = E_matrix(irrep)
    group = irrep.group
    m = irrep.degree
    conductor = irrep.conductor
    conj = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = AlgebraElement.zero(group, conductor)
            for k in range(m):
                for l in range(m):
                    s = p_matrix[i][k] * p_inv[l][j]
                    if s:
                        acc = acc + em[k][l] * s
            row.append(acc)
        conj.append(row)
    one = AlgebraElement.identity(group, conductor)
    shift = natural_shift(m)
    entries = []
    for i in range(m):
        row = []
        for j in range(m):
            const = conj[i][j] + (irrep.alpha * shift[i] * one if i == j else AlgebraElement.zero(group, conductor))
            row.append(ZPoly([const, -one]) if i == j else ZPoly([const]))
        entries.append(row)
    return coldet(entries)


def verify_conjugation_invariance(irrep: Irrep, p_matrix=None) -> Report:
    report = Report()
    reference = capelli_element(irrep).poly
    family = [p_matrix] if p_matrix is not None else linalg.p_family(irrep.degree, irrep.conductor)
    for idx, p in enumerate(family):
        got = conjugated_capelli(irrep, p)
        report.add("conjugation-invariance", f"{irrep.label}#P{idx}", got == reference)
    return report


# -- center bases ------------------------------------------------------------------


def choose_k(irrep: Irrep, k=None) -> Fraction:
    """An evaluation point avoiding the roots of u^(m-1), which are the
    nonnegative multiples 0, alpha, ..., (m-2)*alpha; the default -1 is
    always safe."""
    if k is None:
        return DEFAULT_K
    k = Fraction(k)
    m = irrep.degree
    for i in range(2, m + 1):
        if irrep.alpha * (m - i) - k == 0:
            raise BadK(f"u_{i}({k}) = 0 for irrep {irrep.label}")
    return k


def center_basis(irrep_set: IrrepSet, k_by_label=None):
    """Capelli elements evaluated at safe points: count must equal the
    class count and the class-sum coordinates must have full exact rank."""
    report = Report()
    group = irrep_set.group
    partition = conjugacy_classes(group)
    elements = []
    for irrep in irrep_set.irreps:
        k = choose_k(irrep, None if k_by_label is None else k_by_label.get(irrep.label))
        value = capelli_element(irrep).poly(Fraction(k))
        elements.append(value)
        report.add("basis-element-central", irrep.label, value.is_central())
    _rank_check(report, "capelli-basis", elements, partition)
    return elements, report


def character_basis(irrep_set: IrrepSet):
    report = Report()
    partition = conjugacy_classes(irrep_set.group)
    elements = [character_element(r) for r in irrep_set.irreps]
    for irrep, el in zip(irrep_set.irreps, elements):
        report.add("character-central", irrep.label, el.is_central())
    _rank_check(report, "character-basis", elements, partition)
    return elements, report


def _rank_check(report, name, elements, partition):
    conductor = math.lcm(*[e.conductor for e in elements])
    rows = [
        [c.promote(conductor) for c in e.coordinates_in_class_sums(partition)]
        for e in elements
    ]
    rk = linalg.rank(rows)
    report.add(
        name, "set",
        rk == partition.count and len(elements) == partition.count,
        f"{len(elements)} elements, rank {rk}, classes {partition.count}",
    )


# -- row and double determinant variants -----------------------------------------------


def positioned_double_det(irrep: Irrep, sigma, shift_constant) -> ZPoly:
    """Symmetrized determinant of E with the shift sequence
    (sigma(m), ..., sigma(1)) scaled by alpha attached to the factor
    positions, each diagonal hit also picking up -(z + c)."""
    em = E_matrix(irrep)
    m = irrep.degree
    one = AlgebraElement.identity(irrep.group, irrep.conductor)
    pattern = natural_sigma(m, sigma)
    matrix = [[ZPoly([e]) for e in row] for row in em]
    diagonal_terms = [
        ZPoly([(irrep.alpha * pattern[i] - Fraction(shift_constant)) * one, -one])
        for i in range(m)
    ]
    return positioned_doubledet(matrix, diagonal_terms)


def matrix_attached_double_det(irrep: Irrep, sigma, shift_constant) -> ZPoly:
    """The other parse of the same expression: add alpha * diag(sigma(m),
    ..., sigma(1)) - (z + c) I to E first, then take the plain double
    determinant.  Kept as a measurement; see verify_det_variants."""
    matrix = shifted_matrix(irrep, natural_sigma(irrep.degree, sigma), Fraction(shift_constant))
    return doubledet(matrix)


def verify_det_variants(irrep: Irrep, sigmas=None) -> Report:
    """Row determinant must reproduce the Capelli element exactly.

    The double determinant carries diagonal shifts, and there are two ways
    to read them: attached to factor positions (the reading under which
    the identity is a theorem; for column and row determinants the two
    readings coincide, which is what makes the notation ambiguous) or
    baked into the matrix before the double sum.  Both are evaluated
    against candidate shift constants 1 and alpha, per shift permutation,
    and the outcomes recorded: the positioned reading matches at alpha for
    every permutation and every irrep, the matrix reading only in degree 1.
    """
    report = Report()
    reference = capelli_element(irrep).poly
    m = irrep.degree

    row_variant = rowdet(shifted_matrix(irrep, natural_star(m)))
    report.add("rowdet-variant", irrep.label, row_variant == reference)

    candidates = [Fraction(1), Fraction(irrep.alpha)]
    labels = ["1", "alpha"]
    if sigmas is None:
        sigmas = list(permutations(range(1, m + 1)))
    for sigma in sigmas:
        positioned = [
            lbl
            for lbl, c in zip(labels, candidates)
            if positioned_double_det(irrep, sigma, c) == reference
        ]
        report.measure(
            "doubledet-positioned", f"{irrep.label}#sigma={sigma}",
            f"matching shifts: {positioned if positioned else 'none'}",
        )
        naive = [
            lbl
            for lbl, c in zip(labels, candidates)
            if matrix_attached_double_det(irrep, sigma, c) == reference
        ]
        report.measure(
            "doubledet-matrix", f"{irrep.label}#sigma={sigma}",
            f"matching shifts: {naive if naive else 'none'}",
        )
    return report


# -- rendering ----------------------------------------------------------------------


def render_capelli(poly: ZPoly) -> str:
    """Group the z-polynomial by group element: (z^2 - 5*z)*e + z*(123) + ..."""
    if not poly.coeffs:
        return "0"
    group = poly.coeffs[0].group
    parts = []
    for g in range(group.order):
        zcoeffs = [c.coeffs[g] for c in poly.coeffs]
        while zcoeffs and not zcoeffs[-1]:
            zcoeffs.pop()
        if not zcoeffs:
            continue
        terms = []
        for power, c in enumerate(zcoeffs):
            if not c:
                continue
            zpart = "" if power == 0 else ("z" if power == 1 else f"z^{power}")
            cs = str(c)
            if zpart and cs == "1":
                terms.append(zpart)
            elif zpart and cs == "-1":
                terms.append("-" + zpart)
            elif zpart:
                terms.append(f"{cs}*{zpart}" if " " not in cs else f"({cs})*{zpart}")
            else:
                terms.append(cs)
        body = " + ".join(terms).replace("+ -", "- ")
        name = group.element_names[g]
        if len(terms) == 1 and " " not in body:
            parts.append(f"{body}*{name}" if body not in ("1", "-1") else (name if body == "1" else f"-{name}"))
        else:
            parts.append(f"({body})*{name}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"
