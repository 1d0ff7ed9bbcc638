"""Unitary matrix irreps with cyclotomic entries.

An irrep here is the full table g -> matrix(g).  Validation checks the
homomorphism property on every pair, unitarity on every element, and
irreducibility through the character inner product; complete sets are
additionally checked for the degree-square sum and pairwise character
orthogonality.  Nothing is ever repaired: invalid input is rejected.

E_matrix builds the matrix of algebra elements whose (i, j) entry is the
sum over g of matrix(g)[i][j] * g; the Schur product relations these
satisfy are what every later Capelli computation leans on.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import AlgebraElement
from .cyclo import Cyclo
from .groups import Group, exponent
from .reports import Report


@dataclass(frozen=True)
class Irrep:
    label: str
    group: Group
    degree: int
    matrices: tuple  # per element index, an m x m tuple of Cyclo

    @property
    def alpha(self) -> Fraction:
        """|G| / degree; a positive integer for genuine irreps."""
        return Fraction(self.group.order, self.degree)

    @property
    def conductor(self) -> int:
        return self.matrices[0][0][0].conductor

    def character(self, g: int) -> Cyclo:
        mat = self.matrices[g]
        tr = mat[0][0]
        for i in range(1, self.degree):
            tr = tr + mat[i][i]
        return tr

    def __repr__(self):
        return f"Irrep({self.group.name}/{self.label}, degree={self.degree})"


@dataclass(frozen=True)
class IrrepSet:
    group: Group
    irreps: tuple[Irrep, ...]

    @property
    def conductor(self) -> int:
        return self.irreps[0].conductor

    def by_label(self, label: str) -> Irrep:
        for irrep in self.irreps:
            if irrep.label == label:
                return irrep
        raise KeyError(f"no irrep {label!r} for {self.group.name}")


def make_irrep(label, group, degree, matrices, conductor=None) -> Irrep:
    """Normalize raw matrix data to one shared conductor (default the
    group exponent) without validating."""
    target = conductor if conductor is not None else exponent(group)
    fixed = []
    for mat in matrices:
        fixed.append(tuple(tuple(_as_cyclo(v, target) for v in row) for row in mat))
    return Irrep(str(label), group, int(degree), tuple(fixed))


def _as_cyclo(v, conductor):
    if isinstance(v, Cyclo):
        return v.promote(conductor)
    return Cyclo.rational(v, conductor)


def irrep_from_generators(group, label, gen_indices, gen_matrices, conductor=None) -> Irrep:
    """Extend generator images multiplicatively through the Cayley table.

    Homomorphism failures are not detected here; run validate afterwards.
    """
    target = conductor if conductor is not None else exponent(group)
    degree = len(gen_matrices[0])
    gens = [
        tuple(tuple(_as_cyclo(v, target) for v in row) for row in mat) for mat in gen_matrices
    ]
    mats: dict[int, tuple] = {group.identity: tuple(map(tuple, linalg.identity_matrix(degree, target)))}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for t, tm in zip(gen_indices, gens):
                h = group.mul(g, t)
                if h not in mats:
                    mats[h] = tuple(map(tuple, linalg.mat_mul(mats[g], tm)))
                    nxt.append(h)
        frontier = nxt
    if len(mats) != group.order:
        raise ValueError(
            f"generators reach only {len(mats)} of {group.order} elements of {group.name}"
        )
    return Irrep(str(label), group, degree, tuple(mats[g] for g in range(group.order)))


# -- validation ---------------------------------------------------------------


def validate(irrep: Irrep) -> Report:
    """Homomorphism on all pairs, unitarity everywhere, irreducibility."""
    report = Report()
    group = irrep.group
    mats = irrep.matrices
    n = group.order

    ident = linalg.identity_matrix(irrep.degree, irrep.conductor)
    report.add("identity-image", irrep.label, linalg.mat_eq(mats[group.identity], ident))

    witness = None
    for g in range(n):
        for h in range(n):
            if not linalg.mat_eq(linalg.mat_mul(mats[g], mats[h]), mats[group.mul(g, h)]):
                witness = (group.element_names[g], group.element_names[h])
                break
        if witness:
            break
    report.add("homomorphism", irrep.label, witness is None,
               f"fails at pair {witness}" if witness else "")

    witness = None
    for g in range(n):
        if not linalg.mat_eq(linalg.mat_mul(mats[g], linalg.mat_conj_transpose(mats[g])), ident):
            witness = group.element_names[g]
            break
    report.add("unitarity", irrep.label, witness is None,
               f"fails at {witness}" if witness else "")

    norm = character_inner_product(irrep, irrep)
    report.add("irreducibility", irrep.label, norm == 1, f"<chi,chi> = {norm}")
    return report


def character_inner_product(a: Irrep, b: Irrep) -> Cyclo:
    """(1/|G|) * sum over g of chi_a(g) * conj(chi_b(g))."""
    group = a.group
    target = math.lcm(a.conductor, b.conductor)
    acc = Cyclo.zero(target)
    for g in range(group.order):
        acc = acc + a.character(g).promote(target) * b.character(g).promote(target).conjugate()
    return Fraction(1, group.order) * acc


def equivalent(a: Irrep, b: Irrep) -> bool:
    # character equality decides equivalence for irreps
    target = math.lcm(a.conductor, b.conductor)
    return a.degree == b.degree and all(
        a.character(g).promote(target) == b.character(g).promote(target)
        for g in range(a.group.order)
    )


def validate_complete(irrep_set: IrrepSet) -> Report:
    """Degree-square count and pairwise character orthogonality."""
    report = Report()
    group = irrep_set.group
    total = sum(r.degree * r.degree for r in irrep_set.irreps)
    report.add("degree-squares", "set", total == group.order,
               f"sum of squared degrees {total} vs order {group.order}")
    for i, a in enumerate(irrep_set.irreps):
        for b in irrep_set.irreps[i + 1:]:
            ip = character_inner_product(a, b)
            report.add("orthogonality", f"{a.label}|{b.label}", ip == 0, f"<chi,chi'> = {ip}")
    return report


# -- the E matrices and their product relations --------------------------------


def E_matrix(irrep: Irrep) -> list[list[AlgebraElement]]:
    """(i, j) entry: the algebra element with coefficient matrix(g)[i][j] at g."""
    group = irrep.group
    m = irrep.degree
    return [
        [
            AlgebraElement(group, [irrep.matrices[g][i][j] for g in range(group.order)])
            for j in range(m)
        ]
        for i in range(m)
    ]


def verify_schur_products(irrep_set: IrrepSet) -> Report:
    """Product and commutator relations of the E entries.

    Within one irrep: E_ij * E_kl = alpha * delta_jk * E_il, and the
    commutator form it implies.  Across inequivalent irreps: all products
    and commutators vanish.
    """
    report = Report()
    conductor = math.lcm(*[r.conductor for r in irrep_set.irreps])
    ems = {
        r.label: [[e.promote(conductor) for e in row] for row in E_matrix(r)]
        for r in irrep_set.irreps
    }

    for irrep in irrep_set.irreps:
        m = irrep.degree
        alpha = irrep.alpha
        em = ems[irrep.label]
        products = {}
        ok = True
        detail = ""
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    for l in range(m):
                        prod = em[i][j] * em[k][l]
                        products[(i, j, k, l)] = prod
                        expected = alpha * em[i][l] if j == k else AlgebraElement.zero(
                            irrep.group, conductor)
                        if prod != expected:
                            ok = False
                            detail = f"E_{i+1}{j+1} E_{k+1}{l+1} != alpha*delta*E_{i+1}{l+1}"
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        report.add("schur-product", irrep.label, ok, detail)

        if ok:
            comm_ok = True
            detail = ""
            for (i, j, k, l), prod in products.items():
                lhs = prod - products[(k, l, i, j)]
                rhs = AlgebraElement.zero(irrep.group, conductor)
                if j == k:
                    rhs = rhs + alpha * em[i][l]
                if i == l:
                    rhs = rhs - alpha * em[k][j]
                if lhs != rhs:
                    comm_ok = False
                    detail = f"[E_{i+1}{j+1}, E_{k+1}{l+1}] mismatch"
                    break
            report.add("schur-commutator", irrep.label, comm_ok, detail)

    for a in irrep_set.irreps:
        for b in irrep_set.irreps:
            if a.label == b.label:
                continue
            ok = True
            detail = ""
            zero = AlgebraElement.zero(irrep_set.group, conductor)
            for i in range(a.degree):
                for j in range(a.degree):
                    for s in range(b.degree):
                        for t in range(b.degree):
                            if ems[a.label][i][j] * ems[b.label][s][t] != zero:
                                ok = False
                                detail = f"E^{a.label}_{i+1}{j+1} E^{b.label}_{s+1}{t+1} != 0"
                                break
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    break
            report.add("schur-cross", f"{a.label}|{b.label}", ok, detail)
    return report


def verify_E_basis(irrep_set: IrrepSet) -> Report:
    """All E entries together must span the group algebra: the |G| x |G|
    coordinate matrix has full exact rank."""
    report = Report()
    group = irrep_set.group
    conductor = math.lcm(*[r.conductor for r in irrep_set.irreps])
    rows = []
    for irrep in irrep_set.irreps:
        for i in range(irrep.degree):
            for j in range(irrep.degree):
                rows.append(
                    [irrep.matrices[g][i][j].promote(conductor) for g in range(group.order)]
                )
    rk = linalg.rank(rows) if rows else 0
    report.add("e-basis-rank", "set", rk == group.order and len(rows) == group.order,
               f"rank {rk} of {len(rows)} rows, order {group.order}")
    return report


# -- JSON interface -------------------------------------------------------------


def irrep_to_dict(irrep: Irrep) -> dict:
    return {
        "label": irrep.label,
        "group": irrep.group.name,
        "degree": irrep.degree,
        "conductor": irrep.conductor,
        "matrices": [
            [[v.to_dict() for v in row] for row in mat] for mat in irrep.matrices
        ],
    }


def irrep_from_dict(group: Group, data: dict) -> Irrep:
    if data["group"] != group.name:
        raise ValueError(f"irrep file is for group {data['group']!r}, not {group.name!r}")
    declared = int(data["conductor"])
    target = math.lcm(declared, exponent(group))
    degree = int(data["degree"])
    matrices = []
    for mat in data["matrices"]:
        if len(mat) != degree or any(len(row) != degree for row in mat):
            raise ValueError("matrix block is not degree x degree")
        matrices.append(
            tuple(tuple(Cyclo.from_dict(v).promote(target) for v in row) for row in mat)
        )
    if len(matrices) != group.order:
        raise ValueError(f"{len(matrices)} matrices for group of order {group.order}")
    return Irrep(str(data["label"]), group, degree, tuple(matrices))


def load_irrep(path, group: Group) -> Irrep:
    with open(path) as fh:
        return irrep_from_dict(group, json.load(fh))
