"""Built-in groups and their unitary irreps.

Groups come from permutation generators (except Q8, whose table is
written out from the quaternion relations since it has no faithful
small-degree permutation model worth the trouble).  Irreps are given by
generator images only -- monomial or signed-permutation matrices over
roots of unity, so every entry is exactly representable at the group
exponent -- and extended through the Cayley table.  Degrees 1, 2 and 3
all occur, with both real and complex character fields.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclo import Cyclo
from .groups import Group, build_group_from_permutations, build_group_from_table, exponent, perm_from_cycles
from .irreps import IrrepSet, irrep_from_generators, make_irrep

CATALOG = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8",
           "V4", "S3", "D4", "Q8", "A4", "S4")


def catalog_names() -> tuple[str, ...]:
    return CATALOG


@lru_cache(maxsize=None)
def catalog_group(name: str) -> Group:
    if name not in CATALOG:
        raise KeyError(f"unknown catalog group {name!r}")
    if name == "C1":
        return build_group_from_permutations("C1", 1, [])
    if name.startswith("C"):
        n = int(name[1:])
        return build_group_from_permutations(name, n, [perm_from_cycles(n, [tuple(range(1, n + 1))])])
    if name == "V4":
        return build_group_from_permutations(
            "V4", 4, [perm_from_cycles(4, [(1, 2), (3, 4)]), perm_from_cycles(4, [(1, 3), (2, 4)])]
        )
    if name == "S3":
        return build_group_from_permutations(
            "S3", 3, [perm_from_cycles(3, [(1, 2, 3)]), perm_from_cycles(3, [(1, 2)])]
        )
    if name == "D4":
        return build_group_from_permutations(
            "D4", 4, [perm_from_cycles(4, [(1, 2, 3, 4)]), perm_from_cycles(4, [(1, 3)])]
        )
    if name == "Q8":
        return _quaternion_group()
    if name == "A4":
        return build_group_from_permutations(
            "A4", 4, [perm_from_cycles(4, [(1, 2), (3, 4)]), perm_from_cycles(4, [(2, 3, 4)])]
        )
    if name == "S4":
        return build_group_from_permutations(
            "S4", 4, [perm_from_cycles(4, [(1, 2)]), perm_from_cycles(4, [(1, 2, 4, 3)])]
        )
    raise KeyError(name)


def _quaternion_group() -> Group:
    # units +-1, +-i, +-j, +-k with i^2 = j^2 = k^2 = ijk = -1
    names = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    base = {"1": 0, "i": 2, "j": 4, "k": 6}
    prod = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    }

    def mul(a: int, b: int) -> int:
        sa, ua = (-1 if a % 2 else 1), names[a - a % 2][-1]
        sb, ub = (-1 if b % 2 else 1), names[b - b % 2][-1]
        sign, unit = prod[(ua, ub)]
        sign *= sa * sb
        return base[unit] + (0 if sign > 0 else 1)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return build_group_from_table("Q8", names, table)


@lru_cache(maxsize=None)
def catalog_irreps(name: str) -> IrrepSet:
    group = catalog_group(name)
    n = exponent(group)
    one = Cyclo.one(n)

    def zeta(power):
        return Cyclo.zeta(n, power)

    builders = []

    if name == "C1":
        return IrrepSet(group, (make_irrep("triv", group, 1, [[[one]]]),))

    if name.startswith("C") and name != "C1":
        order = group.order
        gen = _find_element(group, "(" + "".join(str(i) for i in range(1, order + 1)) + ")")
        irreps = []
        for k in range(order):
            label = "triv" if k == 0 else f"chi{k}"
            irreps.append(irrep_from_generators(group, label, [gen], [[[zeta(k * (n // order))]]]))
        return IrrepSet(group, tuple(irreps))

    if name == "V4":
        a = _find_element(group, "(12)(34)")
        b = _find_element(group, "(13)(24)")
        for label, sa, sb in (("triv", 1, 1), ("chi10", -1, 1), ("chi01", 1, -1), ("chi11", -1, -1)):
            builders.append(irrep_from_generators(group, label, [a, b], [[[sa * one]], [[sb * one]]]))
        return IrrepSet(group, tuple(builders))

    if name == "S3":
        r = _find_element(group, "(123)")
        s = _find_element(group, "(12)")
        w = zeta(n // 3)  # primitive cube root
        builders.append(irrep_from_generators(group, "triv", [r, s], [[[one]], [[one]]]))
        builders.append(irrep_from_generators(group, "sgn", [r, s], [[[one]], [[-1 * one]]]))
        builders.append(
            irrep_from_generators(
                group, "std", [r, s],
                [[[w, 0], [0, w * w]], [[0, one], [one, 0]]],
            )
        )
        return IrrepSet(group, tuple(builders))

    if name == "D4":
        r = _find_element(group, "(1234)")
        s = _find_element(group, "(13)")
        i = zeta(n // 4)
        for label, sr, ss in (("triv", 1, 1), ("sgn_s", 1, -1), ("sgn_r", -1, 1), ("sgn_rs", -1, -1)):
            builders.append(irrep_from_generators(group, label, [r, s], [[[sr * one]], [[ss * one]]]))
        builders.append(
            irrep_from_generators(
                group, "std", [r, s],
                [[[i, 0], [0, -1 * i]], [[0, one], [one, 0]]],
            )
        )
        return IrrepSet(group, tuple(builders))

    if name == "Q8":
        gi = 2  # index of i
        gj = 4  # index of j
        z4 = zeta(n // 4)
        for label, si, sj in (("triv", 1, 1), ("chi_i", 1, -1), ("chi_j", -1, 1), ("chi_k", -1, -1)):
            builders.append(irrep_from_generators(group, label, [gi, gj], [[[si * one]], [[sj * one]]]))
        builders.append(
            irrep_from_generators(
                group, "std", [gi, gj],
                [[[z4, 0], [0, -1 * z4]], [[0, one], [-1 * one, 0]]],
            )
        )
        return IrrepSet(group, tuple(builders))

    if name == "A4":
        a = _find_element(group, "(12)(34)")
        t = _find_element(group, "(234)")
        w = zeta(n // 3)
        builders.append(irrep_from_generators(group, "triv", [a, t], [[[one]], [[one]]]))
        builders.append(irrep_from_generators(group, "omega", [a, t], [[[one]], [[w]]]))
        builders.append(irrep_from_generators(group, "omega_sq", [a, t], [[[one]], [[w * w]]]))
        # rotations of the cube acting on its four space diagonals
        rot_a = [[1, 0, 0], [0, -1, 0], [0, 0, -1]]
        rot_t = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
        builders.append(irrep_from_generators(group, "std", [a, t], [rot_a, rot_t]))
        return IrrepSet(group, tuple(builders))

    if name == "S4":
        s = _find_element(group, "(12)")
        c = _find_element(group, "(1243)")
        w = zeta(n // 3)
        builders.append(irrep_from_generators(group, "triv", [s, c], [[[one]], [[one]]]))
        builders.append(irrep_from_generators(group, "sgn", [s, c], [[[-1 * one]], [[-1 * one]]]))
        # two-dimensional irrep through the quotient onto the pairings of {1,2,3,4}
        m_s = [[0, w * w], [w, 0]]
        m_c = [[0, one], [one, 0]]
        builders.append(irrep_from_generators(group, "dim2", [s, c], [m_s, m_c]))
        # cube rotations permuting the space diagonals: the standard irrep
        # twisted by sign; untwisting gives the standard one
        cube_s = [[-1, 0, 0], [0, 0, 1], [0, 1, 0]]
        cube_c = [[0, -1, 0], [1, 0, 0], [0, 0, 1]]
        builders.append(irrep_from_generators(group, "std_sgn", [s, c], [cube_s, cube_c]))
        std_s = [[-v for v in row] for row in cube_s]
        std_c = [[-v for v in row] for row in cube_c]
        builders.append(irrep_from_generators(group, "std", [s, c], [std_s, std_c]))
        return IrrepSet(group, tuple(builders))

    raise KeyError(name)


def _find_element(group: Group, name: str) -> int:
    for i, nm in enumerate(group.element_names):
        if nm == name:
            return i
    raise KeyError(f"element {name!r} not found in {group.name}")


def catalog_summary() -> list[dict]:
    from .groups import conjugacy_classes

    rows = []
    for name in CATALOG:
        group = catalog_group(name)
        irreps = catalog_irreps(name)
        rows.append(
            {
                "name": name,
                "order": group.order,
                "exponent": exponent(group),
                "classes": conjugacy_classes(group).count,
                "degrees": sorted(r.degree for r in irreps.irreps),
            }
        )
    return rows
