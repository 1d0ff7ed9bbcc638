"""Finite groups as explicit multiplication tables.

Elements are dense indices 0..n-1; the Cayley table is the whole group.
Construction always validates (identity, inverses, full associativity
scan, Latin-square rows and columns), so everything downstream may
assume it is holding an actual group.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass


class NotAGroup(ValueError):
    """Table fails a group axiom; carries a witness when there is one."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ClosureTooLarge(ValueError):
    """Generated group exceeded the configured order limit."""


DEFAULT_ORDER_LIMIT = 10000


@dataclass(frozen=True)
class Group:
    name: str
    order: int
    element_names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, h: int) -> int:
        """g * h * g^-1"""
        return self.table[self.table[g][h]][self.inverses[g]]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        return k

    def __repr__(self):
        return f"Group({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class ClassPartition:
    classes: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def class_of(self, g: int) -> int:
        for i, cls in enumerate(self.classes):
            if g in cls:
                return i
        raise ValueError(f"element {g} not in partition")


def build_group_from_table(name, element_names, table) -> Group:
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    element_names = tuple(str(x) for x in element_names)
    if len(element_names) != n:
        raise NotAGroup(f"{len(element_names)} names for {n} elements")
    rows = []
    for row in table:
        row = tuple(int(v) for v in row)
        if len(row) != n or any(v < 0 or v >= n for v in row):
            raise NotAGroup("table is not n x n over 0..n-1")
        rows.append(row)
    table = tuple(rows)

    all_idx = frozenset(range(n))
    for i in range(n):
        if frozenset(table[i]) != all_idx:
            raise NotAGroup("row is not a permutation", witness=i)
        if frozenset(table[j][i] for j in range(n)) != all_idx:
            raise NotAGroup("column is not a permutation", witness=i)

    identity = next(
        (e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))),
        None,
    )
    if identity is None:
        raise NotAGroup("no two-sided identity element")

    inverses = []
    for g in range(n):
        ginv = next((h for h in range(n) if table[g][h] == identity and table[h][g] == identity), None)
        if ginv is None:
            raise NotAGroup("missing inverse", witness=g)
        inverses.append(ginv)

    for a in range(n):
        ta = table[a]
        for b in range(n):
            tab = table[ta[b]]
            tb = table[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise NotAGroup("associativity fails", witness=(a, b, c))

    return Group(str(name), n, element_names, table, identity, tuple(inverses))


# -- permutation groups ---------------------------------------------------
#
# Permutations are given in one-line notation on points 1..degree; the
# product g*h acts by h first, then g, so matrix models with column
# vectors compose the same way.


def perm_from_cycles(degree: int, cycles) -> tuple[int, ...]:
    image = list(range(1, degree + 1))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            image[a - 1] = b
    return tuple(image)


def _compose(p, q):
    # (p*q)(x) = p(q(x)), 1-based one-line notation
    return tuple(p[q[x] - 1] for x in range(len(p)))


def cycle_name(perm) -> str:
    seen = set()
    parts = []
    for start in range(1, len(perm) + 1):
        if start in seen or perm[start - 1] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x - 1]
        parts.append("(" + "".join(str(v) for v in cyc) + ")")
    return "".join(parts) or "e"


def build_group_from_permutations(name, degree, generators, max_order=DEFAULT_ORDER_LIMIT) -> Group:
    """Close a generating set of permutations under composition.

    Elements are ordered by breadth-first discovery, identity first.
    """
    identity = tuple(range(1, degree + 1))
    gens = []
    for g in generators:
        g = tuple(int(v) for v in g)
        if sorted(g) != list(range(1, degree + 1)):
            raise ValueError(f"not a permutation of 1..{degree}: {g}")
        gens.append(g)

    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose(p, g)
                if q not in index:
                    if len(elements) >= max_order:
                        raise ClosureTooLarge(
                            f"closure of {name} exceeds order limit {max_order}"
                        )
                    index[q] = len(elements)
                    elements.append(q)
                    nxt.append(q)
        frontier = nxt

    n = len(elements)
    table = tuple(
        tuple(index[_compose(elements[a], elements[b])] for b in range(n)) for a in range(n)
    )
    names = tuple(cycle_name(p) for p in elements)
    return build_group_from_table(name, names, table)


# -- structure ------------------------------------------------------------


def conjugacy_classes(group: Group) -> ClassPartition:
    n = group.order
    assigned = [None] * n
    classes = []
    for g in range(n):
        if assigned[g] is not None:
            continue
        orbit = sorted({group.conj(h, g) for h in range(n)})
        idx = len(classes)
        for x in orbit:
            assigned[x] = idx
        classes.append(tuple(orbit))
    # identity class first, then by least member
    classes.sort(key=lambda cls: (group.identity not in cls, cls[0]))
    return ClassPartition(tuple(classes))


def exponent(group: Group) -> int:
    """Least N with g^N = identity for all g: the lcm of element orders."""
    result = 1
    for g in range(group.order):
        result = math.lcm(result, group.element_order(g))
    return result


# -- JSON interface --------------------------------------------------------


def group_to_dict(group: Group) -> dict:
    return {
        "name": group.name,
        "order": group.order,
        "elements": list(group.element_names),
        "table": [list(row) for row in group.table],
    }


def group_from_dict(data: dict) -> Group:
    group = build_group_from_table(data["name"], data["elements"], data["table"])
    if group.order != int(data["order"]):
        raise NotAGroup(f"declared order {data['order']} but table has {group.order}")
    return group


def load_group(path) -> Group:
    with open(path) as fh:
        return group_from_dict(json.load(fh))
