# Catalog of Small Test Groups
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause
#
# Names:
#
#     Cn   cyclic of order n on n points
#     Dn   dihedral of order 2n on n points (n >= 3)
#     Sn   symmetric group on n points
#     An   alternating group on n points
#     Q8   quaternion group, regular representation on 8 points
#     Vn   elementary abelian of order n = p^k, regular on n points
#     AxB  direct product, B acting on the points after those of A

import logging

import pyparsing as pp

from .config import DEFAULT_CAPS
from .group_core import (
    Permutation, SubgroupPair, generate, is_normal, normal_closure,
    product_of_normals,
)

log = logging.getLogger(__name__)


class UnknownGroup(ValueError):
    pass


CATALOG_ORDERS = {
    "C6": 6,
    "S3": 6,
    "D4": 8,
    "Q8": 8,
    "A4": 12,
    "S4": 24,
    "V4": 4,
    "C2xC2": 4,
    "D4xC2": 16,
    "C3xS3": 18,
}

THEOREM_MATRIX_GROUPS = [
    "C6", "S3", "D4", "Q8", "A4", "S4", "C2xC2", "D4xC2", "C3xS3",
]

THEOREM_MATRIX_WORDS = [
    "[x1,x2]",
    "[[x1,x2],x3]",
    "[[x1,x2],[x3,x4]]",
]


def names():
    return list(CATALOG_ORDERS)


def _cyclic(n):
    if n < 2:
        return n, []
    return n, [[tuple(range(1, n + 1))]]


def _dihedral(n):
    if n < 3:
        raise UnknownGroup(f"D{n}: dihedral groups start at D3")
    reflection = [(i, n + 1 - i) for i in range(1, n // 2 + 1)]
    return n, [[tuple(range(1, n + 1))], reflection]


def _symmetric(n):
    if n < 2:
        return n, []
    return n, [[(1, 2)], [tuple(range(1, n + 1))]]


def _alternating(n):
    return n, [[(1, 2, k)] for k in range(3, n + 1)]


def _quaternion(n):
    # Right multiplication by i and j on 1, -1, i, -i, j, -j, k, -k
    return 8, [
        [(1, 3, 2, 4), (5, 8, 6, 7)],
        [(1, 5, 2, 6), (3, 7, 4, 8)],
    ]


def _prime_power(n):
    for p in range(2, n + 1):
        if n % p == 0:
            k, m = 0, n
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return None


def _elementary_abelian(n):
    pk = _prime_power(n)
    if pk is None:
        raise UnknownGroup(f"V{n}: order must be a prime power")
    p, k = pk
    gens = []
    for j in range(k):
        step = p ** j
        images = []
        for x in range(n):
            digit = (x // step) % p
            images.append(x - digit * step + ((digit + 1) % p) * step + 1)
        gens.append(Permutation(images).cycles())
    return n, gens


_BUILDERS = {
    "C": _cyclic,
    "D": _dihedral,
    "S": _symmetric,
    "A": _alternating,
    "V": _elementary_abelian,
    "Q": _quaternion,
}

_base = pp.Combine(pp.one_of("C D S A V") + pp.Word(pp.nums)) \
    | pp.Literal("Q8")
_name = pp.delimited_list(_base, delim="x")


def _factors(name):
    try:
        return list(_name.parse_string(name, parse_all=True))
    except pp.ParseException:
        raise UnknownGroup(
            f"unknown group {name!r}: expected names like S4, D4, Q8, V4, "
            "C2xC2") from None


def build(name, caps=DEFAULT_CAPS):
    degree = 0
    gens = []
    for factor in _factors(name):
        n = int(factor[1:])
        if n < 1:
            raise UnknownGroup(f"{factor}: degree must be positive")
        d, cycle_lists = _BUILDERS[factor[0]](n)
        gens += [
            [tuple(p + degree for p in c) for c in cycles]
            for cycles in cycle_lists
        ]
        degree += d

    perms = [Permutation.from_cycles(cycles, degree) for cycles in gens]
    group = generate(degree, perms, caps=caps, name=name)

    expected = CATALOG_ORDERS.get(name)
    assert expected is None or group.order == expected, \
        f"{name} has order {group.order}, expected {expected}"
    return group


def _dedup(groups):
    unique = {}
    for g in groups:
        unique.setdefault(g, g)
    return sorted(unique.values(), key=lambda g: (g.order, g.elements))


def normal_subgroups_sample(group):
    """Trivial group, G, normal closures of cyclic subgroups, and joins.

    Joins are repeated until the family is closed under them. This is not a
    complete list of the normal subgroups of G.
    """
    closures = [group.trivial_subgroup(), group.with_ambient(group)]
    seen_cyclic = set()
    for x in group.elements:
        cyclic = generate(group.degree, [x], caps=group.caps, ambient=group)
        if cyclic in seen_cyclic:
            continue
        seen_cyclic.add(cyclic)
        closures.append(normal_closure(SubgroupPair(group, cyclic)))

    family = _dedup(closures)
    while True:
        joins = [product_of_normals([a, b], group)
                 for i, a in enumerate(family) for b in family[i + 1:]]
        grown = _dedup(family + joins)
        if len(grown) == len(family):
            break
        family = grown

    for n in family:
        assert is_normal(SubgroupPair(group, n)), \
            f"sampled {n.label()} is not normal in {group.label()}"
    log.debug(f"sampled {len(family)} normal subgroups of {group.label()}")
    return family
