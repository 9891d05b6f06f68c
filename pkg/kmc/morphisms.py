# Automorphisms and Endomorphisms of Small Permutation Groups
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause
#
# Maps are found by brute force: fix a greedy generating set, try every
# tuple of candidate images (equal element order for automorphisms, dividing
# element order for endomorphisms) and extend each tuple along the Cayley
# graph, rejecting it on the first inconsistent edge. Results come out in
# the lexicographic order of the image tuples.

import functools
import itertools
import logging

from attrs import frozen, field

from .group_core import CapExceeded, NotASubgroup, closure, generate

log = logging.getLogger(__name__)


@frozen(eq=False)
class GroupMap:
    domain: object
    codomain: object
    table: dict = field(repr=False)
    is_homomorphism: bool = True
    is_injective: bool = False
    is_surjective: bool = False

    @classmethod
    def from_table(cls, domain, codomain, table, is_homomorphism):
        image = set(table.values())
        return cls(domain, codomain, table,
                   is_homomorphism=is_homomorphism,
                   is_injective=len(image) == domain.order,
                   is_surjective=len(image) == codomain.order)

    @classmethod
    def identity(cls, group):
        return cls.from_table(group, group, {x: x for x in group.elements}, True)

    @property
    def images(self):
        return tuple(self.table[x] for x in self.domain.elements)

    def is_automorphism(self):
        return (self.is_homomorphism and self.is_injective
                and self.is_surjective and self.domain == self.codomain)

    def key(self):
        return (self.domain.degree, self.domain.element_set, self.images)

    def __call__(self, x):
        return self.table[x]

    def __eq__(self, other):
        if not isinstance(other, GroupMap):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def compose_maps(first, second):
    """x -> second(first(x))."""
    assert first.codomain.is_subgroup_of(second.domain)
    table = {x: second(first(x)) for x in first.domain.elements}
    return GroupMap.from_table(first.domain, second.codomain, table,
                               first.is_homomorphism and second.is_homomorphism)


def inverse_map(m):
    assert m.is_injective and m.is_surjective, "only bijections invert"
    table = {y: x for x, y in m.table.items()}
    return GroupMap.from_table(m.codomain, m.domain, table, m.is_homomorphism)


def generating_set(group):
    """Greedy generating set, each pick maximizing the generated subgroup.

    Ties go to the earliest element in element order.
    """
    return _generating_set(group, group.caps)


@functools.lru_cache(maxsize=4096)
def _generating_set(group, caps):
    gens = []
    current = {group.identity}
    while len(current) < group.order:
        best, best_span = None, None
        for x in group.elements:
            if x in current:
                continue
            span = closure(group.degree, gens + [x], caps)
            if best_span is None or len(span) > len(best_span):
                best, best_span = x, span
        gens.append(best)
        current = best_span
    log.debug(f"generating set of {group.label()}: "
              f"{', '.join(str(g) for g in gens)}")
    return tuple(gens)


def _extend(group, gens, images, codomain):
    identity = group.identity
    table = {identity: codomain.identity}
    frontier = [identity]
    for x in frontier:
        for s, img in zip(gens, images):
            y = x * s
            value = table[x] * img
            known = table.get(y)
            if known is None:
                table[y] = value
                frontier.append(y)
            elif known != value:
                return None
    return table


def _search(group, accept_order, caps):
    if group.order > caps.max_aut:
        raise CapExceeded("max_aut", caps.max_aut, group.order)

    gens = generating_set(group)
    orders = {x: x.order() for x in group.elements}
    candidates = [
        [y for y in group.elements if accept_order(orders[y], orders[g])]
        for g in gens
    ]

    tried = 0
    for images in itertools.product(*candidates):
        tried += 1
        table = _extend(group, gens, images, group)
        if table is not None:
            yield GroupMap.from_table(group, group, table, True)
    log.debug(f"tried {tried} image tuples on {group.label()}")


@functools.lru_cache(maxsize=4096)
def _automorphisms(group, caps):
    return tuple(m for m in _search(group, lambda o, og: o == og, caps)
                 if m.is_injective)


@functools.lru_cache(maxsize=4096)
def _endomorphisms(group, caps):
    return tuple(_search(group, lambda o, og: og % o == 0, caps))


def automorphism_group(group):
    maps = list(_automorphisms(group, group.caps))
    log.debug(f"|Aut({group.label()})| = {len(maps)}")
    return maps


def endomorphisms(group):
    return list(_endomorphisms(group, group.caps))


def surjective_endomorphisms(group):
    maps = [m for m in _endomorphisms(group, group.caps) if m.is_surjective]
    assert set(maps) == set(_automorphisms(group, group.caps)), \
        "surjective endomorphisms of a finite group must be its automorphisms"
    return maps


def apply_to_subgroup(m, sub):
    assert m.is_homomorphism, "only homomorphisms map subgroups to subgroups"
    if not sub.is_subgroup_of(m.domain):
        raise NotASubgroup(f"{sub.label()} is not inside the domain of the map")
    codomain = m.codomain
    return generate(codomain.degree, [m(g) for g in sub.generators],
                    caps=codomain.caps, ambient=codomain)


def is_invariant(sub, maps):
    return all(apply_to_subgroup(m, sub) == sub for m in maps)


def is_characteristic(group, sub, maps=None):
    maps = automorphism_group(group) if maps is None else maps
    return is_invariant(sub, maps)
