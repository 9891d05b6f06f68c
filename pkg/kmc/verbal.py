# Verbal Subgroups of Outer Commutator Words
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause
#
# For normal subgroups H1..Ht of G, w(H1..Ht) is generated by the values
# w(h1..ht), hi in Hi. It is normal in G, and for w = [u, v] it equals
# [u(H1..Hr), v(Hr+1..Ht)]; verbal_subgroup() computes it that way.
# The tuple enumeration of the definition is kept as an oracle for tests.

import itertools
import logging
import math

from attrs import frozen, field

from .group_core import (
    CapExceeded, NotNormal, SubgroupPair, commutator_subgroup, is_normal,
    product_of_normals, subgroup_from_elements,
)
from .words import ArityMismatch, Leaf, evaluate, render

log = logging.getLogger(__name__)


@frozen
class VerbalResult:
    value: object
    word: object
    args: tuple = field(converter=tuple)


def _check_args(w, args, ambient):
    if len(args) != w.weight:
        raise ArityMismatch(f"{render(w)} has weight {w.weight}, "
                            f"got {len(args)} subgroups")
    for a in args:
        if not a.is_subgroup_of(ambient) \
                or not is_normal(SubgroupPair(ambient, a)):
            raise NotNormal(f"{a.label()} is not a normal subgroup of "
                            f"{ambient.label()}")


def verbal_subgroup(w, args, ambient):
    args = list(args)
    _check_args(w, args, ambient)

    def rec(node):
        if isinstance(node, Leaf):
            return args[node.index - 1]
        return commutator_subgroup(rec(node.left), rec(node.right), ambient)

    value = rec(w)
    log.debug(f"{render(w)}({', '.join(a.label() for a in args)}) "
              f"has order {value.order}")
    return VerbalResult(value, w, args)


def _tuples(w, args, caps):
    count = math.prod(a.order for a in args)
    if count > caps.max_tuples:
        raise CapExceeded("max_tuples", caps.max_tuples, count)
    return itertools.product(*(a.elements for a in args))


def enumerate_verbal_subgroup(w, args, ambient):
    """w(H1..Ht) straight from the definition, over every tuple."""
    args = list(args)
    _check_args(w, args, ambient)
    values = {evaluate(w, tup) for tup in _tuples(w, args, ambient.caps)}
    return subgroup_from_elements(ambient.degree, values, caps=ambient.caps,
                                  ambient=ambient)


def identity_holds(w, group):
    return verbal_subgroup(w, [group] * w.weight, group).value.is_trivial()


def identity_holds_by_enumeration(w, group):
    """Element-wise law check, stopping at the first non-trivial value."""
    caps = group.caps
    for n, tup in enumerate(itertools.product(group.elements, repeat=w.weight)):
        if n >= caps.max_tuples:
            raise CapExceeded("max_tuples", caps.max_tuples,
                              group.order ** w.weight)
        if not evaluate(w, tup).is_identity():
            return False
    return True


def check_distributivity(w, slot, family, fixed_args, ambient):
    """w(.., prod N, ..) == prod w(.., N, ..) with the product in `slot`.

    fixed_args fills the other t - 1 positions in order.
    """
    if not 1 <= slot <= w.weight:
        raise ValueError(f"slot {slot} outside 1..{w.weight}")
    fixed_args = list(fixed_args)
    if len(fixed_args) != w.weight - 1:
        raise ArityMismatch(f"{render(w)} needs {w.weight - 1} fixed "
                            f"subgroups, got {len(fixed_args)}")

    def with_slot(sub):
        return fixed_args[:slot - 1] + [sub] + fixed_args[slot - 1:]

    joined = product_of_normals(family, ambient)
    lhs = verbal_subgroup(w, with_slot(joined), ambient).value
    rhs = product_of_normals(
        [verbal_subgroup(w, with_slot(n), ambient).value for n in family],
        ambient)
    return lhs == rhs


def derived_series(group):
    series = [group]
    while True:
        nxt = commutator_subgroup(series[-1], series[-1], group)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(group):
    series = [group]
    while True:
        nxt = commutator_subgroup(series[-1], group, group)
        if nxt == series[-1]:
            return series
        series.append(nxt)
