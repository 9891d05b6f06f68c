# Characteristic Subgroups Satisfying an Outer Commutator Law
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause
#
# Given G, a subgroup N satisfying the outer commutator law w = 1 of
# weight t, the construction runs t steps starting from G_0 = G, N_0 = N:
#
#     G_i = product of phi(N_{i-1}) over all maps phi of G_{i-1}
#     N_i = intersection of the images kept in the chain building G_i
#
# where the maps are the automorphisms (or surjective endomorphisms) of
# G_{i-1}. H = G_t is characteristic in G, satisfies w = 1, and
#
#     log2 |G : H| <= f^(t-1)(log2 |G : N|),  f(x) = x (x + 1).
#
# A non-normal N is first replaced by its normal core, and the bound is
# evaluated at the core's index.

import functools
import json
import logging
import math
import textwrap
from enum import Enum, IntEnum

from attrs import frozen, field

from .group_core import (
    NotASubgroup, NotNormal, SubgroupPair, exact_log2, index, intersect,
    is_normal, is_power_of_two, normal_core, product_of_normals,
)
from .morphisms import (
    GroupMap, apply_to_subgroup, automorphism_group, is_invariant,
    surjective_endomorphisms,
)
from .verbal import identity_holds, verbal_subgroup
from .words import render

# Relative tolerance for comparing real-valued logarithms
TOLERANCE = 1e-9


class HypothesisViolated(ValueError):
    pass


class MapMode(Enum):
    AUTOMORPHISMS = "automorphisms"
    SURJECTIVE_ENDOS = "surjective-endos"


class LemmaOutcome(IntEnum):
    HYPOTHESIS_FAILED = -1
    FAILS = 0
    HOLDS = 1


@frozen
class StepRecord:
    index: int
    group: object
    normal: object
    chain: tuple = field(converter=tuple, repr=False)
    p: int
    l: float
    lemma: LemmaOutcome = None


@frozen
class ConstructionTrace:
    group: object
    subgroup: object
    word: object
    mode: MapMode
    core: object
    replaced_by_core: bool
    l0: float
    steps: tuple = field(converter=tuple)
    H: object
    bound: float
    observed: float
    holds: bool
    seed: int = None
    note: str = None

    @property
    def index(self):
        return self.group.order // self.H.order

    @property
    def slack(self):
        return self.bound - self.observed

    def is_tight(self):
        return abs(self.slack) <= TOLERANCE * max(1.0, abs(self.bound))


def f(x):
    return x * (x + 1)


def bound(t, l0):
    if t < 1:
        raise ValueError(f"weight must be positive, got {t}")
    value = l0
    for _ in range(t - 1):
        value = f(value)
    return value


def bound_exact(t, l0):
    assert isinstance(l0, int), "exact bound needs an integer logarithm"
    return bound(t, l0)


def _log2_leq(x, y):
    return x <= y + TOLERANCE * max(1.0, abs(y))


def bound_holds(index_h, index_n, t):
    """log2 index_h <= f^(t-1)(log2 index_n), exactly for powers of two."""
    if is_power_of_two(index_h) and is_power_of_two(index_n):
        return exact_log2(index_h) <= bound_exact(t, exact_log2(index_n))
    return _log2_leq(math.log2(index_h), bound(t, math.log2(index_n)))


def maps_for(group, mode):
    if MapMode(mode) == MapMode.AUTOMORPHISMS:
        return automorphism_group(group)
    return surjective_endomorphisms(group)


def image_chain(group, normal, maps):
    """Product of all images phi(N), and the chain of maps realizing it.

    The chain starts with the identity and keeps a map only if its image
    enlarges the running product, so N ⊂ N phi1(N) ⊂ ... is strict.
    """
    if not is_normal(SubgroupPair.of(group, normal)):
        raise NotNormal(f"{normal.label()} is not normal in {group.label()}")

    running = normal.with_ambient(group)
    chain = [GroupMap.identity(group)]
    for m in maps:
        image = apply_to_subgroup(m, normal)
        if not image.is_subgroup_of(running):
            running = product_of_normals([running, image], group)
            chain.append(m)

    # Every link at least doubles the product
    assert 2 ** (len(chain) - 1) <= index(SubgroupPair(group, normal)), \
        "image chain is longer than log2 |G : N| + 1"
    return running, chain


def construction_step(prev_group, prev_normal, mode=MapMode.AUTOMORPHISMS,
                      top=None, step_index=1):
    """One step G_{i-1}, N_{i-1} -> G_i, N_i; indices are taken in `top`."""
    top = prev_group if top is None else top
    maps = maps_for(prev_group, mode)
    product, chain = image_chain(prev_group, prev_normal, maps)
    images = [apply_to_subgroup(m, prev_normal) for m in chain]
    normal = functools.reduce(intersect, images)

    product = product.with_ambient(top)
    normal = normal.with_ambient(top)

    prev_index = index(SubgroupPair(top, prev_normal))
    new_index = index(SubgroupPair(top, normal))
    p = len(chain) - 1
    l_prev = math.log2(prev_index)
    l = math.log2(new_index)

    assert 2 ** p <= prev_index, "p_i <= l_(i-1) violated"
    assert new_index <= prev_index ** (p + 1), \
        "|G : N_i| <= |G : N_(i-1)|^(p_i + 1) violated"
    assert _log2_leq(l, f(l_prev)), "l_i <= f(l_(i-1)) violated"
    assert index(SubgroupPair(top, product)) <= prev_index, \
        "|G : G_i| <= |G : N_(i-1)| violated"

    return StepRecord(step_index, product, normal, chain, p, l)


def lemma_check(w, m, group, family):
    """Check w(N^, .., N^, G^, .., G^) = 1 with m - 1 copies of N^.

    N^ and G^ are the intersection and product of the family. Returns
    HYPOTHESIS_FAILED if some N in the family has w(N x m, G x (t-m)) != 1.
    """
    t = w.weight
    if not 1 <= m <= t:
        raise ValueError(f"m = {m} outside 1..{t}")
    if not family:
        raise ValueError("the family of normal subgroups must not be empty")

    members = []
    for n in family:
        if not n.is_subgroup_of(group) or not is_normal(SubgroupPair(group, n)):
            raise NotNormal(f"{n.label()} is not normal in {group.label()}")
        members.append(n.with_ambient(group))

    for n in members:
        args = [n] * m + [group] * (t - m)
        if not verbal_subgroup(w, args, group).value.is_trivial():
            return LemmaOutcome.HYPOTHESIS_FAILED

    n_hat = functools.reduce(intersect, members)
    g_hat = product_of_normals(members, group)
    args = [n_hat] * (m - 1) + [g_hat] * (t - m + 1)
    if verbal_subgroup(w, args, group).value.is_trivial():
        return LemmaOutcome.HOLDS
    return LemmaOutcome.FAILS


def construct(group, subgroup, w, mode=MapMode.AUTOMORPHISMS, early_exit=False,
              verify_lemma=True, seed=None, log=None):
    log = log if log is not None else logging.getLogger(__name__)
    mode = MapMode(mode)
    t = w.weight

    if not subgroup.is_subgroup_of(group):
        raise NotASubgroup(f"{subgroup.label()} is not contained in "
                           f"{group.label()}")
    if not identity_holds(w, subgroup):
        raise HypothesisViolated(
            f"{subgroup.label()} does not satisfy {render(w)} = 1")

    pair = SubgroupPair(group, subgroup)
    note = None
    if is_normal(pair):
        core = subgroup.with_ambient(group)
    else:
        core = normal_core(pair)
        note = ("N is not normal: the construction and the bound use its "
                f"normal core, of index {index(SubgroupPair(group, core))}")
        log.warning(note)
    replaced = note is not None

    index_n = index(SubgroupPair(group, core))
    l0 = math.log2(index_n)
    log.info(f"constructing in {group.label()} (order {group.order}) from N "
             f"of index {index_n}, word {render(w)}, mode {mode.value}")

    steps = []
    prev_group, prev_normal = group, core
    for i in range(1, t + 1):
        step = construction_step(prev_group, prev_normal, mode, top=group,
                                 step_index=i)
        if verify_lemma:
            images = [apply_to_subgroup(m, prev_normal) for m in step.chain]
            outcome = lemma_check(w, t - i + 1, prev_group, images)
            assert outcome == LemmaOutcome.HOLDS, \
                f"step {i}: w(N_{i} x {t - i}, G_{i} x {i}) = 1 failed ({outcome.name})"
            step = StepRecord(step.index, step.group, step.normal, step.chain,
                              step.p, step.l, outcome)
        log.debug(f"step {i}: |G_{i}| = {step.group.order}, "
                  f"|N_{i}| = {step.normal.order}, p_{i} = {step.p}, "
                  f"l_{i} = {step.l:.6f}")
        steps.append(step)
        prev_group, prev_normal = step.group, step.normal.with_ambient(step.group)
        if early_exit and step.group == step.normal:
            log.debug(f"fixed point reached after step {i}")
            break

    h = prev_group
    top_maps = maps_for(group, mode)
    chars = all(is_invariant(s.group, top_maps) for s in steps)
    law = identity_holds(w, h)
    value = bound(t, l0)
    index_h = index(SubgroupPair(group, h))
    within = bound_holds(index_h, index_n, t)
    holds = chars and law and within

    assert chars, "some G_i is not invariant under the maps of G"
    assert law, f"H does not satisfy {render(w)} = 1"
    assert within, "log2 |G : H| exceeds the bound"

    trace = ConstructionTrace(
        group=group, subgroup=subgroup, word=w, mode=mode, core=core,
        replaced_by_core=replaced, l0=l0, steps=steps, H=h,
        bound=float(value), observed=math.log2(index_h), holds=holds,
        seed=seed, note=note)
    log.info(f"H has order {h.order}, log2 |G : H| = {trace.observed:.6f} "
             f"<= {trace.bound:.6f}")
    return trace


def _generators(group):
    return [str(g) for g in group.generators]


def trace_to_dict(trace):
    return {
        "group": trace.group.label(),
        "subgroup": {
            "order": trace.subgroup.order,
            "generators": _generators(trace.subgroup),
            "normal": not trace.replaced_by_core,
            "core_order": trace.core.order,
        },
        "word": render(trace.word),
        "mode": trace.mode.value,
        "steps": [
            {
                "i": s.index,
                "orderG_i": s.group.order,
                "orderN_i": s.normal.order,
                "p_i": s.p,
                "l_i": s.l,
            }
            for s in trace.steps
        ],
        "H": {
            "order": trace.H.order,
            "generators": _generators(trace.H),
        },
        "bound": trace.bound,
        "holds": trace.holds,
    }


def trace_to_json(trace):
    return json.dumps(trace_to_dict(trace), indent=2)


def trace_to_text(trace):
    output = textwrap.dedent(f"""\
        Group:\t\t{trace.group.label()} (order {trace.group.order})
        Subgroup N:\t{trace.subgroup.label()} (order {trace.subgroup.order})
        Word:\t\t{render(trace.word)} (weight {trace.word.weight})
        Mode:\t\t{trace.mode.value}
    """)
    if trace.replaced_by_core:
        output += f"Normal core:\t{trace.core.label()} (order {trace.core.order})\n"
    if trace.note is not None:
        output += f"Note:\t\t{trace.note}\n"
    if trace.seed is not None:
        output += f"Seed:\t\t{trace.seed}\n"

    output += f"\n  {'i':>3} {'|G_i|':>8} {'|N_i|':>8} {'p_i':>5} {'l_i':>12}\n"
    output += f"  {0:>3} {trace.group.order:>8} {trace.core.order:>8} " \
              f"{'':>5} {trace.l0:>12.6f}\n"
    for s in trace.steps:
        output += f"  {s.index:>3} {s.group.order:>8} {s.normal.order:>8} " \
                  f"{s.p:>5} {s.l:>12.6f}\n"

    tight = " (tight)" if trace.is_tight() else ""
    output += textwrap.dedent(f"""
        H:\t\t{trace.H.label()} (order {trace.H.order}, index {trace.index})
        log2|G:H|:\t{trace.observed:.6f}
        Bound:\t\t{trace.bound:.6f}{tight}
        Holds:\t\t{trace.holds}
    """)
    return output
