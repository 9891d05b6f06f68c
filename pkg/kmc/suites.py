# Property Suites over the Group Catalog
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause

import itertools
import logging
import math
import random

from attrs import define, field

from . import catalog
from .config import DEFAULT_SEED
from .group_core import (
    CapExceeded, SubgroupPair, commutator_subgroup, generate, index,
    intersect, inverse, is_normal, normal_core, product_of_normals,
)
from .khm import LemmaOutcome, MapMode, bound_holds, construct, lemma_check
from .morphisms import (
    automorphism_group, compose_maps, is_characteristic,
    surjective_endomorphisms,
)
from .notation import parse_generators
from .verbal import (
    check_distributivity, enumerate_verbal_subgroup, identity_holds,
    identity_holds_by_enumeration, verbal_subgroup,
)
from .words import parse

SUITES = ["properties", "lemma", "theorem", "all"]

PROPERTY_GROUPS = catalog.THEOREM_MATRIX_GROUPS + ["V4"]

LEMMA_WORDS = ["[x1,x2]", "[[x1,x2],x3]", "[x1,[x2,x3]]", "[[x1,x2],[x3,x4]]"]

MIN_LEMMA_INSTANCES = 100
MIN_THEOREM_CASES = 30

# Tuple count above which the sampled enumeration oracles are skipped
ENUMERATION_LIMIT = 20_000

# Groups up to this order always get the full law-check enumeration, with
# max_tuples raised to ORACLE_TUPLES
ORACLE_ORDER = 24
ORACLE_TUPLES = 10**6

# (group, generators of N, word, expected |H|)
GOLDEN_CASES = [
    ("S3", "(1 2 3)", "[x1,x2]", 3),
    ("V4", "(1 2)(3 4)", "[x1,x2]", 1),
    ("D4", "(1 2 3 4)", "[x1,x2]", 4),
]


@define
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list = field(factory=list)

    def check(self, ok, description):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(description)

    @property
    def ok(self):
        return self.failed == 0


def _group_axioms(result, name, g):
    elems = g.element_set
    result.check(g.identity in elems, f"{name}: identity missing")
    result.check(all(x * s in elems for x in g.elements for s in g.generators),
                 f"{name}: not closed under composition")
    result.check(all(inverse(x) in elems for x in g.elements),
                 f"{name}: not closed under inverse")
    result.check(math.factorial(g.degree) % g.order == 0,
                 f"{name}: order does not divide degree!")


def _subgroup_facts(result, name, g, sample):
    for a, b in itertools.combinations_with_replacement(sample, 2):
        both = intersect(a, b)
        result.check(
            index(SubgroupPair(g, both))
            <= index(SubgroupPair(g, a)) * index(SubgroupPair(g, b)),
            f"{name}: |G:A∩B| > |G:A||G:B| for |A|={a.order}, |B|={b.order}")

        joined = product_of_normals([a, b], g)
        result.check(
            a.is_subgroup_of(joined) and b.is_subgroup_of(joined)
            and is_normal(SubgroupPair(g, joined)),
            f"{name}: join of |A|={a.order}, |B|={b.order} is wrong")

        ab = commutator_subgroup(a, b, g)
        ba = commutator_subgroup(b, a, g)
        result.check(ab == ba and ab.is_subgroup_of(both),
                     f"{name}: [A,B] != [B,A] or not inside A∩B")

    cyclic = {generate(g.degree, [x], caps=g.caps, ambient=g) for x in g.elements}
    for h in sorted(cyclic, key=lambda c: c.elements):
        pair = SubgroupPair(g, h)
        core = normal_core(pair)
        core_index = index(SubgroupPair(g, core))
        result.check(
            is_normal(SubgroupPair(g, core)) and core.is_subgroup_of(h)
            and math.factorial(index(pair)) % core_index == 0,
            f"{name}: normal core of {h.label()} breaks the divisibility fact")


def _verbal_properties(result, name, g, sample, rng):
    oracle = g
    if g.order <= ORACLE_ORDER:
        oracle = catalog.build(
            name, caps=g.caps.evolve(max_tuples=max(ORACLE_TUPLES,
                                                    g.caps.max_tuples)))
    for text in catalog.THEOREM_MATRIX_WORDS + ["nilpotent:1", "nilpotent:2"]:
        w = parse(text)
        t = w.weight

        if g.order <= ORACLE_ORDER or g.order ** t <= ENUMERATION_LIMIT:
            try:
                result.check(
                    identity_holds(w, g)
                    == identity_holds_by_enumeration(w, oracle),
                    f"{name}: identity check of {text} disagrees with "
                    "enumeration")
            except CapExceeded:
                result.skipped += 1
        else:
            result.skipped += 1

        for _ in range(4):
            args = [rng.choice(sample) for _ in range(t)]
            value = verbal_subgroup(w, args, g).value
            result.check(is_normal(SubgroupPair(g, value)),
                         f"{name}: {text} of a sampled tuple is not normal")
            if math.prod(a.order for a in args) <= ENUMERATION_LIMIT:
                result.check(value == enumerate_verbal_subgroup(w, args, g),
                             f"{name}: recursive {text} != enumerated {text}")
            else:
                result.skipped += 1

        for slot in range(1, t + 1):
            family = rng.sample(sample, min(3, len(sample)))
            fixed = [rng.choice(sample) for _ in range(t - 1)]
            result.check(check_distributivity(w, slot, family, fixed, g),
                         f"{name}: {text} does not distribute in slot {slot}")


def _map_properties(result, name, g, rng):
    auts = automorphism_group(g)
    result.check(set(surjective_endomorphisms(g)) == set(auts),
                 f"{name}: surjective endomorphisms != automorphisms")
    result.check(all(m(x * y) == m(x) * m(y)
                     for m in auts for x in g.elements for y in g.elements),
                 f"{name}: an automorphism breaks the homomorphism law")
    aut_set = set(auts)
    for _ in range(5):
        m1, m2 = rng.choice(auts), rng.choice(auts)
        result.check(compose_maps(m1, m2) in aut_set,
                     f"{name}: Aut is not closed under composition")


def run_properties(seed=DEFAULT_SEED, groups=None, log=None):
    log = log if log is not None else logging.getLogger(__name__)
    rng = random.Random(seed)
    result = SuiteResult("properties")

    for name in groups if groups is not None else PROPERTY_GROUPS:
        log.info(f"properties: {name}")
        g = catalog.build(name)
        sample = catalog.normal_subgroups_sample(g)
        _group_axioms(result, name, g)
        _subgroup_facts(result, name, g, sample)
        _verbal_properties(result, name, g, sample, rng)
        _map_properties(result, name, g, rng)
        result.check(identity_holds(parse("nilpotent:1"), g) == g.is_abelian(),
                     f"{name}: nilpotent:1 does not match commutativity")

    s4 = catalog.build("S4")
    result.check(not identity_holds(parse("solvable:2"), s4),
                 "solvable:2 should fail on S4")
    result.check(identity_holds(parse("solvable:3"), s4),
                 "solvable:3 should hold on S4")
    return result


def lemma_instances(groups=None):
    """(name, w, m, G, family) for singletons, adjacent pairs and the sample."""
    for name in groups if groups is not None else PROPERTY_GROUPS:
        g = catalog.build(name)
        sample = catalog.normal_subgroups_sample(g)
        families = [[n] for n in sample]
        families += [list(pair) for pair in zip(sample, sample[1:])]
        families.append(sample)
        for text in LEMMA_WORDS:
            w = parse(text)
            for m in range(1, w.weight + 1):
                for family in families:
                    yield name, w, m, g, family


def run_lemma(seed=DEFAULT_SEED, groups=None, log=None):
    log = log if log is not None else logging.getLogger(__name__)
    result = SuiteResult("lemma")

    for name, w, m, g, family in lemma_instances(groups):
        outcome = lemma_check(w, m, g, family)
        if outcome == LemmaOutcome.HYPOTHESIS_FAILED:
            result.skipped += 1
            continue
        result.check(outcome == LemmaOutcome.HOLDS,
                     f"{name}: lemma fails for m={m}, family orders "
                     f"{[n.order for n in family]}")

    checked = result.passed + result.failed
    log.info(f"lemma: {checked} instances checked")
    if groups is None:
        result.check(checked >= MIN_LEMMA_INSTANCES,
                     f"only {checked} lemma instances passed the hypothesis, "
                     f"expected {MIN_LEMMA_INSTANCES}")
    return result


def theorem_cases(groups=None, words=None):
    for name in groups if groups is not None else catalog.THEOREM_MATRIX_GROUPS:
        g = catalog.build(name)
        for text in words if words is not None else catalog.THEOREM_MATRIX_WORDS:
            w = parse(text)
            for n in catalog.normal_subgroups_sample(g):
                if identity_holds(w, n):
                    yield name, g, n, w


def _check_trace(result, label, g, w, trace):
    h = trace.H
    result.check(is_characteristic(g, h), f"{label}: H is not characteristic")
    result.check(identity_holds(w, h), f"{label}: H breaks the law")
    result.check(
        bound_holds(index(SubgroupPair(g, h)),
                    index(SubgroupPair(g, trace.core)), w.weight),
        f"{label}: index bound fails")


def run_theorem(seed=DEFAULT_SEED, groups=None, words=None, log=None):
    log = log if log is not None else logging.getLogger(__name__)
    result = SuiteResult("theorem")

    cases = 0
    for name, g, n, w in theorem_cases(groups, words):
        label = f"{name}, |N|={n.order}, w of weight {w.weight}"
        trace = construct(g, n, w, MapMode.AUTOMORPHISMS, seed=seed, log=log)
        other = construct(g, n, w, MapMode.SURJECTIVE_ENDOS, seed=seed, log=log)
        _check_trace(result, label, g, w, trace)
        result.check(trace.H == other.H, f"{label}: modes disagree")
        cases += 1

    log.info(f"theorem: {cases} cases")
    if groups is None and words is None:
        result.check(cases >= MIN_THEOREM_CASES,
                     f"only {cases} theorem cases, expected {MIN_THEOREM_CASES}")

        for name, gens, text, order in GOLDEN_CASES:
            g = catalog.build(name)
            n = generate(g.degree, parse_generators(gens, g.degree), ambient=g)
            trace = construct(g, n, parse(text), seed=seed, log=log)
            result.check(trace.H.order == order,
                         f"golden {name}: |H| = {trace.H.order}, expected {order}")

    return result


_RUNNERS = {
    "properties": run_properties,
    "lemma": run_lemma,
    "theorem": run_theorem,
}


def run_suite(name, seed=DEFAULT_SEED, log=None):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}, expected one of "
                         f"{', '.join(SUITES)}")
    names = list(_RUNNERS) if name == "all" else [name]
    return [_RUNNERS[n](seed=seed, log=log) for n in names]
