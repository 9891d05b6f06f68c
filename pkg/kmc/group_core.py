# Finite Permutation Group Arithmetic
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause
#
# Conventions, used by every module of the package:
#
# - Points are 1..n, a permutation is stored as its image table.
# - Composition acts left to right: (p * q)(i) = q(p(i)).
# - The commutator is [a, b] = a^-1 b^-1 a b.
# - Conjugation is s^g = g^-1 s g, which relabels the cycles of s by g.
#
# Element sets are enumerated by naive closure and kept in lexicographic
# order of their image tables, so everything derived from them is
# reproducible run to run.

import math
import logging
import functools

from attrs import frozen, field

from .config import DEFAULT_CAPS

log = logging.getLogger(__name__)


class DegreeMismatch(ValueError):
    pass


class NotASubgroup(ValueError):
    pass


class AmbientMismatch(ValueError):
    pass


class NotNormal(ValueError):
    pass


class CapExceeded(RuntimeError):
    def __init__(self, cap, limit, size):
        super().__init__(
            f"{cap} exceeded: {size} > {limit} (desk-scale limit, "
            f"raise it with the matching --max-* option)")
        self.cap = cap
        self.limit = limit
        self.size = size


def _is_bijection(instance, attribute, images):
    if sorted(images) != list(range(1, len(images) + 1)):
        raise ValueError(f"{images} is not a permutation of 1..{len(images)}")


@frozen(order=True, cache_hash=True)
class Permutation:
    images: tuple = field(converter=tuple, validator=_is_bijection)

    @classmethod
    def identity(cls, degree):
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles, degree):
        images = list(range(1, degree + 1))
        seen = set()
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} outside 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a} appears in more than one cycle")
                seen.add(a)
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def is_identity(self):
        return all(img == i for i, img in enumerate(self.images, start=1))

    def cycles(self):
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        result = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.images[start - 1]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt - 1]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles()))

    def __call__(self, point):
        return self.images[point - 1]

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return inverse(self)

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def compose(p, q):
    """p then q."""
    if p.degree != q.degree:
        raise DegreeMismatch(
            f"cannot compose permutations of degree {p.degree} and {q.degree}")
    qi = q.images
    return Permutation(qi[i - 1] for i in p.images)


def inverse(p):
    images = [0] * p.degree
    for i, img in enumerate(p.images, start=1):
        images[img - 1] = i
    return Permutation(images)


def commutator(a, b):
    return inverse(a) * inverse(b) * a * b


def conjugate(s, g):
    return inverse(g) * s * g


def closure(degree, gens, caps):
    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    # The frontier list grows while it is scanned
    for x in frontier:
        for s in gens:
            y = x * s
            if y not in seen:
                if len(seen) >= caps.max_order:
                    raise CapExceeded("max_order", caps.max_order, len(seen) + 1)
                seen.add(y)
                frontier.append(y)
    return seen


class PermGroup:
    """A subgroup of Sym(degree) given by generators.

    The element set is materialized on first use. Filling it is idempotent,
    so concurrent readers at worst compute the same tuple twice.
    Groups compare equal when they have the same degree and element set.
    """

    def __init__(self, degree, generators=(), ambient=None, caps=DEFAULT_CAPS,
                 name=None, elements=None):
        assert degree >= 1
        self.degree = degree
        self.generators = tuple(generators)
        self.ambient = ambient
        self.caps = caps
        self.name = name
        self._elements = None
        self._element_set = None
        if elements is not None:
            self._fill(elements)

    def _fill(self, elements):
        ordered = tuple(sorted(elements))
        self._element_set = frozenset(ordered)
        self._elements = ordered

    @property
    def elements(self):
        if self._elements is None:
            self._fill(closure(self.degree, self.generators, self.caps))
        return self._elements

    @property
    def element_set(self):
        if self._element_set is None:
            self.elements
        return self._element_set

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return Permutation.identity(self.degree)

    def contains(self, p):
        return p.degree == self.degree and p in self.element_set

    def is_trivial(self):
        return self.order == 1

    def is_subgroup_of(self, other):
        return (self.degree == other.degree
                and self.element_set <= other.element_set)

    def is_abelian(self):
        return all(a * b == b * a
                   for i, a in enumerate(self.generators)
                   for b in self.generators[i + 1:])

    def trivial_subgroup(self):
        return PermGroup(self.degree, (), ambient=self, caps=self.caps,
                         elements=[self.identity])

    def with_ambient(self, parent):
        if not self.is_subgroup_of(parent):
            raise NotASubgroup("group is not contained in the new ambient group")
        return PermGroup(self.degree, self.generators, ambient=parent,
                         caps=self.caps, name=self.name, elements=self.elements)

    def label(self):
        if self.name is not None:
            return self.name
        if not self.generators:
            return "1"
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __contains__(self, p):
        return self.contains(p)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self.element_set == other.element_set

    def __hash__(self):
        return hash((self.degree, self.element_set))

    def __repr__(self):
        return (f"PermGroup(degree={self.degree}, order={self.order}, "
                f"generators=[{', '.join(str(g) for g in self.generators)}])")


@frozen
class SubgroupPair:
    ambient: PermGroup
    sub: PermGroup

    @classmethod
    def of(cls, ambient, sub):
        pair = cls(ambient, sub)
        _check_contained(pair)
        return pair


def _check_contained(pair):
    if not pair.sub.is_subgroup_of(pair.ambient):
        raise NotASubgroup(
            f"{pair.sub.label()} is not contained in {pair.ambient.label()}")


def generate(degree, gens, caps=DEFAULT_CAPS, ambient=None, name=None):
    gens = list(dict.fromkeys(gens))
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(f"generator {g} has degree {g.degree}, "
                                 f"expected {degree}")
        if ambient is not None and not ambient.contains(g):
            raise NotASubgroup(f"generator {g} is not in {ambient.label()}")
    group = PermGroup(degree, gens, ambient=ambient, caps=caps, name=name)
    group.elements
    log.debug(f"generated {group.label()} of order {group.order}")
    return group


def subgroup_from_elements(degree, candidates, caps=DEFAULT_CAPS, ambient=None):
    """Subgroup generated by candidates, with a small generating subset.

    Candidates are scanned in element order and kept only if they lie
    outside the subgroup generated so far.
    """
    gens = []
    current = {Permutation.identity(degree)}
    for c in sorted(set(candidates)):
        if c not in current:
            gens.append(c)
            current = closure(degree, gens, caps)
    return PermGroup(degree, gens, ambient=ambient, caps=caps, elements=current)


def index(pair):
    _check_contained(pair)
    return pair.ambient.order // pair.sub.order


def is_normal(pair):
    _check_contained(pair)
    sub = pair.sub
    return all(conjugate(h, g) in sub
               for g in pair.ambient.generators
               for h in sub.generators)


def conjugate_subgroup(pair, g):
    if not pair.ambient.contains(g):
        raise NotASubgroup(f"{g} is not in {pair.ambient.label()}")
    return generate(pair.sub.degree,
                    [conjugate(s, g) for s in pair.sub.generators],
                    caps=pair.sub.caps, ambient=pair.ambient)


def _common_ambient(a, b):
    if a.ambient is not None and b.ambient is not None and a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.label()} and {b.label()} live in "
                              "different ambient groups")
    return a.ambient if a.ambient is not None else b.ambient


def intersect(a, b):
    if a.degree != b.degree:
        raise DegreeMismatch(f"cannot intersect groups of degree "
                             f"{a.degree} and {b.degree}")
    ambient = _common_ambient(a, b)
    common = a.element_set & b.element_set
    return subgroup_from_elements(a.degree, common, caps=a.caps, ambient=ambient)


def product_of_normals(subs, ambient):
    for s in subs:
        if not is_normal(SubgroupPair(ambient, s)):
            raise NotNormal(f"{s.label()} is not normal in {ambient.label()}")
    gens = [g for s in subs for g in s.generators]
    return generate(ambient.degree, gens, caps=ambient.caps, ambient=ambient)


def normal_closure(pair):
    _check_contained(pair)
    ambient = pair.ambient
    gens = list(pair.sub.generators)
    while True:
        current = generate(ambient.degree, gens, caps=ambient.caps, ambient=ambient)
        conjugates = (conjugate(h, g)
                      for g in ambient.generators
                      for h in current.generators)
        missing = [c for c in conjugates if c not in current]
        if not missing:
            return current
        gens.extend(dict.fromkeys(missing))


def normal_core(pair):
    """Intersection of the conjugates g^-1 H g, one per right coset Hg."""
    _check_contained(pair)
    ambient, sub = pair.ambient, pair.sub
    core = set(sub.element_set)
    covered = set()
    for g in ambient.elements:
        if g in covered:
            continue
        covered.update(h * g for h in sub.elements)
        g_inv = inverse(g)
        core &= {g_inv * h * g for h in sub.elements}
    return subgroup_from_elements(ambient.degree, core, caps=ambient.caps,
                                  ambient=ambient)


def commutator_subgroup(a, b, ambient):
    for s in (a, b):
        if not is_normal(SubgroupPair(ambient, s)):
            raise NotNormal(f"{s.label()} is not normal in {ambient.label()}")
    return _commutator_subgroup(a, b, ambient, ambient.caps)


# Verbal subgroup recursion asks for the same brackets over and over
@functools.lru_cache(maxsize=4096)
def _commutator_subgroup(a, b, ambient, caps):
    pairs = a.order * b.order
    if pairs > caps.max_pairs:
        raise CapExceeded("max_pairs", caps.max_pairs, pairs)

    values = {commutator(x, y) for x in a.elements for y in b.elements}
    result = subgroup_from_elements(ambient.degree, values, caps=caps,
                                    ambient=ambient)
    assert is_normal(SubgroupPair(ambient, result)), \
        "commutator subgroup of normal subgroups must be normal"
    return result


def center(group):
    central = [z for z in group.elements
               if all(z * g == g * z for g in group.generators)]
    return subgroup_from_elements(group.degree, central, caps=group.caps,
                                  ambient=group)


def is_power_of_two(n):
    return n >= 1 and n & (n - 1) == 0


def exact_log2(n):
    assert is_power_of_two(n), f"{n} is not a power of two"
    return n.bit_length() - 1
