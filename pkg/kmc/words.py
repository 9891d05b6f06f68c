# Outer Commutator Words
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause
#
# Grammar:
#
#     word := "x" digits | "[" word "," word "]"
#           | "nilpotent:" digits | "solvable:" digits
#
# Every variable occurs exactly once and the leaves, read left to right,
# are x1, x2, ..., xt. "nilpotent:c" is the left-normed word of weight c+1
# and "solvable:d" the derived word of weight 2^d.
#
# Words nest at most MAX_DEPTH brackets deep and have at most MAX_WEIGHT
# variables.

import pyparsing as pp
from attrs import frozen, field

from .group_core import commutator


class WordSyntaxError(ValueError):
    def __init__(self, msg, text, pos):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class WordVariableError(ValueError):
    pass


class ArityMismatch(ValueError):
    pass


MAX_DEPTH = 64
MAX_WEIGHT = 256


def _positive(instance, attribute, value):
    if value < 1:
        raise ValueError(f"variable index must be positive, got {value}")


@frozen
class Leaf:
    index: int = field(validator=_positive)

    @property
    def weight(self):
        return 1

    @property
    def depth(self):
        return 0


@frozen
class Bracket:
    left: object
    right: object

    @property
    def weight(self):
        return self.left.weight + self.right.weight

    @property
    def depth(self):
        return 1 + max(self.left.depth, self.right.depth)


def _shift(w, offset):
    if isinstance(w, Leaf):
        return Leaf(w.index + offset)
    return Bracket(_shift(w.left, offset), _shift(w.right, offset))


def nilpotent(c):
    """[[...[x1, x2], ...], x_{c+1}], the law of nilpotency class c."""
    if not 0 <= c <= MAX_DEPTH:
        raise ValueError(f"nilpotency class must be in 0..{MAX_DEPTH}, got {c}")
    w = Leaf(1)
    for i in range(2, c + 2):
        w = Bracket(w, Leaf(i))
    return w


def solvable(d):
    """The derived word of weight 2^d, the law of derived length d."""
    if not 0 <= d < MAX_WEIGHT.bit_length():
        raise ValueError(f"derived length must be in "
                         f"0..{MAX_WEIGHT.bit_length() - 1}, got {d}")
    w = Leaf(1)
    for _ in range(d):
        w = Bracket(w, _shift(w, w.weight))
    return w


_SHORTHANDS = {
    "nilpotent": nilpotent,
    "solvable": solvable,
}

_var = pp.Regex(r"x[1-9][0-9]*").set_parse_action(lambda t: Leaf(int(t[0][1:])))
_word = pp.Forward()
_bracket = (pp.Suppress("[") + _word + pp.Suppress(",") + _word
            + pp.Suppress("]")).set_parse_action(lambda t: Bracket(t[0], t[1]))
_word <<= _var | _bracket


def _expand(s, loc, t):
    try:
        return _SHORTHANDS[t[0]](int(t[1]))
    except ValueError as e:
        raise pp.ParseFatalException(s, loc, str(e)) from None


_shorthand = (pp.one_of(list(_SHORTHANDS)) + pp.Suppress(":")
              + pp.Word(pp.nums)).set_parse_action(_expand)
_grammar = _shorthand | _word


def leaves(w):
    if isinstance(w, Leaf):
        return [w.index]
    return leaves(w.left) + leaves(w.right)


def weight(w):
    return w.weight


def split(w):
    """(u, v, r) for w = [u(x1..xr), v(x_{r+1}..xt)]."""
    assert isinstance(w, Bracket), "only a bracket can be split"
    return w.left, w.right, w.left.weight


def _check_variables(w, text):
    found = leaves(w)
    expected = list(range(1, len(found) + 1))
    if found == expected:
        return

    repeated = sorted({i for i in found if found.count(i) > 1})
    if repeated:
        raise WordVariableError(
            f"variable x{repeated[0]} occurs more than once in {text!r}")
    if sorted(found) != expected:
        missing = sorted(set(expected) - set(found))
        raise WordVariableError(
            f"variable x{missing[0]} is skipped in {text!r}, "
            f"variables must be x1..x{len(found)}")
    raise WordVariableError(
        f"variables of {text!r} must read x1..x{len(found)} left to right, "
        f"found {', '.join(f'x{i}' for i in found)}")


def _check_nesting(text):
    depth = 0
    for pos, ch in enumerate(text):
        if ch == "[":
            depth += 1
            if depth > MAX_DEPTH:
                raise WordSyntaxError(
                    f"brackets nest deeper than {MAX_DEPTH}", text, pos)
        elif ch == "]":
            depth -= 1


def parse(text):
    _check_nesting(text)
    try:
        w = _grammar.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise WordSyntaxError(e.msg, text, e.loc) from None
    if w.weight > MAX_WEIGHT:
        raise WordSyntaxError(
            f"weight {w.weight} exceeds {MAX_WEIGHT}", text, len(text))
    _check_variables(w, text)
    return w


def render(w):
    if isinstance(w, Leaf):
        return f"x{w.index}"
    return f"[{render(w.left)},{render(w.right)}]"


def evaluate(w, args):
    args = list(args)
    if len(args) != w.weight:
        raise ArityMismatch(
            f"{render(w)} has weight {w.weight}, got {len(args)} arguments")

    def ev(node):
        if isinstance(node, Leaf):
            return args[node.index - 1]
        return commutator(ev(node.left), ev(node.right))

    return ev(w)
