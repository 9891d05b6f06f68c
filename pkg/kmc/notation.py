# Cycle Notation and Group File Parsing
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause
#
# Group file format:
#
#     # comment
#     degree 4
#     gen (1 2 3 4)
#     gen (1 3)
#
# Cycles are whitespace-insensitive and may separate points by commas.
# A generator written as several cycles is their product, read left to
# right, so "(1 2)(2 3)" is the same permutation as "(1 3 2)".

import functools
from pathlib import Path

import pyparsing as pp

from .config import DEFAULT_CAPS
from .group_core import Permutation, compose, generate


class NotationError(ValueError):
    def __init__(self, msg, text=None, lineno=None, col=None):
        where = ""
        if lineno is not None:
            where = f" (line {lineno}, column {col})"
        super().__init__(msg + where)
        self.text = text
        self.lineno = lineno
        self.col = col


_point = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
_cycle = pp.Group(
    pp.Suppress("(")
    + pp.ZeroOrMore(_point + pp.Optional(pp.Suppress(",")))
    + pp.Suppress(")")
)
_permutation = pp.Group(pp.OneOrMore(_cycle))
_generators = pp.Optional(
    pp.delimited_list(_permutation, delim=pp.one_of(", ;").suppress())
)

_degree_line = pp.Suppress(pp.Keyword("degree")) + _point("degree")
_gen_line = pp.Suppress(pp.Keyword("gen")) + _permutation
_group_file = _degree_line + pp.Group(pp.ZeroOrMore(_gen_line))("gens")
_group_file.ignore(pp.python_style_comment)


def _run(grammar, text):
    try:
        return grammar.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise NotationError(f"cannot parse {text!r}: {e.msg}", text=text,
                            lineno=e.lineno, col=e.col) from None


def _to_permutation(cycles, degree, text):
    points = [p for c in cycles for p in c]
    if degree is None:
        degree = max(points, default=1)
    for p in points:
        if not 1 <= p <= degree:
            raise NotationError(f"point {p} outside 1..{degree} in {text!r}",
                                text=text)

    factors = []
    for c in cycles:
        if len(set(c)) != len(c):
            raise NotationError(f"cycle {tuple(c)} repeats a point in {text!r}",
                                text=text)
        factors.append(Permutation.from_cycles([list(c)], degree))
    return functools.reduce(compose, factors, Permutation.identity(degree))


def parse_cycles(text, degree=None):
    result = _run(_permutation, text)
    return _to_permutation(result[0], degree, text)


def parse_generators(text, degree):
    if text.strip() == "":
        return []
    result = _run(_generators, text)
    return [_to_permutation(cycles, degree, text) for cycles in result]


def parse_group_file(text, caps=DEFAULT_CAPS, name=None):
    result = _run(_group_file, text)
    degree = result["degree"]
    if degree < 1:
        raise NotationError(f"degree must be positive, got {degree}", text=text)
    gens = [_to_permutation(cycles, degree, text) for cycles in result["gens"]]
    return generate(degree, gens, caps=caps, name=name)


def load_group_file(path, caps=DEFAULT_CAPS):
    path = Path(path)
    return parse_group_file(path.read_text(encoding="utf-8"), caps=caps,
                            name=path.name)
