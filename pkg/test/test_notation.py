#!/usr/bin/env python3

# Cycle Notation and Group File Tests
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause

import textwrap

import pytest
from hypothesis import given

from kmc.config import Caps
from kmc.group_core import CapExceeded, Permutation
from kmc.notation import (
    NotationError, load_group_file, parse_cycles, parse_generators,
    parse_group_file,
)

import misc


def test_parse_cycles():
    assert parse_cycles("(1 2)(3 4)") == Permutation([2, 1, 4, 3])
    assert parse_cycles("( 1, 2 ,3 )", 4) == Permutation([2, 3, 1, 4])
    assert parse_cycles("()", 3) == Permutation.identity(3)


def test_parse_cycles_multiplies_left_to_right():
    assert parse_cycles("(1 2)(2 3)") == parse_cycles("(1 3 2)")


def test_parse_cycles_degree_defaults_to_largest_point():
    assert parse_cycles("(2 5)").degree == 5


@pytest.mark.parametrize("text", ["(1 2", "1 2)", "(1 a)", "(1 2)x", ""])
def test_parse_cycles_syntax_errors(text):
    with pytest.raises(NotationError):
        parse_cycles(text, 4)


def test_parse_cycles_point_errors():
    with pytest.raises(NotationError):
        parse_cycles("(1 5)", 4)
    with pytest.raises(NotationError):
        parse_cycles("(0 1)", 4)
    with pytest.raises(NotationError):
        parse_cycles("(1 2 1)", 4)


def test_parse_generators():
    gens = parse_generators("(1 2 3), (1 2); (3 4)", 4)
    assert [str(g) for g in gens] == ["(1 2 3)", "(1 2)", "(3 4)"]
    assert parse_generators("", 4) == []
    assert parse_generators("  ", 4) == []
    assert parse_generators("()", 4) == [Permutation.identity(4)]


@given(misc.permutations(7))
def test_str_parses_back(p):
    assert parse_cycles(str(p), p.degree) == p


GROUP_FILE = textwrap.dedent("""\
    # the dihedral group of the square
    degree 4
    gen (1 2 3 4)   # rotation
    gen (1 4)(2 3)
""")


def test_parse_group_file():
    g = parse_group_file(GROUP_FILE, name="square")
    assert g.degree == 4
    assert g.order == 8
    assert g.label() == "square"
    assert g == misc.group("D4")


def test_parse_group_file_without_generators():
    assert parse_group_file("degree 3\n").is_trivial()


def test_parse_group_file_errors():
    with pytest.raises(NotationError) as e:
        parse_group_file("degree 4\ngen (1 2\n")
    assert e.value.lineno == 2
    with pytest.raises(NotationError):
        parse_group_file("gen (1 2)\n")
    with pytest.raises(NotationError):
        parse_group_file("degree 3\ngen (1 4)\n")
    with pytest.raises(NotationError):
        parse_group_file("degree 0\n")


def test_parse_group_file_cap():
    with pytest.raises(CapExceeded):
        parse_group_file(GROUP_FILE, caps=Caps(max_order=4))


def test_load_group_file(tmp_path):
    path = tmp_path / "d4.grp"
    path.write_text(GROUP_FILE, encoding="utf-8")
    g = load_group_file(path)
    assert g.order == 8
    assert g.label() == "d4.grp"
