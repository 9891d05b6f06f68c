#!/usr/bin/env python3

# Command Line Interface Tests
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause

import json
import textwrap

import pytest

from kmc.cli import (
    EXIT_HYPOTHESIS_FAILED, EXIT_INPUT_ERROR, EXIT_OK, RunConfig, cmd_run,
    cmd_verify, load_subgroup, main,
)
from kmc.config import DEFAULT_SEED
from kmc.group_core import NotASubgroup

import misc

GOLDEN = [
    ("S3", "(1 2 3)", "[x1,x2]", 3),
    ("C2xC2", "(1 2)(3 4)", "[x1,x2]", 1),
    ("D4", "(1 2 3 4)", "[x1,x2]", 4),
]


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_run_s3(capsys):
    status, out, _ = run(capsys, "run", "--group", "S3", "--subgroup",
                         "(1 2 3)", "--word", "[x1,x2]")
    assert status == EXIT_OK
    assert "order 3, index 2" in out
    assert "Bound:\t\t2.000000" in out


def test_run_klein_is_tight(capsys):
    status, out, _ = run(capsys, "run", "--group", "C2xC2", "--subgroup",
                         "(1 2)(3 4)", "--word", "[x1,x2]")
    assert status == EXIT_OK
    assert "order 1, index 4" in out
    assert "(tight)" in out


@pytest.mark.parametrize("group, gens, word, order", GOLDEN)
def test_run_json_is_byte_identical(capsys, group, gens, word, order):
    argv = ["run", "--group", group, "--subgroup", gens, "--word", word,
            "--format", "json"]
    status, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv, "--seed", "7")
    assert status == EXIT_OK
    assert first == second
    report = json.loads(first)
    assert report["H"]["order"] == order
    assert report["holds"] is True


def test_run_word_error(capsys):
    status, out, err = run(capsys, "run", "--group", "S3", "--subgroup",
                           "(1 2 3)", "--word", "[x2,x1]")
    assert status == EXIT_INPUT_ERROR
    assert out == ""
    assert err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["run", "--group", "X9", "--subgroup", "()", "--word", "[x1,x2]"],
    ["run", "--group", "S3", "--subgroup", "(1 2", "--word", "[x1,x2]"],
    ["run", "--group", "A4", "--subgroup", "(1 2)", "--word", "[x1,x2]"],
    ["run", "--group", "S3", "--subgroup", "(1 2 3)"],
    ["run", "--group", "S4", "--subgroup", "()", "--word", "[x1,x2]",
     "--max-order", "10"],
    ["run", "--group", "S4", "--subgroup", "()", "--word", "[x1,x2]",
     "--max-aut", "5"],
    ["run", "--group", "S3", "--subgroup", "()", "--word", "[x1,x2]",
     "--max-order", "0"],
    ["run", "--group", "C6", "--subgroup", "(1 2 3 4 5 6)", "--word",
     "nilpotent:1500"],
    ["verify", "nonsense"],
])
def test_input_errors(capsys, argv):
    status, _, err = run(capsys, *argv)
    assert status == EXIT_INPUT_ERROR
    assert "error:" in err


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == EXIT_INPUT_ERROR
    with pytest.raises(SystemExit) as e:
        main(["run", "--mode", "endomorphisms"])
    assert e.value.code == EXIT_INPUT_ERROR


def test_hypothesis_failure_exit_two(capsys):
    status, out, _ = run(capsys, "run", "--group", "S3", "--subgroup",
                         "(1 2), (1 2 3)", "--word", "[x1,x2]")
    assert status == EXIT_HYPOTHESIS_FAILED
    assert "hypothesis fails" in out


def test_run_surjective_endos_mode(capsys):
    status, out, _ = run(capsys, "run", "--group", "D4", "--subgroup",
                         "(1 3)(2 4)", "--word", "[[x1,x2],x3]", "--mode",
                         "surjective-endos", "--format", "json")
    assert status == EXIT_OK
    assert json.loads(out)["mode"] == "surjective-endos"


def test_run_non_normal_and_core_prefix(capsys):
    status, out, _ = run(capsys, "run", "--group", "S3", "--subgroup",
                         "(1 2)", "--word", "[x1,x2]", "--format", "json")
    assert status == EXIT_OK
    report = json.loads(out)
    assert report["subgroup"] == {"order": 2, "generators": ["(1 2)"],
                                  "normal": False, "core_order": 1}

    status, out, _ = run(capsys, "run", "--group", "S3", "--subgroup",
                         "core:(1 2)", "--word", "[x1,x2]", "--format", "json")
    assert status == EXIT_OK
    assert json.loads(out)["subgroup"]["order"] == 1


def test_run_early_exit(capsys):
    argv = ["run", "--group", "D4", "--subgroup", "(1 2 3 4)", "--word",
            "[[x1,x2],x3]", "--format", "json"]
    _, full, _ = run(capsys, *argv)
    _, short, _ = run(capsys, *argv, "--early-exit")
    assert len(json.loads(full)["steps"]) == 3
    assert len(json.loads(short)["steps"]) == 1


def test_run_group_file_and_output(capsys, tmp_path):
    group_file = tmp_path / "square.grp"
    group_file.write_text(textwrap.dedent("""\
        degree 4
        gen (1 2 3 4)
        gen (1 4)(2 3)
    """), encoding="utf-8")
    report = tmp_path / "report.json"
    status, out, _ = run(capsys, "run", "--group", str(group_file),
                         "--subgroup", "(1 2 3 4)", "--word", "[x1,x2]",
                         "--format", "json", "--output", str(report))
    assert status == EXIT_OK
    assert out == ""
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["group"] == "square.grp"
    assert data["H"]["order"] == 4


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("KMC_SEED", "1234")
    status, out, _ = run(capsys, "run", "--group", "S3", "--subgroup",
                         "(1 2 3)", "--word", "[x1,x2]")
    assert status == EXIT_OK
    assert "Seed:\t\t1234" in out
    _, out, _ = run(capsys, "run", "--group", "S3", "--subgroup",
                    "(1 2 3)", "--word", "[x1,x2]", "--seed", "5")
    assert "Seed:\t\t5" in out


def test_commands_default_to_the_fixed_seed():
    status, report = cmd_run(RunConfig("S3", "(1 2 3)", "[x1,x2]"))
    assert status == EXIT_OK
    assert f"Seed:\t\t{DEFAULT_SEED}" in report

    status, report = cmd_verify("lemma")
    assert status == EXIT_OK
    assert report.startswith(f"Seed: {DEFAULT_SEED}\n")


def test_load_subgroup():
    s3 = misc.group("S3")
    assert load_subgroup("", s3).is_trivial()
    assert load_subgroup("()", s3).is_trivial()
    assert load_subgroup("(1 2 3)", s3).order == 3
    assert load_subgroup(" core:(1 2)", s3).is_trivial()
    assert load_subgroup("core:(1 2 3)", s3).order == 3
    with pytest.raises(NotASubgroup):
        load_subgroup("(1 2)", misc.group("A4"))


def test_verify_properties(capsys):
    status, out, _ = run(capsys, "verify", "properties")
    assert status == EXIT_OK
    assert "properties" in out
    assert "FAIL" not in out


def test_verify_all(capsys):
    status, out, _ = run(capsys, "verify", "all")
    assert status == EXIT_OK
    for name in ["properties", "lemma", "theorem"]:
        assert name in out
    assert "FAIL" not in out
