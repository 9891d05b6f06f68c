# Command Line Interface
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause
#
# Usage:
#
#     python -m kmc.cli run --group S3 --subgroup "(1 2 3)" --word "[x1,x2]"
#     python -m kmc.cli verify all
#
# Exit status: 0 on success, 2 if N does not satisfy w = 1, 1 on any input
# error or exceeded cap.

import argparse
import logging
import sys
import textwrap
from pathlib import Path

from attrs import frozen

from . import catalog
from .config import DEFAULT_CAPS, DEFAULT_SEED, seed_from_env
from .group_core import CapExceeded, SubgroupPair, generate, normal_core
from .khm import HypothesisViolated, MapMode, construct, trace_to_json, \
    trace_to_text
from .notation import load_group_file, parse_generators
from .suites import SUITES, run_suite
from .words import parse

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_HYPOTHESIS_FAILED = 2

CORE_PREFIX = "core:"


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


@frozen
class RunConfig:
    group: str
    subgroup: str
    word: str
    mode: MapMode = MapMode.AUTOMORPHISMS
    format: str = "text"
    caps: object = DEFAULT_CAPS
    early_exit: bool = False
    seed: int = DEFAULT_SEED

    @classmethod
    def from_args(cls, args):
        if args.group is None or args.subgroup is None or args.word is None:
            raise UsageError("run requires --group, --subgroup and --word")
        caps = DEFAULT_CAPS.evolve(**{
            name: value for name, value in [
                ("max_order", args.max_order),
                ("max_aut", args.max_aut),
                ("max_pairs", args.max_pairs),
            ] if value is not None
        })
        return cls(args.group, args.subgroup, args.word, MapMode(args.mode),
                   args.format, caps, args.early_exit, args.seed)


def load_group(name_or_path, caps=DEFAULT_CAPS):
    """A catalog name, or the path of a group file if one exists there."""
    if Path(name_or_path).is_file():
        return load_group_file(name_or_path, caps=caps)
    return catalog.build(name_or_path, caps=caps)


def load_subgroup(gens, group):
    text = gens.strip()
    use_core = text.startswith(CORE_PREFIX)
    if use_core:
        text = text[len(CORE_PREFIX):]
    perms = parse_generators(text, group.degree)
    sub = generate(group.degree, perms, caps=group.caps, ambient=group)
    if use_core:
        sub = normal_core(SubgroupPair(group, sub))
    return sub


def cmd_run(config, log=None):
    """Returns the exit status and the report text."""
    log = log if log is not None else logging.getLogger(__name__)
    w = parse(config.word)
    group = load_group(config.group, caps=config.caps)
    sub = load_subgroup(config.subgroup, group)

    try:
        trace = construct(group, sub, w, config.mode,
                          early_exit=config.early_exit, seed=config.seed,
                          log=log)
    except HypothesisViolated as e:
        return EXIT_HYPOTHESIS_FAILED, f"hypothesis fails: {e}\n"

    if config.format == "json":
        return EXIT_OK, trace_to_json(trace) + "\n"
    return EXIT_OK, trace_to_text(trace)


def cmd_verify(scope, seed=DEFAULT_SEED, log=None):
    log = log if log is not None else logging.getLogger(__name__)
    if scope not in SUITES:
        raise UsageError(f"unknown suite {scope!r}, expected one of "
                         f"{', '.join(SUITES)}")
    results = run_suite(scope, seed=seed, log=log)

    output = textwrap.dedent(f"""\
        Seed: {seed}

          {'suite':<12} {'passed':>8} {'failed':>8} {'skipped':>8}
    """)
    for r in results:
        output += f"  {r.name:<12} {r.passed:>8} {r.failed:>8} {r.skipped:>8}\n"
    for r in results:
        for failure in r.failures:
            output += f"FAIL [{r.name}] {failure}\n"

    status = EXIT_OK if all(r.ok for r in results) else EXIT_INPUT_ERROR
    return status, output


def build_parser():
    parser = ArgumentParser(
        prog="kmc",
        description="Construct characteristic subgroups satisfying an outer "
                    "commutator law, and verify the property suites")

    parser.add_argument("command", choices=["run", "verify"])
    parser.add_argument("suite", nargs="?", default="all",
                        help=f"suite for verify: {', '.join(SUITES)}")
    parser.add_argument("--group", type=str,
                        help="catalog name (S4, D4xC2, ...) or group file")
    parser.add_argument("--subgroup", type=str,
                        help="generators of N in G, \"core:\" for its core")
    parser.add_argument("--word", type=str,
                        help="outer commutator word, e.g. [[x1,x2],x3]")
    parser.add_argument("--mode", choices=[m.value for m in MapMode],
                        default=MapMode.AUTOMORPHISMS.value)
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--max-order", type=int)
    parser.add_argument("--max-aut", type=int)
    parser.add_argument("--max-pairs", type=int)
    parser.add_argument("--early-exit", action="store_true")
    parser.add_argument("--seed", type=int,
                        help="overrides the KMC_SEED environment variable")
    parser.add_argument("--output", type=str,
                        help="write the report to this file")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s")
    log = logging.getLogger("kmc")

    if args.seed is None:
        args.seed = seed_from_env(log=log)

    try:
        if args.command == "run":
            status, report = cmd_run(RunConfig.from_args(args), log=log)
        elif args.command == "verify":
            status, report = cmd_verify(args.suite, seed=args.seed, log=log)
        else:
            raise NotImplementedError()
    except (UsageError, CapExceeded, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    if args.output is not None:
        Path(args.output).write_text(report, encoding="utf-8")
    else:
        sys.stdout.write(report)
    return status


if __name__ == "__main__":
    sys.exit(main())
