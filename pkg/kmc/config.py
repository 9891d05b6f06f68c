# Desk-Scale Limits and Environment Configuration
#
# This file is part of kmc, a toolkit constructing characteristic subgroups
# of finite permutation groups that satisfy outer commutator laws.
#
# This file is provided under the terms and conditions of the BSD 3-Clause
# license, accessible under https://opensource.org/licenses/BSD-3-Clause.
#
# SPDX-License-Identifier: BSD-3-Clause

import os
import logging

import attr
from attrs import frozen, field

SEED_ENV_VAR = "KMC_SEED"
DEFAULT_SEED = 42


def _positive(instance, attribute, value):
    if value < 1:
        raise ValueError(f"{attribute.name} must be positive, got {value}")


@frozen
class Caps:
    """Limits keeping every computation exact and total at desk scale."""

    # Largest group that generate() will materialize
    max_order: int = field(default=10_000, validator=_positive)
    # Largest group whose automorphisms / endomorphisms are enumerated
    max_aut: int = field(default=512, validator=_positive)
    # Largest |A|*|B| for commutator subgroup pair enumeration
    max_pairs: int = field(default=10**6, validator=_positive)
    # Largest tuple count for the verbal enumeration oracles
    max_tuples: int = field(default=10**5, validator=_positive)

    def evolve(self, **changes):
        return attr.evolve(self, **changes)


DEFAULT_CAPS = Caps()


def seed_from_env(environ=None, log=None):
    """Read KMC_SEED. Samplers are deterministic, the seed is only recorded."""
    log = log if log is not None else logging.getLogger(__name__)
    environ = os.environ if environ is None else environ

    raw = environ.get(SEED_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_SEED

    try:
        return int(raw, 0)
    except ValueError:
        log.warning(f"Ignoring non-integer {SEED_ENV_VAR}={raw!r}, "
                    f"using {DEFAULT_SEED}")
        return DEFAULT_SEED
