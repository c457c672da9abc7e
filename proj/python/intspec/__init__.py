"""Intersection densities of transitive group actions.

Reports are returned as plain dicts; exact rationals are "num/den" strings.
"""

import json
from fractions import Fraction

from ._intspec import (
    GroupError,
    SpecError,
    reference_table,
    max_coclique,
    run_acceptance,
    solver_version,
)
from . import _intspec

__all__ = [
    "GroupError",
    "SpecError",
    "agl_density",
    "reference_table",
    "density",
    "eigs",
    "fraction",
    "max_coclique",
    "run_acceptance",
    "solver_version",
    "spectrum",
]


def fraction(text):
    """Parse a "num/den" string from a report."""
    return Fraction(text)


def density(group, subgroup, strategy="auto", budget=100_000_000, symmetry=True):
    return json.loads(_intspec.density_json(group, subgroup, strategy, budget, symmetry))


def spectrum(group, strategy="auto", budget=100_000_000, threads=1):
    return json.loads(_intspec.spectrum_json(group, strategy, budget, threads))


def eigs(group, weighting, subgroup=""):
    return json.loads(_intspec.eigs_json(group, weighting, subgroup))


def agl_density(n, q, i):
    return json.loads(_intspec.agl_density_json(n, q, i))
