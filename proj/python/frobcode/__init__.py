"""Exact homogeneous-weight analysis of linear codes over finite Frobenius rings."""

import json
from fractions import Fraction

from ._frobcode import (
    FrobcodeError,
    __version__,
    canonical_ring,
    run_cli,
)
from . import _frobcode as _core

__all__ = [
    "FrobcodeError",
    "__version__",
    "bounds",
    "canonical_ring",
    "family",
    "parameters",
    "report",
    "run_cli",
    "weights",
]


def weights(ring, gamma="1"):
    """Weight table as {label: Fraction}, in element order."""
    return {label: Fraction(value) for label, value in _core.weights(ring, str(gamma))}


def parameters(ring, rows, gamma="1"):
    return json.loads(_core.parameters_json(ring, _rows(rows), str(gamma)))


def bounds(ring, rows, gamma="1"):
    return json.loads(_core.bounds_json(ring, _rows(rows), str(gamma)))


def report(ring, rows, gamma="1", chain=True):
    return json.loads(_core.report_json(ring, _rows(rows), str(gamma), chain))


def family(name, ring="Z4", m=1):
    return json.loads(_core.family_json(name, ring, m))


def _rows(rows):
    return [[str(x) for x in row] for row in rows]
