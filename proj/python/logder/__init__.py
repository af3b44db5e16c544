"""Logarithmic derivation modules, graded free resolutions and Hilbert series."""

import json

from ._logder import (
    LogderError,
    UsageError,
    betti,
    chi,
    derivations,
    hilbert_series,
    infer_weights,
    normalize,
    resolution_shifts,
    run_json,
    saito,
)


def run(command, polynomial="", **options):
    """Run a CLI command in-process and return the parsed JSON report."""
    return json.loads(run_json(command, polynomial, **options))


__all__ = [
    "LogderError",
    "UsageError",
    "betti",
    "chi",
    "derivations",
    "hilbert_series",
    "infer_weights",
    "normalize",
    "resolution_shifts",
    "run",
    "run_json",
    "saito",
]
