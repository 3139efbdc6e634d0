"""Exact relative Brauer group computations for genus one curves of cyclic type.

Rationals cross the boundary as fractions.Fraction (ints are accepted);
curve points are (x, y) tuples, with None for the point at infinity.
"""

import json

from ._relbrauer import (
    RelbrError,
    add,
    cocycle_table,
    contains,
    discriminant,
    hilbert_symbol,
    mth_power_free_part,
    multiply,
    pairing,
    point_order,
    quaternion_is_split,
    torsion,
)
from ._relbrauer import report as _report


def report(command, curve, **options):
    """Run a CLI job and return the parsed JSON report."""
    return json.loads(_report(command, curve, **options))


__all__ = [
    "RelbrError",
    "add",
    "cocycle_table",
    "contains",
    "discriminant",
    "hilbert_symbol",
    "mth_power_free_part",
    "multiply",
    "pairing",
    "point_order",
    "quaternion_is_split",
    "report",
    "torsion",
]
