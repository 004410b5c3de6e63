"""Python bindings for the uslev core library.

Sets are built from the same JSON descriptions the command line reads.
Point clouds are 2-d arrays with one point per row. Report-producing
functions return plain dicts.
"""

import json

from . import _uslev
from ._uslev import (
    ExtScalar,
    InputError,
    RefusalError,
    SetExpr,
    UnsupportedError,
    eff,
    min_points,
    minkowski,
    order_unit_norm,
    phi,
)

__all__ = [
    "ExtScalar",
    "InputError",
    "RefusalError",
    "SetExpr",
    "UnsupportedError",
    "bound_scalarize",
    "characterize",
    "eff",
    "make_set",
    "min_points",
    "minkowski",
    "norm_characterize",
    "order_unit_norm",
    "phi",
    "reference_scalarize",
    "run_cli",
    "separate",
]


def make_set(description):
    """SetExpr from a dict or a JSON string."""
    if not isinstance(description, str):
        description = json.dumps(description)
    return SetExpr.from_json(description)


def characterize(points, set_expr, k, weak=False, seed=42):
    return json.loads(_uslev.characterize(points, set_expr, k, weak, seed))


def reference_scalarize(points, set_expr, ref, k, dom, seed=42):
    return json.loads(_uslev.reference_scalarize(points, set_expr, ref, k, dom, seed))


def bound_scalarize(points, set_expr, ref, orientation="below", seed=42):
    return json.loads(_uslev.bound_scalarize(points, set_expr, ref, orientation, seed))


def norm_characterize(points, set_expr, ref, seed=42):
    return json.loads(_uslev.norm_characterize(points, set_expr, ref, seed))


def separate(set_expr, k, points, seed=42):
    return json.loads(_uslev.separate(set_expr, k, points, seed))


def run_cli(args):
    """Runs a command line in process; returns (exit_code, stdout, stderr)."""
    return _uslev.run_cli([str(a) for a in args])
