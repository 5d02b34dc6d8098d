import json as _json

from ._core import (
    DomainError,
    JumpSet,
    PrecisionError,
    Shift,
    character_family,
    default_oracle_precision,
    enumerate,
    exact_distribution,
    extension_constraints,
    extract,
    from_subset,
    haar_distribution,
    is_adequate,
    is_compatible,
    jumpset_from_json,
    ramification_polygon,
    simulate_counts,
    split_seed,
    tame_transform,
)
from . import _core


def field_jump_set(g, p, f=1, j=0, precision=None):
    """Jump set of the field cut out by x^n + a_{n-1} x^{n-1} + ... + a_0.

    g lists a_0 .. a_{n-1} in the polynomial file format."""
    if precision is None:
        precision = default_oracle_precision(p, j, len(g) * (p - 1) * p**j)
    return _core.field_jump_set(_json.dumps(g), p, f, j, precision)


def shape_jump_set(shape):
    return _core.shape_jump_set(_json.dumps(shape))


def realize(jumpset, f=1):
    return _json.loads(_core.realize(jumpset, f))
