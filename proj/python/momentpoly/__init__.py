"""Exact fixed point models for Hamiltonian torus actions.

Thin wrappers over the compiled ``_core`` module, which speaks JSON strings.
Rationals stay exact "a/b" strings end to end; these helpers only decode the
envelope for callers that want plain dicts and lists.
"""

import json as _json

from ._core import (
    InvalidInput,
    IterationLimit,
    ModelInconsistency,
    ParseError,
    UnsupportedRank,
    example_model,
    render_svg,
)
from . import _core

__all__ = [
    "InvalidInput",
    "IterationLimit",
    "ModelInconsistency",
    "ParseError",
    "UnsupportedRank",
    "example_model",
    "render_svg",
    "validate",
    "betti",
    "deform",
    "hull",
    "cut",
    "weyl_hull",
    "reflective",
    "classify",
    "sample",
]


def validate(model_json):
    """Violation records; an empty list means the model passes."""
    return _json.loads(_core.validate_json(model_json))


def betti(model_json, xi=""):
    return _json.loads(_core.betti_json(model_json, xi))


def deform(model_json, xi=""):
    return _json.loads(_core.deform_json(model_json, xi))


def hull(model_json):
    return _json.loads(_core.hull_json(model_json))


def cut(model_json, group=""):
    return _json.loads(_core.cut_json(model_json, group))


def weyl_hull(group, points):
    """points: a list of vectors of rational strings, or a points-JSON string."""
    if not isinstance(points, str):
        points = _json.dumps({"points": points})
    return _json.loads(_core.weyl_hull_json(group, points))


def reflective(group, points):
    if not isinstance(points, str):
        points = _json.dumps({"points": points})
    return _json.loads(_core.reflective_json(group, points))


def classify(model_json, group="", delta_points=""):
    if not isinstance(delta_points, str):
        delta_points = _json.dumps({"points": delta_points})
    return _json.loads(_core.classify_json(model_json, group, delta_points))


def sample(family, t="1", s="1", count=10000, seed=1, tol=1e-9):
    return _json.loads(_core.sample_json(family, t, s, count, seed, tol))
