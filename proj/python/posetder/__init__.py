"""Outer derivations, order-complex homology and conclusiveness of finite posets."""

import json as _json

from . import _core
from ._core import (
    InputError,
    PathLimitExceeded,
    Poset,
    PosetError,
    beat_points,
    core,
    der_pot_dims,
    euler_characteristic,
    fixture,
    has_outer_derivation,
    homology,
    poset_counts,
    rank_over,
    shape_stats,
    smith_divisors,
)

__all__ = [
    "InputError",
    "PathLimitExceeded",
    "Poset",
    "PosetError",
    "analyze",
    "beat_points",
    "classify",
    "core",
    "criteria",
    "der_pot_dims",
    "euler_characteristic",
    "fixture",
    "fixture_json",
    "has_outer_derivation",
    "homology",
    "poset_counts",
    "rank_over",
    "shape_stats",
    "smith_divisors",
    "sweep",
    "verify",
    "witness",
]


def analyze(poset, rings=None, witness=None):
    return _json.loads(_core.analyze(poset, rings, witness))


def classify(poset):
    return _json.loads(_core.classify(poset))


def criteria(poset):
    return _json.loads(_core.criteria(poset))


def fixture_json(name):
    return _json.loads(_core.fixture_json(name))


def verify(poset, function):
    if not isinstance(function, str):
        function = _json.dumps(function)
    return _json.loads(_core.verify(poset, function))


def witness(poset, prime):
    return _json.loads(_core.witness(poset, prime))["witness"]


def sweep(max_n, jobs=1):
    return _json.loads(_core.sweep(max_n, jobs))
