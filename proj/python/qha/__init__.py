"""Exact Hochschild cohomology for bound quiver algebras.

Thin wrapper over the C++ engine: inputs are presentation DSL strings,
results are the engine's JSON reports decoded into dicts.
"""

import json

from ._qha import (
    canonical,
    compute_json,
    dims_json,
    gamma_eta2_dsl,
    gamma_star_dsl,
    lambda_dsl,
    lambda_eta_dsl,
    oracle_json,
)

__all__ = [
    "canonical",
    "compute",
    "dims",
    "gamma_eta2_dsl",
    "gamma_star_dsl",
    "lambda_dsl",
    "lambda_eta_dsl",
    "oracle",
]


def compute(dsl, cap=0, cache_dir=""):
    """Full pipeline: dims, f2/f3 counts, hh0/hh1/hh2 and HH^2 representatives."""
    return json.loads(compute_json(dsl, cap, cache_dir))


def dims(dsl, cap=0):
    """Per-vertex and total dimensions of the algebra."""
    return json.loads(dims_json(dsl, cap))


def oracle(dsl, cap=0, bound=12):
    """Pipeline vs bar-complex dimensions; result carries a 'match' flag."""
    return json.loads(oracle_json(dsl, cap, bound))
