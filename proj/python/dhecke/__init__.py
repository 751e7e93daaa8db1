"""Exact derived Hecke algebra computations."""

import json

from . import _dhecke
from ._dhecke import Error, InputError, RegimeError, invariant_dims, suite_names, validate_regime

__all__ = [
    "Error",
    "InputError",
    "RegimeError",
    "invariant_dims",
    "run_suite",
    "satake_multiply",
    "suite_names",
    "validate_regime",
]


def run_suite(name, **config):
    """Run a verification suite; returns the report dict."""
    if "manifold" in config and not isinstance(config["manifold"], str):
        config["manifold"] = json.dumps(config["manifold"])
    return json.loads(_dhecke.run_suite(name, **config))


def satake_multiply(a, b, group="PGL2", q=7, ell=3, r=1):
    """Convolve two toral elements given as {"terms": [...]} dicts."""
    return json.loads(_dhecke.satake_multiply(json.dumps(a), json.dumps(b), group, q, ell, r))
