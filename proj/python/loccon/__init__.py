"""Local root-number and Selmer-parity comparison for dihedral towers."""

import json
import os
import sys

from . import _loccon
from ._loccon import (
    REPORT_SCHEMA_VERSION,
    SingularCurveError,
    local_reduction,
    quadratic_twist,
    run_cli,
    trace_of_frobenius,
)

__all__ = [
    "REPORT_SCHEMA_VERSION",
    "SingularCurveError",
    "analyze",
    "analyze_file",
    "local_reduction",
    "main",
    "make_config",
    "quadratic_twist",
    "run_cli",
    "trace_of_frobenius",
    "validate",
]


def make_config(curve, d, p, n=1, ramified_sites=(), dim_Sp_E_K=None, overrides=None, label=""):
    """Config dict in the CLI's JSON format.

    ramified_sites holds primes or {"l": prime, "which": "first"|"second"} dicts.
    """
    sites = [s if isinstance(s, dict) else {"l": s} for s in ramified_sites]
    cfg = {"curve": list(curve), "d": d, "p": p, "n": n, "ramified_sites": sites}
    if label:
        cfg["label"] = label
    if dim_Sp_E_K is not None:
        cfg["dim_Sp_E_K"] = dim_Sp_E_K
    if overrides:
        cfg["overrides"] = overrides
    return cfg


def _dumps(cfg):
    # integers beyond 64 bits go through as strings
    def fix(x):
        if isinstance(x, bool):
            return x
        if isinstance(x, int) and not -(2**63) <= x < 2**63:
            return str(x)
        if isinstance(x, list):
            return [fix(v) for v in x]
        if isinstance(x, dict):
            return {k: fix(v) for k, v in x.items()}
        return x

    return json.dumps(fix(cfg))


def analyze(curve, d, p, n=1, ramified_sites=(), dim_Sp_E_K=None, overrides=None, label=""):
    """Full report as a dict. Raises ValueError for malformed or invalid input."""
    cfg = make_config(curve, d, p, n, ramified_sites, dim_Sp_E_K, overrides, label)
    return json.loads(_loccon.analyze_config(_dumps(cfg)))


def analyze_file(path):
    with open(path, encoding="utf-8") as f:
        text = f.read()
    return json.loads(_loccon.analyze_config(text, os.path.dirname(os.path.abspath(path))))


def validate(curve, d, p, n=1, ramified_sites=(), overrides=None):
    """List of violation dicts (rule, message, citation); empty when valid."""
    cfg = make_config(curve, d, p, n, ramified_sites, overrides=overrides)
    return _loccon.validate_config(_dumps(cfg))


def main():
    code, out, err = run_cli(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
