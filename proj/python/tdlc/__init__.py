"""Exact entropy, scale and nub of endomorphisms of t.d.l.c. groups."""

import json
from fractions import Fraction

from . import _tdlc
from ._tdlc import Error, InvalidInput, InvariantViolation, catalog_ids, catalog_source, suite_names

__version__ = "0.1.0"


def parse_rational(text):
    num, den = _tdlc.parse_rational(text)
    return Fraction(int(num), int(den))


def report(source, computations=None, checks=True, probe=None, tidy_probe=None, resolution=None):
    """Report for a scenario given as a path, a catalog id, a JSON string or a dict."""
    if isinstance(source, dict):
        source = json.dumps(source)
    text = _tdlc.report_json(source, computations, checks, probe, tidy_probe, resolution)
    return json.loads(text)["reports"][0]


def entropy(source, **limits):
    """exp(h_top) as an int, or None when infinite."""
    e = report(source, ["entropy"], False, **limits)["entropy"]
    return None if e["infinite"] else int(e["alpha"])


def scale(source, **limits):
    return int(report(source, ["scale"], False, **limits)["scale"])


def nub(source, **limits):
    return report(source, ["nub"], False, **limits)["nub"]


def verify(suite="all", probe=None):
    return json.loads(_tdlc.verify_json(suite, probe))


__all__ = [
    "Error", "InvalidInput", "InvariantViolation", "catalog_ids", "catalog_source", "suite_names",
    "parse_rational", "report", "entropy", "scale", "nub", "verify",
]
