"""Exact Milnor classes of singular hypersurfaces and their intersections."""

import json as _json

from ._core import (
    AmbientSpace,
    CycleClass,
    Hypersurface,
    InputError,
    MilnorError,
    intersection_milnor,
    list_examples,
    verify,
)
from ._core import run_example_json as _run_example_json
from ._core import run_scenario_json as _run_scenario_json

__all__ = [
    "AmbientSpace",
    "CycleClass",
    "Hypersurface",
    "InputError",
    "MilnorError",
    "intersection_milnor",
    "list_examples",
    "run_example",
    "run_scenario",
    "verify",
]


def run_scenario(scenario, formula="all"):
    """Run a scenario given as a dict or JSON text; returns the report dict."""
    text = scenario if isinstance(scenario, str) else _json.dumps(scenario)
    return _json.loads(_run_scenario_json(text, formula))


def run_example(name):
    return _json.loads(_run_example_json(name))
