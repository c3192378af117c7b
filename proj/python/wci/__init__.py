"""Weak clean index computations for finite rings.

The native core does the work; this package adds a little ergonomics:
``build`` accepts dict specs as well as JSON text, and the report helpers
forward keyword arguments unchanged.
"""

from __future__ import annotations

import json as _json

from ._wci import (
    InputError,
    PreconditionError,
    ResourceError,
    Ring,
    SymbolicRing,
    UnsupportedOperationError,
    default_catalog,
    suite_names,
)
from . import _wci as _core

__all__ = [
    "InputError",
    "PreconditionError",
    "ResourceError",
    "Ring",
    "SymbolicRing",
    "UnsupportedOperationError",
    "build",
    "census",
    "default_catalog",
    "run_suite",
    "suite_names",
]

__version__ = "0.1.0"


def build(spec, *, size_cap=65536, verify_tables=True):
    """Build a ring from a spec (JSON text or a dict)."""
    if isinstance(spec, (dict, list)):
        spec = _json.dumps(spec)
    return _core.build(spec, size_cap, verify_tables)


def run_suite(suite="all", **kwargs):
    """Run one verification suite over the catalog and return the report."""
    return _core.run_suite(suite, **kwargs)


def census(**kwargs):
    """Compute the index census of the catalog."""
    return _core.census(**kwargs)
