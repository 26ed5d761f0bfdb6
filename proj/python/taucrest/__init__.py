"""Support tau-tilting modules over trivial extensions.

Thin wrapper over the C++ core: every call takes an input file (path or
text) and returns the parsed machine report.
"""

import json

from . import _taucrest
from ._taucrest import EnumError, InputError, REPORT_SCHEMA

__all__ = ["verify", "classify", "analyze", "examples", "builtin_input", "InputError", "EnumError", "REPORT_SCHEMA"]


def verify(source, *, text=False, field=None, max_dim=None, seed=None, parallel=False):
    return json.loads(_taucrest.verify(str(source), text, _field(field), max_dim, seed, parallel))


def classify(source, *, text=False, field=None, max_dim=None, seed=None, parallel=False):
    return json.loads(_taucrest.classify(str(source), text, _field(field), max_dim, seed, parallel))


def analyze(source, *, text=False, field=None):
    return json.loads(_taucrest.analyze(str(source), text, _field(field)))


def builtin_input(name):
    return _taucrest.builtin_input(name)


def examples(**kw):
    """Verification reports for the built-in configurations, by name."""
    return {n: verify(_taucrest.builtin_input(n), text=True, **kw) for n in _taucrest.builtin_names()}


def _field(f):
    return None if f is None else str(f)
