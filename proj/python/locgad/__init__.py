"""Minimal local generalized additive decompositions of forms.

Results are plain dicts with the same layout as the command-line JSON output.
"""

import json

from . import _locgad
from ._locgad import LocgadError, generic_local_rank

__all__ = [
    "LocgadError",
    "apolar_scheme",
    "catalecticant",
    "embed_check",
    "generic_local_rank",
    "inverse_matrix",
    "minimal_supports",
    "stratify",
]


def minimal_supports(form, vars=(), strategy="C", seed=0, charts="all", minor_batch=4, budget=0, timeout=0.0):
    return json.loads(
        _locgad.minimal_supports_json(form, list(vars), strategy, seed, charts, minor_batch, budget, timeout)
    )


def stratify(form, vars=(), seed=0, timeout=0.0):
    return json.loads(_locgad.stratify_json(form, list(vars), seed, timeout))


def apolar_scheme(form, support, vars=()):
    return json.loads(_locgad.apolar_scheme_json(form, support, list(vars)))


def inverse_matrix(form, chart=0, vars=()):
    return _locgad.inverse_matrix(form, list(vars), chart)


def catalecticant(form, degree, vars=()):
    return _locgad.catalecticant(form, list(vars), degree)


def embed_check(form, vars=()):
    return _locgad.embed_check(form, list(vars))
