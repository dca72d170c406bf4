"""Good Z-gradings of gl(m|n) and osp(m|2n)."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    NonIntegralGrading,
    NotOrthosymplectic,
    centralizer_dims,
    dim_formula,
    is_orthosymplectic,
    run_criterion,
)

__all__ = [
    "NonIntegralGrading",
    "NotOrthosymplectic",
    "centralizer_dims",
    "characteristic",
    "classify",
    "dim_formula",
    "is_good",
    "is_orthosymplectic",
    "pyramids",
    "run_criterion",
]


def _rationals(h):
    return [str(Fraction(x)) for x in h]


def classify(kind, p, q, oracle=False):
    """Report of all good gradings for the orbit (p|q), as a dict."""
    return json.loads(_core.classify_json(kind, list(p), list(q), oracle))


def is_good(kind, m, n, h, p, q):
    """Whether diag(h) is good for the pyramid nilpotent of (p|q)."""
    return _core.verify(kind, m, n, _rationals(h), list(p), list(q))["good"]


def characteristic(kind, m, n, h):
    """Base with nonnegative marks for the grading by diag(h)."""
    return json.loads(_core.characteristic_json(kind, m, n, _rationals(h)))


def pyramids(p, q):
    return [json.loads(s) for s in _core.pyramids_json(list(p), list(q))]
