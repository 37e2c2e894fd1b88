"""Exact relative Lie algebra cohomology and Hochschild-Serre spectral sequences.

Scalars cross the boundary as strings such as "1/2+3*i"; reports come back
as the same dicts the lie-coh CLI prints as JSON.
"""

import json

from ._liecoh import (
    Algebra,
    CapExceeded,
    LieCohError,
    ParseError,
    PreconditionFailed,
    Subalgebra,
    abelian,
    adjoint_cohomology,
    algebra_from_json,
    betti,
    bigraded,
    hs_isomorphism,
    kernel,
    preset,
    preset_names,
    rank,
    relative,
)
from . import _liecoh

__all__ = [
    "Algebra", "Subalgebra", "LieCohError", "ParseError", "PreconditionFailed", "CapExceeded",
    "preset", "preset_names", "abelian", "algebra_from_json", "rank", "kernel",
    "betti", "adjoint_cohomology", "bigraded", "hs_isomorphism", "relative",
    "check", "classify", "spectral", "theorem", "full_report", "proptest",
]


def check(algebra):
    return json.loads(_liecoh._check(algebra))


def classify(sub):
    return json.loads(_liecoh._classify(sub))


def spectral(sub, e2_p=()):
    return json.loads(_liecoh._spectral(sub, list(e2_p)))


def theorem(sub, p_max=2):
    return json.loads(_liecoh._theorem(sub, p_max))


def full_report(sub, p_max=2):
    return json.loads(_liecoh._full_report(sub, p_max))


def proptest(seed=1, cases=100):
    return json.loads(_liecoh._proptest(seed, cases))
