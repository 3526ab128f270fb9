"""Exact catalecticant, apolarity and binary-decomposition tools.

Forms are dicts in the form-file layout::

    {"n": 2, "d": 3, "basis": "monomial",
     "terms": [{"exp": [3, 0], "coeff": "1"}, {"exp": [0, 3], "coeff": "1"}]}

Rational values come back as strings ("p/q") so nothing is rounded.
"""

import json
from fractions import Fraction

from . import _core
from ._core import CatkitError

__all__ = [
    "CatkitError",
    "form",
    "catalecticant",
    "cat_rank",
    "hilbert_sequence",
    "member",
    "classify_ps2",
    "decompose",
    "tangent_dim_vr",
    "tangent_dim_gor",
    "singular_test",
    "minors",
    "sample",
    "t2s_sequence",
    "dim_vr",
    "en_alternating_sum",
    "suite_names",
    "run_suite",
]


def _text(f):
    return f if isinstance(f, str) else json.dumps(f)


def form(n, d, terms, basis="monomial"):
    """Builds a form dict from {exponent tuple: coefficient}."""
    return {
        "n": n,
        "d": d,
        "basis": basis,
        "terms": [{"exp": list(e), "coeff": str(Fraction(c))} for e, c in terms.items()],
    }


def normalize(f, basis="divided"):
    return json.loads(_core.normalize(_text(f), basis))


def catalecticant(f, i):
    return [[Fraction(x) for x in row] for row in _core.catalecticant(_text(f), i)]


def cat_rank(f, i):
    return _core.cat_rank(_text(f), i)


def hilbert_sequence(f):
    return list(_core.hilbert_sequence(_text(f)))


def member(f, family, param=0):
    """family: "vr" (param r), "ps2", or "gor" (param s)."""
    return _core.member(_text(f), family, param)


def classify_ps2(f):
    return json.loads(_core.classify_ps2(_text(f)))


def decompose(f):
    return json.loads(_core.decompose(_text(f)))


def tangent_dim_vr(f, i, r):
    return _core.tangent_dim_vr(_text(f), i, r)


def tangent_dim_gor(f):
    return _core.tangent_dim_gor(_text(f))


def singular_test(f, family, param=0):
    return json.loads(_core.singular_test(_text(f), family, param))


def minors(n, d, i, size):
    """Generator export text for the size x size minors of Cat(i, d-i; n)."""
    return _core.minors(n, d, i, size)


def sample(family, n, d, seed=1, bound=10):
    return json.loads(_core.sample(family, n, d, seed, bound))


def t2s_sequence(d, s):
    return list(_core.t2s_sequence(d, s))


def dim_vr(r, d, n):
    return int(_core.dim_vr(r, d, n))


def en_alternating_sum(d, s):
    return int(_core.en_alternating_sum(d, s))


def suite_names():
    return list(_core.suite_names())


def run_suite(name, trials=0, seed=7):
    return json.loads(_core.run_suite(name, trials, seed))
