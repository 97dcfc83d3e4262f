"""Exact tempiric multiplicity structure of rank-one groups.

Labels are tuples of ints, one entry per atom of K (or M). Norms come back
as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _tempiric
from ._tempiric import (
    DEFAULT_SEED,
    Group,
    TempiricError,
    builtin,
    builtin_names,
    load,
    load_file,
)

__all__ = [
    "DEFAULT_SEED",
    "Group",
    "TempiricError",
    "builtin",
    "builtin_names",
    "ck_matrix",
    "dimension_identity",
    "enumerate_ktypes",
    "figure",
    "ktype_dim",
    "load",
    "load_file",
    "restrict",
    "tempiric_table",
    "tensor_decompose",
    "verify",
    "vogan_norm",
]


def _group(g):
    return builtin(g) if isinstance(g, str) else g


def _bound(b):
    return str(Fraction(b))


def vogan_norm(group, tau):
    num, den = _tempiric.vogan_norm(_group(group), list(tau))
    return Fraction(int(num), int(den))


def enumerate_ktypes(group, bound):
    return [tuple(t) for t in _tempiric.enumerate_ktypes(_group(group), _bound(bound))]


def ktype_dim(group, tau):
    return _tempiric.ktype_dim(_group(group), list(tau))


def tensor_decompose(group, a, b):
    return {tuple(l): c for l, c in _tempiric.tensor_decompose(_group(group), list(a), list(b))}


def restrict(group, tau):
    return {tuple(l): c for l, c in _tempiric.restrict(_group(group), list(tau))}


def tempiric_table(group, bound):
    return json.loads(_tempiric.tempiric_table_json(_group(group), _bound(bound)))


def ck_matrix(group, bound):
    return json.loads(_tempiric.ck_matrix_json(_group(group), _bound(bound)))


def verify(group, bound, seed=DEFAULT_SEED):
    return json.loads(_tempiric.verify_json(_group(group), _bound(bound), seed))


def figure(group, grid_bound, format="txt"):
    """Minimal K-type diagram as text, DOT or SVG."""
    return _tempiric.figure(_group(group), grid_bound, format)


def dimension_identity(group, v1, v2):
    """(lhs, rhs) for K-representations given as {label: multiplicity}."""
    def terms(v):
        return [(list(l), c) for l, c in v.items()]
    return _tempiric.dimension_identity(_group(group), terms(v1), terms(v2))
