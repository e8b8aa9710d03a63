"""Graded Betti numbers of balanced simplicial complexes and their upper bounds.

Complexes are passed around as dicts in the same JSON layout the CLI reads:
{"n": ..., "coloring": [...] or None, "facets": [[...], ...]}.
"""

import json

from . import _core
from ._core import CapExceeded, EmptyPool, ParseError, bth_largest_deg2, bth_largest_sqfree_deg2

__all__ = [
    "CapExceeded",
    "EmptyPool",
    "ParseError",
    "bound",
    "bound_report",
    "bth_largest_deg2",
    "bth_largest_sqfree_deg2",
    "clique_multipartite",
    "cone_join",
    "conjecture_scan",
    "cross_polytope",
    "cross_stacked_closed",
    "graded_betti",
    "stacked_cross_polytopal",
    "stacked_sphere",
]


def _text(complex_):
    return complex_ if isinstance(complex_, str) else json.dumps(complex_)


def graded_betti(complex_, field="gf2", max_j=None, threads=0, cap=16):
    """Table as a list of strands: table[j][i] = beta_{i,i+j}."""
    return _core.graded_betti(_text(complex_), field, max_j, threads, cap)


def bound_report(complex_, assume, trust=False, field="gf2"):
    if not isinstance(assume, str):
        assume = ",".join(assume)
    return json.loads(_core.bound_report(_text(complex_), assume, trust, field))


def bound(name, n, d, i, j, class_sizes=()):
    return _core.bound(name, n, d, list(class_sizes), i, j)


def cross_stacked_closed(k, d):
    return _core.cross_stacked_closed(k, d)


def clique_multipartite(sizes):
    return json.loads(_core.clique_multipartite(list(sizes)))


def cross_polytope(d):
    return json.loads(_core.cross_polytope(d))


def stacked_cross_polytopal(d, k, plan="path", seed=0):
    return json.loads(_core.stacked_cross_polytopal(d, k, plan, seed))


def stacked_sphere(d, n):
    return json.loads(_core.stacked_sphere(d, n))


def cone_join(n, d):
    return json.loads(_core.cone_join(n, d))


def conjecture_scan(d, k, samples=8, seed=0):
    return json.loads(_core.conjecture_scan(d, k, samples, seed))
