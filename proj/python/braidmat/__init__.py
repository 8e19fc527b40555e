"""Crossing-matrix toolkit for braid projections.

Thin wrapper over the compiled module: matrices are lists of row lists,
projection words are integer lists, diagrams and masks are strings in the
same text forms the command-line tool uses. Realization results come back
as certificate dicts decoded from the canonical JSON form.
"""

import json as _json

from ._braidmat import (
    cn_matrix,
    count_t0,
    crossing_matrix,
    enumerate_t0,
    is_pure,
    is_t0,
    ou_matrix,
    permutation,
    realize_cn_json,
    realize_crossing_json,
    realize_ou_json,
    verify_certificate_json,
    verify_theorem,
    find_t_structure_json,
)

__all__ = [
    "cn_matrix",
    "count_t0",
    "crossing_matrix",
    "enumerate_t0",
    "find_t_structure",
    "is_pure",
    "is_t0",
    "ou_matrix",
    "permutation",
    "realize_cn",
    "realize_crossing",
    "realize_ou",
    "verify_certificate",
    "verify_theorem",
]

__version__ = "1.0.0"


def realize_cn(matrix, budget=0):
    """Realize an even symmetric T0 matrix as a pure projection word."""
    return _json.loads(realize_cn_json(matrix, budget))


def realize_ou(matrix, budget=0):
    """Realize a matrix of over-counts as a pure diagram."""
    return _json.loads(realize_ou_json(matrix, budget))


def realize_crossing(matrix, budget=0):
    """Realize a symmetric T0 matrix as an all-positive pure diagram."""
    return _json.loads(realize_crossing_json(matrix, budget))


def verify_certificate(certificate):
    """Re-check a certificate dict (or JSON string) against its target."""
    if isinstance(certificate, str):
        return verify_certificate_json(certificate)
    return verify_certificate_json(_json.dumps(certificate))


def find_t_structure(mask, n):
    """Return a T-structure graph dict for the mask, or None."""
    text = find_t_structure_json(mask, n)
    return None if text is None else _json.loads(text)
