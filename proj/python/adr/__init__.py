"""Contracts and weakest pre-conditions for typed hypergraph rewriting.

Every function takes the text of an ``.adr`` document and the names of the
declarations to use. Structured results are returned as plain dicts whose
shape is described by the JSON schemas in ``schema/``.
"""

import json

from . import _adr
from ._adr import AdrError, FragmentError

__all__ = [
    "AdrError",
    "FragmentError",
    "parse",
    "format",
    "wp",
    "check",
    "apply",
    "recover",
    "equivalent",
    "count_graphs",
]


def parse(text):
    """Parse a document and return it as a dict."""
    return json.loads(_adr.parse_document(text))


def format(text):
    """Canonical text of a document."""
    return _adr.format_document(text)


def wp(text, production, formula, mode="literal"):
    """Weakest pre-condition of ``production`` for the named post-condition."""
    return json.loads(_adr.wp(text, production, formula, mode))


def check(text, asserted, theorem="soundness", max_nodes=3, max_edges=3):
    return json.loads(_adr.check(text, asserted, theorem, max_nodes, max_edges))


def apply(text, graph, production, at, seed=1):
    return json.loads(_adr.apply(text, graph, production, at, seed))


def recover(text, graph, style, max_depth=3, seed=1):
    """A plan dict, or None when no plan exists within ``max_depth``."""
    out = json.loads(_adr.recover(text, graph, style, max_depth, seed))
    return out if out["status"] == "found" else None


def equivalent(text, first, second, max_nodes=3, max_edges=3):
    return _adr.equivalent(text, first, second, max_nodes, max_edges)


def count_graphs(types, max_nodes, max_edges):
    """Number of graphs in the bounded universe over ``[(name, arity), ...]``."""
    return _adr.count_graphs(list(types), max_nodes, max_edges)
