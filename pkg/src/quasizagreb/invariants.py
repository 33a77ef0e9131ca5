"""First and second Zagreb indices, in exact integer arithmetic."""

from __future__ import annotations

from typing import NamedTuple

from quasizagreb.graph import Graph, _bits


class IndexPair(NamedTuple):
    m1: int
    m2: int


def m1(g: Graph) -> int:
    """Sum of squared vertex degrees."""
    return sum(r.bit_count() ** 2 for r in g.rows)


def m2(g: Graph) -> int:
    """Sum over edges of the product of endpoint degrees."""
    deg = [r.bit_count() for r in g.rows]
    total = 0
    for u, r in enumerate(g.rows):
        du = deg[u]
        for v in _bits(r >> (u + 1)):
            total += du * deg[u + 1 + v]
    return total


def index_pair(g: Graph) -> IndexPair:
    deg = [r.bit_count() for r in g.rows]
    first = 0
    second = 0
    for u, r in enumerate(g.rows):
        du = deg[u]
        first += du * du
        for v in _bits(r >> (u + 1)):
            second += du * deg[u + 1 + v]
    return IndexPair(first, second)
