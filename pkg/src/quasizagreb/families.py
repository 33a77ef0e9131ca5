"""Constructors for the named graph families.

Pendant vertices and join vertices are always appended after the existing
vertices, so every constructor has a fixed, reproducible labelling.
"""

from __future__ import annotations

from quasizagreb.graph import MAX_ORDER, Graph, GraphError, build, join


def _need(n: int, least: int, name: str) -> None:
    if n < least:
        raise GraphError(f"{name}(n) requires n >= {least}, got {n}")
    if n > MAX_ORDER:
        raise GraphError(f"{name}(n) requires n <= {MAX_ORDER}, got {n}")


def path(n: int) -> Graph:
    _need(n, 1, "path")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n, 3, "cycle")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star on n vertices with centre 0."""
    _need(n, 1, "star")
    return build(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    _need(n, 1, "complete")
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def attach_pendants(g: Graph, v: int, t: int) -> Graph:
    """Append ``t`` new vertices, each adjacent only to ``v``."""
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} out of range for order {g.order}")
    if t < 0:
        raise GraphError("pendant count must be nonnegative")
    if g.order + t > MAX_ORDER:
        raise GraphError(f"order {g.order + t} exceeds {MAX_ORDER}")
    return build(g.order + t, list(g.edges()) + [(v, g.order + i) for i in range(t)])


def u3(n: int) -> Graph:
    """Triangle 0-1-2 with n-3 pendants at vertex 0."""
    _need(n, 3, "u3")
    return attach_pendants(cycle(3), 0, n - 3)


def b33(n: int) -> Graph:
    """Two triangles sharing the edge 0-1, with n-4 pendants at vertex 0."""
    _need(n, 4, "b33")
    base = build(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    return attach_pendants(base, 0, n - 4)


def k4_pendant(n: int) -> Graph:
    """K4 on 0..3 with n-4 pendants at vertex 0."""
    _need(n, 4, "k4_pendant")
    return attach_pendants(complete(4), 0, n - 4)


def book3_pendant(n: int) -> Graph:
    """Three triangles on the common edge 0-1 (apexes 2, 3, 4), with n-5 pendants at vertex 0."""
    _need(n, 5, "book3_pendant")
    base = build(5, [(0, 1)] + [(end, apex) for apex in (2, 3, 4) for end in (0, 1)])
    return attach_pendants(base, 0, n - 5)


def join_with_complete(g: Graph, p: int) -> Graph:
    """G + K_p; the p new vertices come last. p = 0 returns G."""
    if p < 0:
        raise GraphError("p must be nonnegative")
    if g.order + p > MAX_ORDER:
        raise GraphError(f"order {g.order + p} exceeds {MAX_ORDER}")
    if p == 0:
        return g
    return join(g, complete(p))


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 3),
    "star": (star, 1),
    "complete": (complete, 1),
    "u3": (u3, 3),
    "b33": (b33, 4),
    "k4": (k4_pendant, 4),
    "q": (book3_pendant, 5),
}
"""CLI family name -> (constructor, minimum order)."""


def family(name: str, n: int) -> Graph:
    try:
        ctor, _ = FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None
    return ctor(n)
