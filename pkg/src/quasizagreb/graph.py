"""Immutable simple graphs stored as adjacency bit rows.

Vertex ``v`` of a graph of order ``n`` is the integer ``0 <= v < n``;
``rows[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_ORDER = 32
CANON_MAX_ORDER = 12


class GraphError(ValueError):
    """Invalid graph construction or query."""


class DisconnectedGraphError(GraphError):
    """An operation that presumes connectivity received a disconnected graph."""


class Graph:
    __slots__ = ("order", "rows", "_hash")

    def __init__(self, order: int, rows: Sequence[int]):
        # No validation here; use build() for untrusted input.
        self.order = order
        self.rows = tuple(rows)
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.rows))
        return self._hash

    def __repr__(self):
        return f"Graph(order={self.order}, edges={list(self.edges())})"

    def __setattr__(self, name, value):
        if name != "_hash" and hasattr(self, "_hash"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(r.bit_count() for r in self.rows) // 2

    def adj(self, v: int) -> frozenset:
        _check_vertex(self, v)
        return frozenset(_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, r in enumerate(self.rows):
            for v in _bits(r >> (u + 1)):
                yield u, u + 1 + v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} out of range for order {g.order}")


def build(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if not 0 <= order <= MAX_ORDER:
        raise GraphError(f"order {order} outside 0..{MAX_ORDER}")
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, rows)


def empty(order: int) -> Graph:
    return build(order, ())


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.rows[v].bit_count()


def degrees(g: Graph) -> list[int]:
    return [r.bit_count() for r in g.rows]


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted in non-increasing order."""
    return tuple(sorted(degrees(g), reverse=True))


def _component_mask(rows: Sequence[int], start: int, within: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def mask_connected(rows: Sequence[int], within: int) -> bool:
    """True iff the subgraph induced on the vertex bitmask ``within`` is connected.

    The empty vertex set is reported as not connected.
    """
    if not within:
        return False
    start = (within & -within).bit_length() - 1
    return _component_mask(rows, start, within) == within


def is_connected(g: Graph) -> bool:
    return mask_connected(g.rows, (1 << g.order) - 1)


def cyclomatic_number(g: Graph) -> int:
    """``m - n + 1`` for a connected graph."""
    if not is_connected(g):
        raise DisconnectedGraphError("cyclomatic number is defined here for connected graphs only")
    return g.size - g.order + 1


def induced_rows(rows: Sequence[int], keep: Sequence[int]) -> list[int]:
    """Rows of the subgraph induced on ``keep``, relabelled 0..len(keep)-1 in the given order."""
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        r = 0
        for u in _bits(rows[v]):
            i = pos.get(u)
            if i is not None:
                r |= 1 << i
        out.append(r)
    return out


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on the complement of ``s``, relabelled preserving order."""
    s = set(s)
    for v in s:
        _check_vertex(g, v)
    if len(s) >= g.order:
        raise GraphError("cannot delete every vertex")
    keep = [v for v in range(g.order) if v not in s]
    return Graph(len(keep), induced_rows(g.rows, keep))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.order + h.order
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    shift = g.order
    return Graph(n, g.rows + tuple(r << shift for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    """G + H: the disjoint union plus every edge between G and H. H's vertices follow G's."""
    n = g.order + h.order
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    shift = g.order
    g_all = (1 << g.order) - 1
    h_all = ((1 << h.order) - 1) << shift
    rows = [r | h_all for r in g.rows] + [(r << shift) | g_all for r in h.rows]
    return Graph(n, rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which old vertex ``v`` becomes ``perm[v]``."""
    rows = [0] * g.order
    for v, r in enumerate(g.rows):
        nr = 0
        for u in _bits(r):
            nr |= 1 << perm[u]
        rows[perm[v]] = nr
    return Graph(g.order, rows)


# -- canonical labelling -------------------------------------------------------


def _refine(rows, cells):
    """Coarsest equitable refinement of an ordered partition.

    Each round gives every vertex the vector of its neighbour counts into the
    current cells and splits cells by that vector, sub-cells in increasing
    vector order. The result depends only on the graph and the input
    partition, which is what makes leaf codes isomorphism invariant.
    """
    ncells = len(cells)
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sigs = [tuple([(rows[v] & m).bit_count() for m in masks]) for v in cell]
            first = sigs[0]
            if all(s == first for s in sigs):
                out.append(cell)
                continue
            groups = {}
            for v, s in zip(cell, sigs):
                groups.setdefault(s, []).append(v)
            for s in sorted(groups):
                out.append(groups[s])
        cells = out
        if len(cells) == ncells:
            return cells
        ncells = len(cells)


def _leaf_code(nbrs, order):
    pos = [0] * len(nbrs)
    for i, v in enumerate(order):
        pos[v] = i
    code = []
    for v in order:
        r = 0
        for u in nbrs[v]:
            r |= 1 << pos[u]
        code.append(r)
    return tuple(code)


def _orbit_root(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def canonical_labeling(rows: Sequence[int]) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(order, code)`` for the graph given by adjacency bit rows.

    ``order[i]`` is the vertex placed at canonical position ``i``; ``code`` is
    the tuple of relabelled rows. Two graphs are isomorphic iff their codes are
    equal. The search individualises vertices of the first non-singleton cell
    and refines, keeping the lexicographically largest leaf code. Sibling
    branches are pruned by twin transpositions and by automorphisms discovered
    at equal leaves.
    """
    order, code, _ = _canon(rows)
    return order, code


def automorphism_generators(rows: Sequence[int]) -> list[list[int]]:
    """Some automorphisms of the graph (as vertex maps), found while canonically labelling it.

    Includes every transposition of twin vertices. Not guaranteed to generate
    the whole automorphism group; anything derived from them is sound but may
    be incomplete.
    """
    return _canon(rows)[2]


def _canon(rows):
    n = len(rows)
    if n == 0:
        return [], (), []
    nbrs = [list(_bits(r)) for r in rows]
    twin_of = list(range(n))
    for u in range(n):
        if twin_of[u] != u:
            continue
        bu = 1 << u
        ru = rows[u]
        for v in range(u + 1, n):
            if twin_of[v] == v and (ru & ~(1 << v)) == (rows[v] & ~bu):
                twin_of[v] = u

    by_degree = {}
    for v in range(n):
        by_degree.setdefault(len(nbrs[v]), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]

    best_code = None
    best_order = None
    autos: list[list[int]] = []

    def search(cells, prefix):
        nonlocal best_code, best_order
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(nbrs, order)
            if best_code is None or code > best_code:
                best_code, best_order = code, order
            elif code == best_code:
                gamma = [0] * n
                for a, b in zip(best_order, order):
                    gamma[a] = b
                autos.append(gamma)
            return
        cell = cells[target]
        explored: list[int] = []
        explored_twins = set()
        for v in cell:
            tv = twin_of[v]
            if tv in explored_twins:
                continue
            if explored and autos:
                parent = list(range(n))
                for gamma in autos:
                    if all(gamma[x] == x for x in prefix):
                        for x in range(n):
                            a, b = _orbit_root(parent, x), _orbit_root(parent, gamma[x])
                            if a != b:
                                parent[a] = b
                rv = _orbit_root(parent, v)
                if any(_orbit_root(parent, w) == rv for w in explored):
                    continue
            explored.append(v)
            explored_twins.add(tv)
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(rows, child), prefix + [v])

    search(_refine(rows, start), [])
    gens = list(autos)
    for v in range(n):
        if twin_of[v] != v:
            gamma = list(range(n))
            gamma[v], gamma[twin_of[v]] = twin_of[v], v
            gens.append(gamma)
    return best_order, best_code, gens


def _check_canon_cap(g: Graph) -> None:
    if g.order > CANON_MAX_ORDER:
        raise GraphError(f"canonical labelling is capped at order {CANON_MAX_ORDER}")


def canonical_graph(g: Graph) -> Graph:
    _check_canon_cap(g)
    _, code = canonical_labeling(g.rows)
    return Graph(g.order, code)


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: the graph6 encoding of the canonical relabelling."""
    from quasizagreb.graph6 import to_graph6

    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    _check_canon_cap(g)
    _check_canon_cap(h)
    if g.order != h.order or g.size != h.size:
        return False
    if degree_sequence(g) != degree_sequence(h):
        return False
    return canonical_labeling(g.rows)[1] == canonical_labeling(h.rows)[1]
