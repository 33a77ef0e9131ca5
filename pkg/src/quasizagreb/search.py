"""Exhaustive generation of connected graphs and extremal searches over them.

Connected graphs on n vertices are generated one per isomorphism class by
canonical augmentation: every class representative on n-1 vertices (a
parent) is extended by a new vertex joined to each nonempty subset of its
vertices, and a child is kept only if deleting its canonically chosen
removable vertex gives back a graph isomorphic to that parent. Removable
vertices are the non-cut vertices; the chosen one minimises
(degree, sum of neighbour degrees), ties broken by canonical position.
Every connected graph has a non-cut vertex whose removal leaves a
connected graph, so every class is reached from exactly one parent class;
repeats from the same parent are dropped by canonical code.

Deleting a non-cut vertex of degree >= 1 never raises the cyclomatic
number, which lets generation be restricted to graphs with cyclomatic
number at most some bound without losing anything below it.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from quasizagreb.graph import (
    Graph,
    GraphError,
    _bits,
    automorphism_generators,
    canonical_graph,
    canonical_labeling,
    induced_rows,
    mask_connected,
)
from quasizagreb.graph6 import to_graph6
from quasizagreb.invariants import index_pair
from quasizagreb.quasi import min_order, remainder_cyclomatic

log = logging.getLogger(__name__)

MAX_ENUM_ORDER = 10


class EmptyClassError(ValueError):
    """The requested graph class has no members."""


def max_cyclomatic(n: int) -> int:
    """Cyclomatic number of K_n."""
    return max(0, n * (n - 1) // 2 - n + 1)


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}, got {n}")


def _children(parent: tuple, max_cyc: Optional[int]) -> list[tuple]:
    """Canonical codes of the accepted children of one canonical parent, in generation order."""
    n0 = len(parent)
    n = n0 + 1
    new = n0
    new_bit = 1 << new
    full = (1 << n) - 1
    pdeg = [r.bit_count() for r in parent]
    pm = sum(pdeg) // 2
    # neighbour-degree sums in the parent
    psum = [sum(pdeg[u] for u in _bits(r)) for r in parent]
    max_edges = None if max_cyc is None else n - 1 + max_cyc
    # parent automorphisms as per-vertex bit images: gamma(X) is isomorphic-equivalent to X
    gens = [[1 << g for g in gamma] for gamma in automorphism_generators(parent)]
    seen = set()
    out = []
    for x in range(1, 1 << n0):
        dnew = x.bit_count()
        if max_edges is not None and pm + dnew > max_edges:
            continue
        smaller_image = False
        for img in gens:
            y = 0
            xs = x
            while xs:
                low = xs & -xs
                y |= img[low.bit_length() - 1]
                xs ^= low
            if y < x:
                smaller_image = True
                break
        if smaller_image:
            continue
        # key(v) = 1024 * degree + sum of neighbour degrees, in the child
        knew = dnew * 1025
        xs = x
        while xs:
            low = xs & -xs
            knew += pdeg[low.bit_length() - 1]
            xs ^= low
        rows = None
        ties = [new]
        rejected = False
        for w in range(n0):
            inx = x >> w & 1
            kw = (pdeg[w] + inx) * 1024 + psum[w] + (parent[w] & x).bit_count()
            if inx:
                kw += dnew
            if kw > knew:
                continue
            if rows is None:
                rows = [r | new_bit if x >> i & 1 else r for i, r in enumerate(parent)]
                rows.append(x)
            if not mask_connected(rows, full & ~(1 << w)):
                continue
            if kw < knew:
                rejected = True
                break
            ties.append(w)
        if rejected:
            continue
        if rows is None:
            rows = [r | new_bit if x >> i & 1 else r for i, r in enumerate(parent)]
            rows.append(x)
        order, code = canonical_labeling(rows)
        if code in seen:
            continue
        if len(ties) > 1:
            pos = {v: i for i, v in enumerate(order)}
            vstar = min(ties, key=pos.__getitem__)
            if vstar != new:
                keep = [v for v in range(n) if v != vstar]
                if canonical_labeling(induced_rows(rows, keep))[1] != parent:
                    continue
        seen.add(code)
        out.append(code)
    return out


def _children_chunk(args) -> list[tuple]:
    parents, max_cyc = args
    out = []
    for parent in parents:
        out.extend(_children(parent, max_cyc))
    return out


def _chunks(seq: Sequence, parts: int) -> list[Sequence]:
    size = max(1, -(-len(seq) // (parts * 8)))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def _normalise_bound(n: int, max_cyc: Optional[int]) -> Optional[int]:
    if max_cyc is None or max_cyc >= max_cyclomatic(n):
        return None
    return max(max_cyc, -1)


def _generate(n: int, max_cyc: Optional[int], workers: int = 1) -> tuple:
    """Children of every (n-1)-vertex parent, with the cyclomatic cap applied at each level."""
    parents = _level(n - 1, _normalise_bound(n - 1, max_cyc))
    if workers > 1 and len(parents) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_children_chunk, [(c, max_cyc) for c in _chunks(parents, workers)])
            return tuple(code for part in parts for code in part)
    return tuple(_children_chunk((parents, max_cyc)))


@lru_cache(maxsize=None)
def _level(n: int, max_cyc: Optional[int]) -> tuple:
    """Canonical codes of all connected n-vertex graphs with cyclomatic number <= max_cyc (None: no bound)."""
    if n == 1:
        return ((0,),)
    if max_cyc is not None and max_cyc < 0:
        return ()
    if max_cyc is not None and (n, None) in _cached_keys:
        full = _level(n, None)
        return tuple(c for c in full if sum(r.bit_count() for r in c) // 2 - n + 1 <= max_cyc)
    result = _generate(n, max_cyc, _WORKERS[0])
    _cached_keys.add((n, max_cyc))
    log.debug("level n=%d max_cyc=%s: %d graphs", n, max_cyc, len(result))
    return result


_cached_keys: set = set()
_WORKERS = [1]


def connected_codes(n: int, max_cyc: Optional[int] = None, workers: int = 1) -> tuple:
    """All connected n-vertex graphs (canonical row tuples), optionally capped in cyclomatic number."""
    _check_order(n)
    _WORKERS[0] = max(1, workers)
    try:
        return _level(n, _normalise_bound(n, max_cyc))
    finally:
        _WORKERS[0] = 1


def enumerate_connected(n: int, max_cyc: Optional[int] = None, workers: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs on n vertices."""
    for code in connected_codes(n, max_cyc, workers):
        yield Graph(n, code)


def enumerate_kcyclic(n: int, k: int, workers: int = 1) -> Iterator[Graph]:
    if k < 0:
        raise GraphError("k must be nonnegative")
    for code in connected_codes(n, k, workers):
        if sum(r.bit_count() for r in code) // 2 - n + 1 == k:
            yield Graph(n, code)


def quasi_cyclomatic_bound(n: int, p: int, k: int) -> int:
    """Largest cyclomatic number a member of Q_pC^k(n) can have.

    Deleting p vertices removes at most p(n-p) + p(p-1)/2 edges, so
    C(G) = C(G-S) - p + (edges at S) <= k - p + p(n-p) + p(p-1)/2.
    """
    return k - p + p * (n - p) + p * (p - 1) // 2


def _min_deletion_le(rows: Sequence[int], k: int, p: int) -> Optional[int]:
    """Minimum deletion size to reach a connected k-cyclic remainder, searched only up to p."""
    n = len(rows)
    if p > n - min_order(k):
        p = n - min_order(k)
    full = (1 << n) - 1
    for s in range(p + 1):
        for mask in _masks_of_size(n, s):
            if remainder_cyclomatic(rows, full & ~mask) == k:
                return s
    return None


@lru_cache(maxsize=None)
def _masks_list(n: int, s: int) -> tuple:
    from itertools import combinations

    out = []
    for combo in combinations(range(n), s):
        m = 0
        for v in combo:
            m |= 1 << v
        out.append(m)
    return tuple(out)


def _masks_of_size(n: int, s: int):
    return _masks_list(n, s)


def _is_member_rows(rows: Sequence[int], p: int, k: int) -> bool:
    m = sum(r.bit_count() for r in rows) // 2
    if m - len(rows) + 1 < k:
        return False
    return _min_deletion_le(rows, k, p) == p


def enumerate_quasi_class(
    n: int, p: int, k: int, workers: int = 1, source: Optional[Iterable[Graph]] = None
) -> Iterator[Graph]:
    """Members of Q_pC^k(n): connected graphs whose minimum deletion to a connected k-cyclic graph is p.

    ``source`` replaces the built-in enumerator (e.g. graphs read from a graph6 file).
    """
    if p < 0 or k < 0:
        raise GraphError("p and k must be nonnegative")
    if source is not None:
        for g in source:
            if g.order == n and mask_connected(g.rows, (1 << n) - 1) and _is_member_rows(g.rows, p, k):
                yield g
        return
    codes = connected_codes(n, quasi_cyclomatic_bound(n, p, k), workers)
    if workers > 1 and len(codes) > 256:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_member_chunk, [(c, p, k) for c in _chunks(codes, workers)])
            for part in parts:
                for code in part:
                    yield Graph(n, code)
        return
    for code in codes:
        if _is_member_rows(code, p, k):
            yield Graph(n, code)


def _member_chunk(args) -> list:
    codes, p, k = args
    return [c for c in codes if _is_member_rows(c, p, k)]


def corollary_min_order(p: int, k: int) -> int:
    """Smallest n for which the extremal statements apply: p+2, p+3, p+4, p+5 for k = 0..3."""
    if k <= 3:
        return p + 2 + k
    return p + min_order(k) + 1


@dataclass
class ExtremalReport:
    n: int
    p: int
    k: int
    max_m1: int
    max_m2: int
    argmax_m1: list  # canonical graphs
    argmax_m2: list
    class_size: int
    runner_up_m1: Optional[int] = field(default=None, compare=False)
    runner_up_m2: Optional[int] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "k": self.k,
            "max_m1": self.max_m1,
            "max_m2": self.max_m2,
            "argmax_m1": [to_graph6(g) for g in self.argmax_m1],
            "argmax_m2": [to_graph6(g) for g in self.argmax_m2],
            "class_size": self.class_size,
        }


class _Tracker:
    """Running maximum with all maximizers (deduplicated) and the best value below it."""

    def __init__(self):
        self.best = None
        self.second = None
        self.args: list = []

    def offer(self, value, g):
        if self.best is None or value > self.best:
            if self.best is not None:
                self.second = self.best
            self.best = value
            self.args = [g]
        elif value == self.best:
            self.args.append(g)
        elif self.second is None or value > self.second:
            self.second = value

    def canonical_args(self) -> list:
        out = []
        seen = set()
        for g in self.args:
            c = canonical_graph(g)
            if c not in seen:
                seen.add(c)
                out.append(c)
        return sorted(out, key=to_graph6)


def extremal_search(
    n: int, p: int, k: int, workers: int = 1, source: Optional[Iterable[Graph]] = None
) -> ExtremalReport:
    """Maxima of M1 and M2 over Q_pC^k(n), with every maximizing class."""
    t1, t2 = _Tracker(), _Tracker()
    size = 0
    for g in enumerate_quasi_class(n, p, k, workers=workers, source=source):
        size += 1
        ip = index_pair(g)
        t1.offer(ip.m1, g)
        t2.offer(ip.m2, g)
    if size == 0:
        raise EmptyClassError(f"Q_{p}C^{k}({n}) is empty")
    return ExtremalReport(
        n, p, k, t1.best, t2.best, t1.canonical_args(), t2.canonical_args(), size, t1.second, t2.second
    )


@dataclass
class UniquenessVerdict:
    ok: bool
    index: str
    missing: list  # expected graphs not among the maximizers
    unexpected: list  # maximizers not expected (the counterexamples)
    strict: bool  # every non-maximizer is strictly below the maximum

    def counterexamples_graph6(self) -> list[str]:
        return [to_graph6(g) for g in self.unexpected + self.missing]


def verify_uniqueness(report: ExtremalReport, expected: Iterable[Graph], index: str = "both") -> UniquenessVerdict:
    """Check that the maximizer set equals ``expected`` exactly, for M1, M2 or both."""
    if index not in ("m1", "m2", "both"):
        raise ValueError("index must be m1, m2 or both")
    want = {canonical_graph(g) for g in expected}
    missing: list = []
    unexpected: list = []
    strict = True
    for name in ("m1", "m2"):
        if index not in (name, "both"):
            continue
        got = set(getattr(report, f"argmax_{name}"))
        missing += [g for g in sorted(want - got, key=to_graph6) if g not in missing]
        unexpected += [g for g in sorted(got - want, key=to_graph6) if g not in unexpected]
        runner = getattr(report, f"runner_up_{name}")
        if runner is not None and runner >= getattr(report, f"max_{name}"):
            strict = False
    return UniquenessVerdict(not missing and not unexpected and strict, index, missing, unexpected, strict)
