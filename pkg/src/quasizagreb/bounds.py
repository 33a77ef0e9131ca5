"""Upper bounds on M1 and M2 of a graph in terms of a deletion remainder.

For a graph G on n vertices and a set S of p vertices such that G - S is
connected with cyclomatic number k:

    M1(G) <= M1(G-S) + p(4k + n^2 + 2n + p(n-4) - p^2 - 3)
    M2(G) <= M2(G-S) + p*M1(G-S) + (k+n-p-1)(p^2 + 2p(n-1))
             + T + p^2 (n-p)(n-1)

with equality iff G is isomorphic to (G-S) + K_p. The S-internal term T is
p(p-1)(n-1)^2/2 (``corrected``). The variant ``as_printed`` uses
p(p-1)(n-1)/2, which undercounts the edges inside S and fails on
S3 + K2; it is kept so that failure can be reproduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional

from quasizagreb.graph import Graph, GraphError, canonical_graph, delete_vertices, is_connected, is_isomorphic
from quasizagreb.families import join_with_complete
from quasizagreb.graph6 import to_graph6
from quasizagreb.invariants import index_pair
from quasizagreb.quasi import remainder_cyclomatic


class Variant(str, Enum):
    CORRECTED = "corrected"
    AS_PRINTED = "as_printed"


class WitnessError(GraphError):
    """The deletion remainder is not connected with the requested cyclomatic number."""


@dataclass(frozen=True)
class BoundParams:
    n: int
    p: int
    k: int
    m1_base: int
    m2_base: int

    def __post_init__(self):
        if not self.n > self.p >= 0:
            raise ValueError(f"need n > p >= 0, got n={self.n}, p={self.p}")
        if self.k < 0 or self.m1_base < 0 or self.m2_base < 0:
            raise ValueError("k and base indices must be nonnegative")


def bound_m1(params: BoundParams) -> int:
    n, p, k = params.n, params.p, params.k
    return params.m1_base + p * (4 * k + n * n + 2 * n + p * (n - 4) - p * p - 3)


def bound_m2(params: BoundParams, variant: Variant | str = Variant.CORRECTED) -> int:
    variant = Variant(variant)
    n, p, k = params.n, params.p, params.k
    if variant is Variant.CORRECTED:
        inside = p * (p - 1) * (n - 1) ** 2 // 2
    else:
        inside = p * (p - 1) * (n - 1) // 2
    return (
        params.m2_base
        + p * params.m1_base
        + (k + n - p - 1) * (p * p + 2 * p * (n - 1))
        + inside
        + p * p * (n - p) * (n - 1)
    )


@dataclass(frozen=True)
class CrossDegreeProfile:
    # remainder vertex (original label) -> number of its neighbours in S
    into_s: dict
    # S vertex (original label) -> degree in G
    s_degrees: dict

    def is_saturated(self, n: int, p: int) -> bool:
        """All l_u == p and all S-degrees == n - 1: the equality condition of both bounds."""
        return all(l == p for l in self.into_s.values()) and all(d == n - 1 for d in self.s_degrees.values())


def _check_set(g: Graph, s: Iterable[int]) -> frozenset:
    s = frozenset(s)
    for v in s:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} out of range for order {g.order}")
    return s


def cross_degrees(g: Graph, s: Iterable[int]) -> CrossDegreeProfile:
    s = _check_set(g, s)
    smask = 0
    for v in s:
        smask |= 1 << v
    into_s = {u: (g.rows[u] & smask).bit_count() for u in range(g.order) if u not in s}
    s_degrees = {v: g.rows[v].bit_count() for v in sorted(s)}
    return CrossDegreeProfile(into_s, s_degrees)


@dataclass(frozen=True)
class BoundReport:
    bound_m1: int
    realized_m1: int
    bound_m2: int
    realized_m2: int
    tight_m1: bool
    tight_m2: bool
    is_join: bool

    @property
    def holds(self) -> bool:
        return self.realized_m1 <= self.bound_m1 and self.realized_m2 <= self.bound_m2

    @property
    def equality_consistent(self) -> bool:
        return self.tight_m1 == self.tight_m2 == self.is_join


def check_bound_for_witness(
    g: Graph, s: Iterable[int], k: int, variant: Variant | str = Variant.CORRECTED
) -> BoundReport:
    """Evaluate both bounds for G and deletion set S, and test G against (G-S) + K_|S|."""
    s = _check_set(g, s)
    if len(s) >= g.order:
        raise WitnessError("deletion set must leave at least one vertex")
    rest = delete_vertices(g, s)
    if not is_connected(rest) or rest.size - rest.order + 1 != k:
        raise WitnessError(f"G - S is not a connected {k}-cyclic graph")
    base = index_pair(rest)
    real = index_pair(g)
    params = BoundParams(g.order, len(s), k, base.m1, base.m2)
    b1 = bound_m1(params)
    b2 = bound_m2(params, variant)
    joined = is_isomorphic(g, join_with_complete(rest, len(s)))
    return BoundReport(b1, real.m1, b2, real.m2, real.m1 == b1, real.m2 == b2, joined)


@dataclass
class TheoremA2Verdict:
    """Outcome of checking that joins of the remainder maximizers are the strict maximizers."""

    n: int
    p: int
    k: int
    max_base_m1: int
    max_base_m2: int
    maximizers_m1: list  # canonical remainder graphs
    maximizers_m2: list
    join_value_m1: Optional[int] = None
    join_value_m2: Optional[int] = None
    counterexamples: list = None  # graphs outside the join set that are not strictly below
    class_size: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_theorem_a2(candidates, p: int, k: int, workers: int = 1) -> TheoremA2Verdict:
    """Check the strict-maximum transfer from C^k(n-p) to Q_pC^k(n).

    ``candidates`` must be the connected k-cyclic graphs of one common order.
    Their M1 and M2 maximizers A are found separately; every member of
    Q_pC^k(n) that is not isomorphic to some H + K_p with H in A must have a
    strictly smaller index, and all the joins must share one value.
    """
    from quasizagreb import search
    from quasizagreb.graph import canonical_graph

    candidates = list(candidates)
    if not candidates:
        raise ValueError("empty candidate set")
    order = candidates[0].order
    for h in candidates:
        if h.order != order or not is_connected(h) or h.size - h.order + 1 != k:
            raise ValueError("candidates must be connected k-cyclic graphs of one order")
    pairs = [index_pair(h) for h in candidates]
    top1 = max(x.m1 for x in pairs)
    top2 = max(x.m2 for x in pairs)
    arg1 = _dedupe(canonical_graph(h) for h, x in zip(candidates, pairs) if x.m1 == top1)
    arg2 = _dedupe(canonical_graph(h) for h, x in zip(candidates, pairs) if x.m2 == top2)
    n = order + p
    joins1 = {canonical_graph(join_with_complete(h, p)) for h in arg1}
    joins2 = {canonical_graph(join_with_complete(h, p)) for h in arg2}
    vals1 = {index_pair(j).m1 for j in joins1}
    vals2 = {index_pair(j).m2 for j in joins2}
    verdict = TheoremA2Verdict(n, p, k, top1, top2, arg1, arg2, counterexamples=[])
    if len(vals1) != 1 or len(vals2) != 1:
        verdict.counterexamples.append(("unequal join values", sorted(vals1), sorted(vals2)))
        return verdict
    verdict.join_value_m1 = vals1.pop()
    verdict.join_value_m2 = vals2.pop()
    size = 0
    for g in search.enumerate_quasi_class(n, p, k, workers=workers):
        size += 1
        ip = index_pair(g)
        c = None
        if ip.m1 >= verdict.join_value_m1 or ip.m2 >= verdict.join_value_m2:
            c = canonical_graph(g)
        if ip.m1 >= verdict.join_value_m1 and c not in joins1:
            verdict.counterexamples.append(("m1", g))
        if ip.m2 >= verdict.join_value_m2 and c not in joins2:
            verdict.counterexamples.append(("m2", g))
    verdict.class_size = size
    return verdict


def _dedupe(graphs) -> list:
    seen = []
    for g in graphs:
        if g not in seen:
            seen.append(g)
    return seen


def bound_sweep(graphs, p, k, variant=Variant.CORRECTED):
    """Check both bounds on every (G, S) with |S| = p and G - S connected k-cyclic.

    Returns the verdict dict: pairs checked, violations, distinct tight graphs
    (graph6 of the canonical form), and equality exceptions (tightness
    disagreeing with G being (G-S) + K_p).
    """
    checked = 0
    violations = []
    exceptions = []
    tight = []
    tight_seen = set()
    for g in graphs:
        n = g.order
        if p >= n:
            continue
        full = (1 << n) - 1
        for s in combinations(range(n), p):
            mask = 0
            for v in s:
                mask |= 1 << v
            if remainder_cyclomatic(g.rows, full & ~mask) != k:
                continue
            checked += 1
            r = check_bound_for_witness(g, s, k, variant)
            code = to_graph6(g)
            for index, real, bound in (("m1", r.realized_m1, r.bound_m1), ("m2", r.realized_m2, r.bound_m2)):
                if real > bound:
                    violations.append({"graph6": code, "witness": list(s), "index": index,
                                       "realized": real, "bound": bound})
            if not r.tight_m1 == r.tight_m2 == r.is_join:
                exceptions.append({"graph6": code, "witness": list(s), "tight_m1": r.tight_m1,
                                   "tight_m2": r.tight_m2, "is_join": r.is_join})
            if r.tight_m1 or r.tight_m2:
                c = to_graph6(canonical_graph(g))
                if c not in tight_seen:
                    tight_seen.add(c)
                    tight.append(c)
    return {"checked": checked, "violations": violations, "tight": sorted(tight),
            "equality_exceptions": exceptions}
