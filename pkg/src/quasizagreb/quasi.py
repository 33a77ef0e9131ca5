"""p-quasi k-cyclic classification by exhaustive vertex-deletion search.

A deletion remainder counts as k-cyclic only if it is nonempty and connected
with cyclomatic number k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from quasizagreb.graph import DisconnectedGraphError, Graph, GraphError, is_connected, mask_connected


def min_order(k: int) -> int:
    """Order of the smallest connected k-cyclic graph (1, 3, 4, 4 for k = 0..3)."""
    if k < 0:
        raise GraphError("k must be nonnegative")
    if k == 0:
        return 1
    n = 3
    while n * (n - 1) // 2 - n + 1 < k:
        n += 1
    return n


@dataclass(frozen=True)
class Classification:
    k: int
    p: Optional[int]
    witnesses: tuple[frozenset, ...]

    @property
    def feasible(self) -> bool:
        return self.p is not None


def remainder_cyclomatic(rows: Sequence[int], keep: int) -> Optional[int]:
    """Cyclomatic number of the subgraph induced on bitmask ``keep``, or None if it is empty or disconnected."""
    if not mask_connected(rows, keep):
        return None
    twice_m = 0
    k = keep
    while k:
        low = k & -k
        twice_m += (rows[low.bit_length() - 1] & keep).bit_count()
        k ^= low
    return twice_m // 2 - keep.bit_count() + 1


def _subset_masks(n: int, size: int):
    for combo in combinations(range(n), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        yield combo, mask


def _check_input(g: Graph, k: int) -> None:
    if k < 0:
        raise GraphError("k must be nonnegative")
    if not is_connected(g):
        raise DisconnectedGraphError("p-quasi classification requires a connected graph")


def min_deletion_to_kcyclic(g: Graph, k: int, max_size: Optional[int] = None) -> Classification:
    """Smallest p such that deleting some p vertices leaves a connected k-cyclic graph.

    All witnesses of that size are returned, subsets in lexicographic order.
    ``max_size`` caps the sweep; if nothing is found up to the cap the result
    is reported infeasible (callers use this to ask "is p <= max_size?").
    """
    _check_input(g, k)
    n = g.order
    rows = g.rows
    full = (1 << n) - 1
    top = n - min_order(k)
    if max_size is not None:
        top = min(top, max_size)
    if g.size - n + 1 < k:
        # deletion never raises the cyclomatic number of a connected remainder
        return Classification(k, None, ())
    for s in range(top + 1):
        found = []
        for combo, mask in _subset_masks(n, s):
            if remainder_cyclomatic(rows, full & ~mask) == k:
                found.append(frozenset(combo))
        if found:
            return Classification(k, s, tuple(found))
    return Classification(k, None, ())


def is_p_quasi_k_cyclic(g: Graph, p: int, k: int) -> bool:
    if p < 0:
        return False
    return min_deletion_to_kcyclic(g, k, max_size=p).p == p


def deletion_profile(rows: Sequence[int], max_size: int) -> list[set[int]]:
    """For s = 0..max_size, the set of cyclomatic numbers reachable by deleting s vertices.

    Only connected nonempty remainders contribute. The minimum deletion size for
    a target k is the first s whose set contains k.
    """
    n = len(rows)
    full = (1 << n) - 1
    out = []
    for s in range(min(max_size, n - 1) + 1):
        reach = set()
        for _, mask in _subset_masks(n, s):
            c = remainder_cyclomatic(rows, full & ~mask)
            if c is not None:
                reach.add(c)
        out.append(reach)
    return out


def min_p_from_profile(profile: list[set[int]], k: int) -> Optional[int]:
    for s, reach in enumerate(profile):
        if k in reach:
            return s
    return None
