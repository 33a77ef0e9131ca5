"""Independent brute-force oracles, deliberately naive.

Nothing here calls the refinement-based canonical labelling, the augmentation
enumerator or the pruned deletion search.
"""

from itertools import combinations, permutations, product


def labeled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [pairs[i] for i in range(len(pairs)) if mask >> i & 1]


def connected_edges(n, edges):
    if n == 0:
        return False
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def perm_canon(n, edges):
    """Minimum sorted edge list over all n! relabellings."""
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def connected_class_count(n):
    """Connected isomorphism classes on n vertices via the full labeled space."""
    return len({perm_canon(n, e) for e in labeled_graphs(n) if connected_edges(n, e)})


def naive_min_deletion(n, edges, k):
    """Minimum |S| with G - S nonempty, connected and k-cyclic; every subset of every size."""
    best = None
    witnesses = []
    for s in range(n):
        for S in combinations(range(n), s):
            keep = [v for v in range(n) if v not in S]
            pos = {v: i for i, v in enumerate(keep)}
            sub = [(pos[u], pos[v]) for u, v in edges if u in pos and v in pos]
            if connected_edges(len(keep), sub) and len(sub) - len(keep) + 1 == k:
                if best is None:
                    best = s
                if s == best:
                    witnesses.append(frozenset(S))
    return best, witnesses


def labeled_space_class_count(n):
    """Connected isomorphism classes on n vertices by sweeping all 2^C(n,2) labeled graphs.

    The sweep is vectorised: it keeps connected graphs whose degrees are
    non-increasing in label order (every class has such a labelling), and
    those survivors are deduplicated by the minimum edge list over all
    relabellings that preserve the degree sequence.
    """
    import numpy as np

    if n == 1:
        return 1
    pairs = list(combinations(range(n), 2))
    masks = np.arange(1 << len(pairs), dtype=np.uint32)
    rows = [np.zeros(len(masks), dtype=np.uint32) for _ in range(n)]
    deg = [np.zeros(len(masks), dtype=np.uint8) for _ in range(n)]
    for i, (u, v) in enumerate(pairs):
        bit = (masks >> i) & 1
        rows[u] |= bit << v
        rows[v] |= bit << u
        deg[u] += bit.astype(np.uint8)
        deg[v] += bit.astype(np.uint8)
    keep = np.ones(len(masks), dtype=bool)
    for v in range(n - 1):
        keep &= deg[v] >= deg[v + 1]
    reach = np.ones(len(masks), dtype=np.uint32)
    for _ in range(n - 1):
        grown = reach.copy()
        for v in range(n):
            grown |= np.where((reach >> v) & 1 == 1, rows[v], 0).astype(np.uint32)
        reach = grown
    keep &= reach == (1 << n) - 1
    classes = set()
    for mask in masks[keep].tolist():
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        d = [0] * n
        for u, v in edges:
            d[u] += 1
            d[v] += 1
        blocks = []
        for v in range(n):
            if blocks and d[blocks[-1][0]] == d[v]:
                blocks[-1].append(v)
            else:
                blocks.append([v])
        best = None
        for choice in product(*(permutations(b) for b in blocks)):
            perm = [0] * n
            for block, img in zip(blocks, choice):
                for a, b in zip(block, img):
                    perm[a] = b
            key = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))
            if best is None or key < best:
                best = key
        classes.add(best)
    return len(classes)
