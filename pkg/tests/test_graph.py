from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from quasizagreb import families as fam
from quasizagreb.graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    build,
    canonical_form,
    cyclomatic_number,
    degree,
    degree_sequence,
    delete_vertices,
    disjoint_union,
    empty,
    is_connected,
    is_isomorphic,
    join,
)
from tests.conftest import shuffled
from tests.oracles import connected_edges, labeled_graphs, perm_canon


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return build(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def test_build_examples():
    p3 = build(3, [(0, 1), (1, 2)])
    assert [degree(p3, v) for v in range(3)] == [1, 2, 1]
    k1 = build(1, [])
    assert k1.order == 1 and k1.size == 0
    c4 = build(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.size == 4
    assert c4 == fam.cycle(4)


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_build_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build(3, edges)


def test_graph_is_immutable():
    g = fam.path(3)
    with pytest.raises(AttributeError):
        g.order = 5


def test_degrees():
    assert all(degree(fam.complete(4), v) == 3 for v in range(4))
    s5 = fam.star(5)
    assert degree(s5, 0) == 4 and degree(s5, 3) == 1
    assert degree(fam.u3(7), 0) == 6
    assert degree_sequence(s5) == (4, 1, 1, 1, 1)
    with pytest.raises(GraphError):
        degree(s5, 5)


def test_connectivity():
    assert is_connected(fam.cycle(5))
    assert not is_connected(disjoint_union(fam.complete(2), fam.complete(2)))
    assert is_connected(join(fam.star(4), fam.complete(1)))
    assert not is_connected(empty(0))
    assert is_connected(empty(1))


def test_cyclomatic_number():
    assert cyclomatic_number(fam.star(6)) == 0
    assert cyclomatic_number(fam.complete(4)) == 3
    assert cyclomatic_number(fam.b33(5)) == 2
    with pytest.raises(DisconnectedGraphError):
        cyclomatic_number(empty(2))


def test_delete_vertices():
    assert delete_vertices(fam.complete(4), {2}) == fam.complete(3)
    apexed = join(fam.star(4), fam.complete(1))
    assert delete_vertices(apexed, {4}) == fam.star(4)
    assert delete_vertices(fam.cycle(5), {0}) == fam.path(4)
    # relabelling keeps relative order
    assert delete_vertices(fam.path(4), {0}) == fam.path(3)
    with pytest.raises(GraphError):
        delete_vertices(fam.path(2), {0, 1})


def test_join():
    g = fam.cycle(5)
    assert join(g, empty(0)) == g
    assert join(fam.complete(1), fam.complete(1)) == fam.complete(2)
    assert degree_sequence(join(fam.star(3), fam.complete(2))) == (4, 4, 4, 3, 3)
    with pytest.raises(GraphError):
        join(empty(20), empty(13))


def test_disjoint_union():
    g = disjoint_union(fam.complete(1), fam.complete(1))
    assert g.order == 2 and g.size == 0
    t = disjoint_union(fam.cycle(3), fam.cycle(3))
    assert (t.order, t.size, is_connected(t)) == (6, 6, False)
    assert degree_sequence(disjoint_union(fam.path(2), fam.path(3))) == (2, 1, 1, 1, 1)


def test_canonical_form_examples(rng):
    c4 = fam.cycle(4)
    assert canonical_form(c4) == canonical_form(shuffled(c4, rng))
    assert canonical_form(fam.path(4)) != canonical_form(fam.star(4))


def test_six_connected_classes_on_four_vertices():
    # oracle: min edge list over all 24 relabellings
    expected = {perm_canon(4, e) for e in labeled_graphs(4) if connected_edges(4, e)}
    assert len(expected) == 6
    forms = {canonical_form(build(4, e)) for e in labeled_graphs(4) if connected_edges(4, e)}
    assert len(forms) == 6


def test_canonical_form_matches_permutation_oracle_on_five_vertices():
    # same partition of the labeled space into classes, for all 1024 graphs
    by_form, by_oracle = {}, {}
    for e in labeled_graphs(5):
        key = frozenset(e)
        by_form.setdefault(canonical_form(build(5, e)), set()).add(key)
        by_oracle.setdefault(perm_canon(5, e), set()).add(key)
    assert sorted(map(sorted, by_form.values())) == sorted(map(sorted, by_oracle.values()))
    assert len(by_form) == 34


def test_is_isomorphic(rng):
    c5 = fam.cycle(5)
    assert is_isomorphic(c5, shuffled(c5, rng))
    k4_minus = build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert not is_isomorphic(k4_minus, fam.cycle(4))
    assert is_isomorphic(join(fam.star(3), fam.complete(1)), k4_minus)
    with pytest.raises(GraphError):
        is_isomorphic(empty(13), empty(13))


def test_canonical_form_on_symmetric_graphs(rng):
    # large automorphism groups exercise the pruning
    petersen = build(10, [(i, (i + 1) % 5) for i in range(5)]
                     + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                     + [(i, i + 5) for i in range(5)])
    for g in (fam.complete(12), empty(12), petersen, fam.cycle(12),
              join(empty(6), empty(6)), disjoint_union(fam.cycle(6), fam.cycle(6))):
        ref = canonical_form(g)
        for _ in range(5):
            assert canonical_form(shuffled(g, rng)) == ref
    # Petersen vs the 5-prism: both 3-regular on 10 vertices
    prism = build(10, [(i, (i + 1) % 5) for i in range(5)]
                  + [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
                  + [(i, i + 5) for i in range(5)])
    assert not is_isomorphic(petersen, prism)


@given(graphs())
def test_handshake(g):
    assert sum(degree(g, v) for v in range(g.order)) == 2 * g.size
    for u, v in g.edges():
        assert g.has_edge(v, u)
    assert all(not g.has_edge(v, v) for v in range(g.order))


@given(graphs(max_n=9), st.integers(1, 3))
def test_join_degree_law(g, p):
    joined = join(g, fam.complete(p))
    n = g.order + p
    for v in range(g.order):
        assert degree(joined, v) == degree(g, v) + p
    for v in range(g.order, n):
        assert degree(joined, v) == n - 1


@given(graphs(min_n=2, max_n=9), st.data())
def test_deletion_does_not_raise_cyclomatic_number(g, data):
    if not is_connected(g):
        return
    v = data.draw(st.integers(0, g.order - 1))
    rest = delete_vertices(g, {v})
    if is_connected(rest):
        assert cyclomatic_number(rest) <= cyclomatic_number(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_canonical_form_permutation_invariance(g, r):
    ref = canonical_form(g)
    for _ in range(100):
        assert canonical_form(shuffled(g, r)) == ref
