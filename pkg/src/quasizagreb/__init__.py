"""Zagreb indices and extremal p-quasi k-cyclic graphs, verified by exhaustive search."""

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
    is_connected,
    is_isomorphic,
    join,
)
from quasizagreb.graph6 import Graph6Error, parse_graph6, to_graph6
from quasizagreb.invariants import IndexPair, index_pair, m1, m2

__version__ = "0.1.0"
