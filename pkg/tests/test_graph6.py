import io

import networkx as nx
import pytest

from quasizagreb import families as fam
from quasizagreb.graph import build, degree_sequence, empty
from quasizagreb.graph6 import Graph6Error, parse_graph6, read_graph6_lines, to_graph6
from tests.conftest import random_graph


def test_small_encodings():
    assert to_graph6(fam.complete(1)) == "@"
    assert to_graph6(empty(0)) == "?"
    # P3 as 0-1-2: header chr(66); bits x01=1 x02=0 x12=1 then pad -> 101000 = 40
    assert to_graph6(fam.path(3)) == "Bg"
    assert degree_sequence(parse_graph6("Bg")) == (2, 1, 1)
    assert to_graph6(fam.complete(4)) == "C~"


def test_matches_networkx_encoder(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 32), rng.random())
        ref = nx.Graph()
        ref.add_nodes_from(range(g.order))
        ref.add_edges_from(g.edges())
        assert to_graph6(g) == nx.to_graph6_bytes(ref, header=False).decode().strip()


def test_round_trip(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(0, 10), rng.random())
        assert parse_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("text", ["", "C", "C~~", "Bh", "B\x7f", "B g", "~??~"])
def test_malformed(text):
    with pytest.raises(Graph6Error):
        parse_graph6(text)


def test_long_header_form():
    g = fam.cycle(5)
    body = to_graph6(g)[1:]
    assert parse_graph6("~??D" + body) == g
    assert parse_graph6(">>graph6<<" + to_graph6(g)) == g


def test_read_lines_reports_line_number():
    stream = io.StringIO("C~\n\nBg\nC\n")
    it = read_graph6_lines(stream)
    assert next(it)[0] == 1
    assert next(it)[0] == 3
    with pytest.raises(Graph6Error, match="line 4"):
        next(it)
