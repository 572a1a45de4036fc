import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import random_subcubic, to_nx
from subcubic_idom.formats import (
    FormatError,
    from_edge_list_text,
    from_graph6,
    read_graphs,
    to_edge_list_text,
    to_graph6,
)
from subcubic_idom.generators import cycle, path
from subcubic_idom.graph import Graph


@st.composite
def graphs(draw, max_n=80):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return Graph.empty(n)
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return Graph.from_edge_list(n, draw(st.lists(pairs, max_size=2 * n)))


def test_known_graph6_strings():
    # reference strings produced by the standard tools
    assert to_graph6(Graph.from_edge_list(2, [(0, 1)])) == "A_"
    assert to_graph6(cycle(4).graph) == "Cl"
    assert to_graph6(Graph.empty(0)) == "?"


@given(graphs())
def test_graph6_matches_networkx_bytes(g):
    ours = to_graph6(g).encode("ascii")
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert ours == theirs


@given(graphs())
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_decodes_networkx_output():
    rng = random.Random(7)
    for _ in range(50):
        g = random_subcubic(rng.randint(2, 70), rng)
        data = nx.to_graph6_bytes(to_nx(g), header=True)
        assert from_graph6(data.strip()) == g


def test_large_order_header():
    g = cycle(70).graph
    text = to_graph6(g)
    assert text[0] == "~"
    assert from_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "A", "A_x", "\x01\x02", "B~~~"])
def test_malformed_graph6(bad):
    with pytest.raises(FormatError):
        from_graph6(bad)


def test_edge_list_round_trip():
    g = path(5).graph
    text = to_edge_list_text(g)
    assert text.splitlines()[0] == "5 4"
    assert from_edge_list_text(text) == g


@pytest.mark.parametrize("bad", ["3 2\n0 1\n", "x y\n", "2 1\n0 0\n", "2 1\n0 5\n"])
def test_malformed_edge_list(bad):
    with pytest.raises((FormatError, ValueError)):
        from_edge_list_text(bad)


def test_read_graphs_sniffs_format():
    g = cycle(5).graph
    assert read_graphs(to_edge_list_text(g)) == [g]
    lines = to_graph6(g) + "\n" + to_graph6(path(3).graph) + "\n"
    assert read_graphs(lines) == [g, path(3).graph]
