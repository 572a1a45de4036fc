import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_is_id_set, random_subcubic
from subcubic_idom.generators import complete_bipartite, cycle, path
from subcubic_idom.graph import (
    Graph,
    GraphError,
    VertexSet,
    bipartition,
    components,
    degree_profile,
    find_odd_cycle,
    is_id_set,
    remove_vertices,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=3 * n)) if pairs else []
    return Graph.from_edge_list(n, edges)


def k33():
    return complete_bipartite(3, 3).graph


def test_from_edge_list_single_edge():
    g = Graph.from_edge_list(2, [(0, 1)])
    assert g.edges() == ((0, 1),)
    assert degree_profile(g).max_degree == 1


def test_from_edge_list_four_cycle():
    g = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.m == 4
    assert g.degrees() == [2, 2, 2, 2]
    assert g.adj[0] == (1, 3)


def test_parallel_edges_deduplicated():
    g = Graph.from_edge_list(3, [(0, 1), (0, 1)])
    assert g == Graph.from_edge_list(3, [(0, 1)])
    assert g.degree(2) == 0


@pytest.mark.parametrize("n, edges", [(3, [(1, 1)]), (3, [(0, 3)]), (3, [(-1, 0)])])
def test_bad_edges_rejected(n, edges):
    with pytest.raises(GraphError):
        Graph.from_edge_list(n, edges)


@pytest.mark.parametrize(
    "g, expected",
    [
        (k33(), (3, 3, True, True)),
        (path(4).graph, (1, 2, True, False)),
        (Graph.from_edge_list(5, [(0, i) for i in range(1, 5)]), (1, 4, False, False)),
    ],
)
def test_degree_profile(g, expected):
    assert tuple(degree_profile(g)) == expected


def test_components_examples():
    assert [len(c) for c in components(cycle(4).graph)] == [4]
    two_edges = Graph.from_edge_list(4, [(0, 1), (2, 3)])
    assert [c.sorted() for c in components(two_edges)] == [[0, 1], [2, 3]]
    # drop one side vertex of K_{3,3} together with its three neighbours
    g = k33()
    rest, _ = remove_vertices(g, [0, 3, 4, 5])
    assert rest.n == 2 and rest.m == 0
    assert [len(c) for c in components(rest)] == [1, 1]


def test_bipartition_examples():
    a, b = bipartition(cycle(6).graph)
    assert (len(a), len(b)) == (3, 3)
    assert bipartition(cycle(5).graph) is None
    a, b = bipartition(k33())
    assert sorted([a.sorted(), b.sorted()]) == [[0, 1, 2], [3, 4, 5]]


def _assert_odd_cycle(g, cyc):
    assert len(cyc) % 2 == 1
    assert len(set(cyc)) == len(cyc)
    for i in range(len(cyc)):
        assert g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)])


def test_find_odd_cycle_examples():
    c5 = cycle(5).graph
    assert sorted(find_odd_cycle(c5)) == [0, 1, 2, 3, 4]
    assert find_odd_cycle(cycle(4).graph) is None
    k4 = Graph.from_edge_list(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    tri = find_odd_cycle(k4)
    assert len(tri) == 3
    _assert_odd_cycle(k4, tri)


def test_remove_vertices_examples():
    p4, index = remove_vertices(cycle(5).graph, [0])
    assert sorted(p4.degrees()) == [1, 1, 2, 2] and p4.m == 3
    assert index == {1: 0, 2: 1, 3: 2, 4: 3}
    g = k33()
    same, index = remove_vertices(g, VertexSet())
    assert same == g and index == {v: v for v in range(6)}


def test_is_id_set_examples():
    assert is_id_set(k33(), [0, 1, 2]) == (True, True)
    c5 = cycle(5).graph
    # 0 and 1 are adjacent, and vertex 3 (neighbours 2, 4) is left undominated
    assert is_id_set(c5, [0, 1]) == (False, False)
    assert is_id_set(c5, [0, 1, 3]) == (False, True)
    c6 = cycle(6).graph
    assert is_id_set(c6, [0, 3]) == (True, True)
    # vertex 4 of C_6 sees only 3 and 5
    assert is_id_set(c6, [0, 2]) == (True, False)


def test_vertex_set_basics():
    s = VertexSet.of([5, 1, 3])
    assert s.sorted() == [1, 3, 5]
    assert len(s) == 3 and 3 in s and 2 not in s
    assert (s - VertexSet.of([3])).sorted() == [1, 5]


@given(graphs())
def test_closed_neighbourhood_contains_vertex(g):
    for v in range(g.n):
        assert g.closed_nbhd(v) >> v & 1
        assert not g.bits[v] >> v & 1
        for w in g.adj[v]:
            assert g.has_edge(w, v)


@given(graphs())
def test_components_partition_and_no_cross_edges(g):
    comps = components(g)
    owner = {}
    for i, c in enumerate(comps):
        for v in c:
            assert v not in owner
            owner[v] = i
    assert sorted(owner) == list(range(g.n))
    for u, v in g.edges():
        assert owner[u] == owner[v]


@given(graphs())
def test_bipartition_and_odd_cycle_agree(g):
    sides = bipartition(g)
    cyc = find_odd_cycle(g)
    assert (sides is None) == (cyc is not None)
    if sides is not None:
        a, b = sides
        assert is_id_set(g, a).independent and is_id_set(g, b).independent
        assert (a | b).mask == g.all_mask and not (a & b).mask
    else:
        _assert_odd_cycle(g, cyc)


@given(graphs(), st.data())
def test_remove_vertices_preserves_adjacency(g, data):
    drop = data.draw(st.sets(st.integers(0, g.n - 1)))
    sub, index = remove_vertices(g, drop)
    assert sub.n == g.n - len(drop)
    assert len(set(index.values())) == len(index)
    for u in index:
        for v in index:
            assert g.has_edge(u, v) == sub.has_edge(index[u], index[v])


@settings(max_examples=50)
@given(graphs())
def test_empty_removal_is_identity(g):
    sub, index = remove_vertices(g, [])
    assert sub == g
    assert all(k == v for k, v in index.items())


def test_is_id_set_matches_naive_reference():
    rng = random.Random(20261016)
    for _ in range(1000):
        n = rng.randint(2, 12)
        g = random_subcubic(n, rng, density=rng.random())
        s = [v for v in range(n) if rng.random() < 0.4]
        assert tuple(is_id_set(g, s)) == naive_is_id_set(g, s)
