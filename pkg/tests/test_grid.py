"""Vertex ranking, adjacency, and induced-degree queries on [m]^k."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathpower import (
    InvalidVertexError,
    PathPower,
    SizeCapError,
    VertexSet,
    induced_max_degree,
)

G32 = PathPower(3, 2)


@pytest.mark.parametrize(
    "coords,rank",
    [((1, 1), 0), ((3, 1), 2), ((1, 2), 3), ((3, 3), 8), ((3, 2), 5)],
)
def test_rank_examples(coords, rank):
    assert G32.rank(coords) == rank
    assert G32.unrank(rank) == coords


def test_rank_rejects_bad_vertices():
    with pytest.raises(InvalidVertexError):
        G32.rank((0, 1))
    with pytest.raises(InvalidVertexError):
        G32.rank((1, 4))
    with pytest.raises(InvalidVertexError):
        G32.rank((1, 1, 1))
    with pytest.raises(InvalidVertexError):
        G32.unrank(9)
    with pytest.raises(InvalidVertexError):
        G32.unrank(-1)


def test_constructor_validation():
    with pytest.raises(ValueError):
        PathPower(1, 2)
    with pytest.raises(ValueError):
        PathPower(3, 0)
    with pytest.raises(SizeCapError):
        PathPower(10, 6, size_cap=65536)


def test_adjacency_examples():
    assert G32.adjacent((1, 1), (1, 2))
    assert not G32.adjacent((1, 1), (1, 1))
    assert not G32.adjacent((1, 1), (2, 2))
    with pytest.raises(InvalidVertexError):
        G32.adjacent((1, 1), (1, 1, 1))


def test_neighbors_sorted_by_rank():
    assert G32.neighbors((1, 1)) == [(2, 1), (1, 2)]
    assert G32.neighbors((2, 2)) == [(2, 1), (1, 2), (3, 2), (2, 3)]
    assert G32.neighbors((1, 2)) == [(1, 1), (2, 2), (1, 3)]


def test_neighbor_ranks_agree_with_neighbors():
    for r in range(G32.n_vertices):
        via_coords = [G32.rank(v) for v in G32.neighbors(G32.unrank(r))]
        assert G32.neighbor_ranks(r) == via_coords


@given(
    st.integers(min_value=2, max_value=6),
    st.integers(min_value=1, max_value=4),
    st.data(),
)
def test_rank_unrank_roundtrip(m, k, data):
    g = PathPower(m, k)
    r = data.draw(st.integers(min_value=0, max_value=g.n_vertices - 1))
    assert g.rank(g.unrank(r)) == r
    v = tuple(data.draw(st.integers(min_value=1, max_value=m)) for _ in range(k))
    assert g.unrank(g.rank(v)) == v


@pytest.mark.parametrize("m,k", [(2, 3), (3, 2), (4, 2), (5, 1), (3, 3)])
def test_degree_sum_matches_edge_count(m, k):
    g = PathPower(m, k)
    total = sum(len(g.neighbor_ranks(r)) for r in range(g.n_vertices))
    assert total == 2 * g.edge_count
    assert g.edge_count == k * (m - 1) * m ** (k - 1)


@pytest.mark.parametrize("m,k", [(2, 3), (3, 2), (4, 2), (5, 2)])
def test_adjacency_symmetric_irreflexive_bipartite(m, k):
    g = PathPower(m, k)
    for r in range(g.n_vertices):
        u = g.unrank(r)
        assert not g.adjacent(u, u)
        for s in g.neighbor_ranks(r):
            v = g.unrank(s)
            assert g.adjacent(u, v) and g.adjacent(v, u)
            # every edge joins opposite parities of the coordinate sum
            assert (sum(u) + sum(v)) % 2 == 1


def test_induced_max_degree_examples():
    p3 = PathPower(3, 1)
    whole = VertexSet(3, 1, ranks=range(3))
    assert induced_max_degree(whole, p3) == 2
    ends = VertexSet(3, 1, ranks=[0, 2])
    assert induced_max_degree(ends, p3) == 0
    all32 = VertexSet(3, 2, ranks=range(9))
    assert induced_max_degree(all32, G32) == 4
    with pytest.raises(ValueError):
        induced_max_degree(VertexSet(3, 1), p3)


def test_vertex_set_basics():
    s = VertexSet(3, 2)
    assert len(s) == 0
    s.add(4)
    s.add(7)
    s.add(4)
    assert len(s) == 2
    assert 4 in s and 7 in s and 5 not in s
    assert s.ranks() == [4, 7]
    s.discard(4)
    assert s.ranks() == [7]
    with pytest.raises(InvalidVertexError):
        s.add(9)
    with pytest.raises(InvalidVertexError):
        VertexSet(3, 2, bits=1 << 9)


def test_vertex_set_complement_and_copy():
    s = VertexSet(2, 2, ranks=[0, 3])
    c = s.complement()
    assert c.ranks() == [1, 2]
    assert s.copy() == s and s.copy() is not s
    assert s != c


def test_vertex_set_json_roundtrip():
    s = VertexSet(3, 2, ranks=[0, 2, 8])
    doc = json.loads(json.dumps(s.to_dict()))
    assert doc == {"m": 3, "k": 2, "ranks": [0, 2, 8]}
    assert VertexSet.from_dict(doc) == s
