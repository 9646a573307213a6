from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from squco import (DistanceLayers, GraphError, INFINITE_GIRTH, MAX_ORDER,
                   bfs_layers, complement, degree_sequence, girth, is_biconnected,
                   is_bipartite, is_connected, is_regular, make_graph,
                   radius_diameter, square)

from conftest import complete, cycle, path, random_graph, star
from oracles import floyd_warshall, girth_by_cycle_enumeration


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    npairs = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << npairs) - 1 if npairs else 0))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return make_graph(n, [pairs[k] for k in range(npairs) if mask >> k & 1])


class TestMakeGraph:
    def test_k1(self):
        g = make_graph(1, [])
        assert g.n == 1 and g.edge_count() == 0

    def test_k3(self):
        g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.edge_count() == 3
        assert degree_sequence(g) == (2, 2, 2)

    def test_duplicate_edges_collapse(self):
        g = make_graph(4, [(0, 1), (0, 1), (2, 3)])
        assert g.edge_count() == 2
        assert g.edges() == [(0, 1), (2, 3)]

    def test_reversed_duplicate_collapses(self):
        g = make_graph(3, [(0, 1), (1, 0)])
        assert g.edge_count() == 1

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            make_graph(3, [(0, 3)])
        with pytest.raises(GraphError):
            make_graph(2, [(-1, 0)])

    def test_rejects_loop(self):
        with pytest.raises(GraphError):
            make_graph(3, [(1, 1)])

    def test_rejects_excess_order(self):
        with pytest.raises(GraphError):
            make_graph(MAX_ORDER + 1, [])
        make_graph(MAX_ORDER, [])  # boundary is fine

    @given(graphs())
    def test_symmetric_zero_diagonal(self, g):
        for v in range(g.n):
            assert not g.adj[v] >> v & 1
            for u in range(g.n):
                assert g.has_edge(u, v) == g.has_edge(v, u)


class TestComplement:
    def test_complement_k3_empty(self):
        assert complement(complete(3)).edge_count() == 0

    def test_c6_complement_cubic(self):
        assert degree_sequence(complement(cycle(6))) == (3,) * 6

    @given(graphs())
    def test_involution_exact(self, g):
        assert complement(complement(g)) == g

    @given(graphs())
    def test_degree_identity(self, g):
        co = complement(g)
        for v in range(g.n):
            assert co.degree(v) == g.n - 1 - g.degree(v)


class TestSquare:
    def test_square_p4(self):
        sq = square(path(4))
        assert sorted(sq.edges()) == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        assert not sq.has_edge(0, 3)

    def test_square_c7_regular(self):
        sq = square(cycle(7))
        assert degree_sequence(sq) == (4,) * 7
        for i in range(7):
            for d in (1, 2):
                assert sq.has_edge(i, (i + d) % 7)

    def test_square_k1(self):
        g = make_graph(1, [])
        assert square(g) == g

    @given(graphs())
    @settings(max_examples=150)
    def test_square_matches_distance_predicate(self, g):
        sq = square(g)
        for v in range(g.n):
            layers = bfs_layers(g, v)
            for u in range(g.n):
                want = u != v and layers.dist[u] in (1, 2)
                assert sq.has_edge(u, v) == want


class TestBfsLayers:
    def test_c7_layers(self):
        layers = bfs_layers(cycle(7), 0)
        assert layers.layers == ((0,), (1, 6), (2, 5), (3, 4))
        assert max(d for d in layers.dist) == 3

    def test_star_layers(self):
        layers = bfs_layers(star(4), 0)
        assert tuple(len(x) for x in layers.layers) == (1, 3)

    def test_disconnected_unreachable(self):
        layers = bfs_layers(make_graph(2, []), 0)
        assert layers.dist[1] is None
        assert layers.layers == ((0,),)

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            bfs_layers(make_graph(2, []), 2)

    @given(graphs())
    def test_matches_floyd_warshall(self, g):
        fw = floyd_warshall(g)
        for v in range(g.n):
            layers = bfs_layers(g, v)
            for u in range(g.n):
                want = fw[v][u]
                got = layers.dist[u]
                assert (got is None and want == math.inf) or got == want

    @given(graphs())
    def test_layer_structure(self, g):
        for v in range(g.n):
            layers = bfs_layers(g, v)
            assert layers.layers[0] == (v,)
            placed = [u for layer in layers.layers for u in layer]
            assert len(placed) == len(set(placed))
            assert set(placed) == {u for u in range(g.n) if layers.dist[u] is not None}
            for i, layer in enumerate(layers.layers):
                if i == 0:
                    continue
                for u in layer:
                    back = [w for w in g.neighbors(u) if layers.dist[w] == i - 1]
                    assert back
                    assert all(layers.dist[w] is not None and layers.dist[w] >= i - 1
                               for w in g.neighbors(u))

    @given(graphs())
    def test_at_least_identity(self, g):
        if g.n == 0 or not is_connected(g):
            return
        for v in range(g.n):
            layers = bfs_layers(g, v)
            n1 = len(layers.layers[1]) if len(layers.layers) > 1 else 0
            n2 = len(layers.layers[2]) if len(layers.layers) > 2 else 0
            assert layers.at_least(3) == g.n - 1 - n1 - n2


class TestGirth:
    def test_c7(self):
        assert girth(cycle(7)) == 7

    def test_tree_infinite(self):
        assert girth(path(6)) == INFINITE_GIRTH
        assert girth(make_graph(1, [])) == INFINITE_GIRTH

    def test_franklin_girth4(self):
        from squco import named
        assert girth(named("franklin")) == 4

    def test_triangle_with_tail(self):
        assert girth(make_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])) == 3

    def test_corpus_matches_cycle_enumeration(self, corpus):
        for g in corpus:
            if g.n <= 8:
                assert girth(g) == girth_by_cycle_enumeration(g), g.edges()

    def test_random_matches_cycle_enumeration(self):
        rng = random.Random(7)
        for _ in range(150):
            g = random_graph(rng, rng.randint(0, 8), rng.choice([0.15, 0.3, 0.6]))
            assert girth(g) == girth_by_cycle_enumeration(g), g.edges()


class TestRadiusDiameter:
    def test_c7(self):
        assert radius_diameter(cycle(7)) == (3, 3)

    def test_franklin(self):
        from squco import named
        assert radius_diameter(named("franklin")) == (3, 3)

    def test_disconnected(self):
        assert radius_diameter(make_graph(2, [])) is None

    def test_path(self):
        assert radius_diameter(path(4)) == (2, 3)

    @given(graphs())
    def test_matches_floyd_warshall(self, g):
        rd = radius_diameter(g)
        fw = floyd_warshall(g)
        if g.n == 0 or any(fw[i][j] == math.inf for i in range(g.n) for j in range(g.n)):
            assert rd is None
        else:
            eccs = [max(fw[i]) for i in range(g.n)]
            assert rd == (int(min(eccs)), int(max(eccs)))


class TestBiconnected:
    def test_cycle_biconnected(self):
        assert is_biconnected(cycle(7)) == (True, frozenset())

    def test_p3_cut_vertex(self):
        assert is_biconnected(path(3)) == (True, frozenset({1}))

    def test_two_k1(self):
        assert is_biconnected(make_graph(2, [])) == (False, frozenset())

    def test_bowtie(self):
        g = make_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        assert is_biconnected(g) == (True, frozenset({2}))

    @given(graphs(max_n=8))
    def test_matches_removal_definition(self, g):
        conn, cuts = is_biconnected(g)
        assert conn == is_connected(g)
        for v in range(g.n):
            rest = [u for u in range(g.n) if u != v]
            idx = {u: i for i, u in enumerate(rest)}
            sub = make_graph(g.n - 1, [(idx[a], idx[b]) for a, b in g.edges()
                                       if a != v and b != v])
            # v is a cut vertex iff removing it splits its own component
            comp_v = {u for u in range(g.n) if bfs_layers(g, v).dist[u] is not None}
            if len(comp_v) <= 2:
                expected = False
            else:
                others = comp_v - {v}
                anchor = idx[min(others)]
                reach = {rest[u] for u in range(sub.n)
                         if bfs_layers(sub, anchor).dist[u] is not None}
                expected = others - reach != set()
            assert (v in cuts) == expected, (g.edges(), v)


class TestDegreesAndColoring:
    def test_degree_sequence_examples(self):
        assert degree_sequence(cycle(7)) == (2,) * 7
        assert degree_sequence(star(4)) == (3, 1, 1, 1)

    def test_franklin_cubic(self):
        from squco import named
        assert degree_sequence(named("franklin")) == (3,) * 12

    def test_regular(self):
        assert is_regular(cycle(5))
        assert not is_regular(path(3))

    def test_bipartite(self):
        assert is_bipartite(cycle(6))
        assert not is_bipartite(cycle(7))
        assert is_bipartite(make_graph(0, []))
        assert is_bipartite(path(5))
