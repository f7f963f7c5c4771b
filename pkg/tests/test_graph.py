import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import brute_clique_number, connected_graphs, floyd_warshall, random_connected_graph
from kvis.errors import GraphFormatError, SizeLimitError
from kvis.families import FamilySpec, generate
from kvis.graph import (Graph, VertexSet, all_pairs, clique_number, from_edge_list,
                        independence_number, is_independent, max_clique, to_edge_list)


def fam(name, **params):
    return generate(FamilySpec.of(name, **params))


class TestEdgeList:
    def test_simple(self):
        g = from_edge_list("0 1\n1 2")
        assert g.n == 3
        assert g.edges() == [(0, 1), (1, 2)]

    def test_duplicates_collapse(self):
        g = from_edge_list("0 1\n0 1\n1 0\n")
        assert g.n == 2 and g.m == 1

    def test_self_loop_names_line(self):
        with pytest.raises(GraphFormatError, match="line 1"):
            from_edge_list("3 3")

    def test_self_loop_later_line(self):
        with pytest.raises(GraphFormatError) as err:
            from_edge_list("# header\n0 1\n\n2 2\n")
        assert err.value.line == 4

    @pytest.mark.parametrize("text", ["0 x", "0 1.5", "a b", "0 1 2", "7"])
    def test_bad_tokens(self, text):
        with pytest.raises(GraphFormatError):
            from_edge_list(text)

    def test_comments_and_blank_lines(self):
        g = from_edge_list("c dimacs style comment\n# another\n\n 5 9 \n9 12\n")
        assert g.n == 3 and g.m == 2

    def test_reindexing_keeps_labels(self):
        g = from_edge_list("10 20\n20 5\n")
        assert g.labels == (10, 20, 5)
        assert g.edges() == [(0, 1), (1, 2)]
        assert [g.label(v) for v in range(3)] == [10, 20, 5]

    def test_round_trip(self):
        g = fam("petersen")
        h = from_edge_list(to_edge_list(g))
        assert h.m == g.m
        assert sorted(tuple(sorted((h.label(u), h.label(v)))) for u, v in h.edges()) == g.edges()

    def test_empty(self):
        assert from_edge_list("").n == 0


class TestGraph:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            Graph(2, (frozenset({1}), frozenset()))

    def test_vertex_set_iterates_sorted(self):
        s = VertexSet({9, 3, 5, 0})
        assert list(s) == [0, 3, 5, 9]
        assert VertexSet.from_mask(s.mask) == s

    def test_induced_subgraph(self):
        g = fam("cycle", n=6)
        h = g.induced_subgraph([0, 1, 2, 4])
        assert h.n == 4 and h.edges() == [(0, 1), (1, 2)]
        assert h.labels == (0, 1, 2, 4)


class TestAllPairs:
    def test_path(self):
        dm = all_pairs(fam("path", n=5))
        assert (dm.diameter, dm.girth, dm.min_degree, dm.max_degree) == (4, None, 1, 2)

    def test_petersen(self):
        dm = all_pairs(fam("petersen"))
        assert (dm.diameter, dm.girth, dm.min_degree, dm.max_degree) == (2, 5, 3, 3)

    def test_cycle(self):
        dm = all_pairs(fam("cycle", n=6))
        assert (dm.diameter, dm.girth) == (3, 6)

    def test_disconnected_sentinel(self):
        dm = all_pairs(from_edge_list("0 1\n2 3"))
        assert dm.dist[0][2] is None
        assert not dm.connected
        assert dm.diameter == 1

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_floyd_warshall(self, seed):
        rng = random.Random(seed)
        g = random_connected_graph(rng, rng.randint(1, 9), rng.random() * 0.6)
        dm = all_pairs(g)
        fw = floyd_warshall(g)
        assert [list(r) for r in dm.dist] == fw

    @given(connected_graphs(max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_metric_invariants(self, g):
        dm = all_pairs(g)
        d = dm.dist
        for u in range(g.n):
            assert d[u][u] == 0
            for v in range(g.n):
                assert d[u][v] == d[v][u]
                assert (d[u][v] == 1) == g.has_edge(u, v)
                for w in range(g.n):
                    assert d[u][w] <= d[u][v] + d[v][w]

    @given(connected_graphs(max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_girth_matches_brute_force(self, g):
        # shortest cycle through uv has length d_{G-uv}(u, v) + 1
        best = None
        for u, v in g.edges():
            h = Graph.from_edges(g.n, [e for e in g.edges() if e != (u, v)])
            duv = floyd_warshall(h)[u][v]
            if duv != float("inf"):
                best = duv + 1 if best is None else min(best, duv + 1)
        assert all_pairs(g).girth == best


class TestCliqueAndIndependence:
    def test_complete(self):
        assert clique_number(fam("complete", n=4)) == 4

    def test_petersen(self):
        g = fam("petersen")
        assert clique_number(g) == 2
        assert independence_number(g) == 4 == brute_clique_number(g.complement())

    def test_strong_product_clique(self):
        g = fam("strong_path_complete", r=5, s=3)
        assert clique_number(g) == brute_clique_number(g) == 6

    def test_path_and_cycle_alpha(self):
        assert independence_number(fam("path", n=5)) == 3
        assert independence_number(fam("cycle", n=6)) == 3

    def test_limit(self):
        with pytest.raises(SizeLimitError):
            clique_number(fam("path", n=70))
        assert clique_number(fam("path", n=70), limit=100) == 2

    def test_witness_is_clique(self):
        g = fam("corona_path", r=3, inner=FamilySpec.of("complete", n=3))
        c = max_clique(g)
        assert len(c) == 4
        assert all(g.has_edge(a, b) for a, b in combinations(c, 2))

    @given(connected_graphs(max_n=9))
    @settings(max_examples=80, deadline=None)
    def test_clique_is_alpha_of_complement(self, g):
        assert clique_number(g) == independence_number(g.complement()) == brute_clique_number(g)

    @given(connected_graphs(max_n=9))
    @settings(max_examples=40, deadline=None)
    def test_relabeling_invariance(self, g):
        perm = list(range(g.n))
        random.Random(g.m).shuffle(perm)
        h = g.relabel(perm)
        a, b = all_pairs(g), all_pairs(h)
        assert (a.diameter, a.girth, a.min_degree, a.max_degree) == \
               (b.diameter, b.girth, b.min_degree, b.max_degree)
        assert clique_number(g) == clique_number(h)
        assert independence_number(g) == independence_number(h)

    def test_is_independent(self):
        g = fam("path", n=4)
        assert is_independent(g, [0, 2])
        assert not is_independent(g, [1, 2])
