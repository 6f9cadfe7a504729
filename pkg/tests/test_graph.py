import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tdp.generators import (
    complete, cycle, gen_named, heawood, k33, moebius_ladder, petersen, prism,
    random_cubic, truncate,
)
from tdp.graph import (
    Graph, GraphError, NotCubicError, is_cubic, parse_edge_list, parse_graph6,
    read_graphs, serialize_edge_list, serialize_graph6, validate_cubic,
)

from conftest import bfs_girth, is_bipartite


def nx_graph(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def simple_graphs(draw, max_n=70):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if not pairs:
        return Graph.from_edges(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=60))
    return Graph.from_edges(n, chosen)


class TestGraph6:
    def test_k4(self):
        g = parse_graph6("C~")
        assert g.n == 4 and g.m == 6
        assert all(g.has_edge(i, j) for i in range(4) for j in range(4) if i != j)

    def test_single_vertex(self):
        g = parse_graph6("@")
        assert (g.n, g.m) == (1, 0)

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<C~") == parse_graph6("C~")

    @pytest.mark.parametrize("bad", ["", ">>graph7<<C~", "C", "C~~", "C\x7f", "~??"])
    def test_malformed(self, bad):
        with pytest.raises(GraphError):
            parse_graph6(bad)

    def test_matches_networkx_encoder(self):
        for g in [complete(4), petersen(), heawood(), prism(40), random_cubic(100, 3)]:
            ref = nx.to_graph6_bytes(nx_graph(g), header=False).decode().strip()
            assert serialize_graph6(g) == ref
            back = nx.from_graph6_bytes(ref.encode())
            assert sorted(tuple(sorted(e)) for e in back.edges()) == list(g.edges())

    def test_extended_size_field(self):
        g = cycle(63)
        s = serialize_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g

    def test_round_trip_random_cubic(self):
        for seed in range(100):
            g = random_cubic(2 * (2 + seed % 30), seed)
            s = serialize_graph6(g)
            assert serialize_graph6(parse_graph6(s)) == s
            assert parse_graph6(s) == g

    @given(simple_graphs())
    @settings(max_examples=150, deadline=None)
    def test_round_trip_property(self, g):
        assert parse_graph6(serialize_graph6(g)) == g


class TestEdgeList:
    def test_triangle(self):
        g = parse_edge_list("n 3\n0 1\n1 2\n0 2")
        assert g.n == 3 and list(g.edges()) == [(0, 1), (0, 2), (1, 2)]

    @pytest.mark.parametrize(
        "text", ["n 4\n0 0", "n 3\n0 3", "n 3\n0 1\n1 0", "0 1", "n x", "n 3\n0 1 2", ""]
    )
    def test_rejects(self, text):
        with pytest.raises(GraphError):
            parse_edge_list(text)

    def test_round_trip_heawood(self):
        g = heawood()
        assert parse_edge_list(serialize_edge_list(g)) == g

    @given(simple_graphs(max_n=20))
    @settings(max_examples=100, deadline=None)
    def test_round_trip_property(self, g):
        assert parse_edge_list(serialize_edge_list(g)) == g

    def test_read_graphs_multiline(self):
        text = "C~\n" + serialize_graph6(k33()) + "\n\n"
        assert read_graphs(text, "graph6") == [complete(4), k33()]


class TestGraphInvariants:
    @given(simple_graphs())
    @settings(max_examples=100, deadline=None)
    def test_symmetric_simple(self, g):
        for v, row in enumerate(g.adj):
            assert v not in row
            assert len(set(row)) == len(row)
            assert all(v in g.adj[u] for u in row)
        assert g.m == sum(len(r) for r in g.adj) // 2

    def test_asymmetric_rejected(self):
        with pytest.raises(GraphError):
            Graph(2, ((1,), ()))

    def test_adjacency_matrix(self):
        a = petersen().adjacency_matrix()
        assert (a == a.T).all() and a.sum() == 30 and a.trace() == 0


class TestValidateCubic:
    def test_k4(self):
        validate_cubic(complete(4))

    def test_c5(self):
        with pytest.raises(NotCubicError) as info:
            validate_cubic(cycle(5))
        assert (info.value.vertex, info.value.degree) == (0, 2)

    def test_heawood(self):
        validate_cubic(heawood())

    def test_empty(self):
        assert not is_cubic(Graph.from_edges(0, []))


class TestGenerators:
    def test_heawood(self):
        g = heawood()
        assert (g.n, g.m) == (14, 21)
        assert bfs_girth(g) == 6
        assert is_bipartite(g)
        assert nx.is_isomorphic(nx_graph(g), nx.heawood_graph())

    def test_petersen(self):
        assert nx.is_isomorphic(nx_graph(petersen()), nx.petersen_graph())

    def test_prism3(self):
        g = prism(3)
        assert (g.n, g.m) == (6, 9)
        assert g.has_edge(0, 1) and g.has_edge(1, 2) and g.has_edge(0, 2)
        assert g.has_edge(3, 4) and g.has_edge(4, 5) and g.has_edge(3, 5)
        assert all(g.has_edge(i, i + 3) for i in range(3))

    def test_cycle8(self):
        g = cycle(8)
        assert g.m == 8 and all(g.degree(v) == 2 for v in range(8)) and bfs_girth(g) == 8

    def test_moebius_ladder(self):
        assert nx.is_isomorphic(nx_graph(moebius_ladder(3)), nx_graph(k33()))
        for k in range(3, 9):
            g = moebius_ladder(k)
            validate_cubic(g)
            assert nx.is_isomorphic(nx_graph(g), nx.circulant_graph(2 * k, [1, k]))

    def test_gen_named(self):
        assert gen_named("k4") == complete(4)
        assert gen_named("prism", 5) == prism(5)
        assert gen_named("moebius-ladder", 4) == moebius_ladder(4)
        for bad in [("nope", None), ("prism", None), ("k4", 3), ("prism", 2), ("cycle", 2)]:
            with pytest.raises(GraphError):
                gen_named(*bad)

    def test_truncate_k4(self):
        g = truncate(complete(4))
        assert (g.n, g.m) == (12, 18)
        tri = sum(1 for a in range(12) for b in g.adj[a] for c in g.adj[b] if a < b < c and g.has_edge(a, c))
        assert tri == 4
        assert nx.is_isomorphic(nx_graph(g), nx.truncated_tetrahedron_graph())

    def test_truncate_properties(self):
        for seed in range(50):
            base = random_cubic(4 + 2 * (seed % 20), seed)
            g = truncate(base)
            validate_cubic(g)
            assert g.n == 3 * base.n and g.m == base.m + 3 * base.n
            for v in range(g.n):
                assert any(g.has_edge(a, b) for a in g.adj[v] for b in g.adj[v] if a < b)

    def test_truncate_rejects_non_cubic(self):
        with pytest.raises(GraphError):
            truncate(cycle(5))

    def test_random_cubic(self):
        assert random_cubic(4, 0) == complete(4)
        assert random_cubic(30, 7) == random_cubic(30, 7)
        for seed in range(30):
            validate_cubic(random_cubic(40, seed))
        with pytest.raises(GraphError):
            random_cubic(1001, 0)
        with pytest.raises(GraphError):
            random_cubic(2, 0)

    def test_random_cubic_retry_cap(self):
        with pytest.raises(GraphError, match="failed 0 times"):
            random_cubic(10, 0, max_retries=0)
