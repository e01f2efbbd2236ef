import networkx as nx
import pytest

from p3game import (Graph, GraphError, NotBipartiteError, ParseError,
                    bipartition, components, cutvertices, cycle,
                    distances_from_set, graph_to_json_dict, induced_p3s,
                    mask_of, minimal_separators, parse_graph, path,
                    serialize_graph, star, vertices_of)
from p3game.families import enumerate_connected_graphs

from conftest import (naive_cutvertices, naive_minimal_separators,
                      random_connected_graph, to_nx)

P3 = parse_graph("0 1\n1 2")
P4 = path(4)
C4 = cycle(4)
K13 = star(3)


class TestParse:
    def test_two_edges_make_a_path(self):
        assert P3.n == 3
        assert P3.edges() == [(0, 1), (1, 2)]

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ParseError, match="duplicate edge"):
            parse_graph("0 1\n0 1")
        with pytest.raises(ParseError, match="duplicate edge"):
            parse_graph("0 1\n1 0")

    def test_self_loop_rejected(self):
        with pytest.raises(ParseError, match="self-loop"):
            parse_graph("0 0")

    def test_error_names_the_line(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_graph("0 1\n1 2\n2 2")

    def test_malformed_line(self):
        with pytest.raises(ParseError, match="expected"):
            parse_graph("0 1 2")
        with pytest.raises(ParseError, match="non-integer"):
            parse_graph("a b")

    def test_comments_and_blanks_ignored(self):
        g = parse_graph("# a path\n\n0 1\n1 2   # trailing\n")
        assert g == P3

    def test_json_format(self):
        g = parse_graph('{"format":"p3graph-v1","n":3,"edges":[[0,1],[1,2]]}')
        assert g == P3

    def test_json_allows_isolated_vertices(self):
        g = parse_graph('{"format":"p3graph-v1","n":1,"edges":[]}')
        assert g.n == 1 and g.m == 0

    def test_json_bad_format_tag(self):
        with pytest.raises(ParseError, match="p3graph-v1"):
            parse_graph('{"n":2,"edges":[[0,1]]}')

    def test_declared_n_too_small(self):
        with pytest.raises(ParseError, match="out of range"):
            parse_graph("# n 2\n0 1\n1 2")

    def test_round_trip_text(self):
        for g in (P3, P4, C4, K13, Graph(1, []), Graph(5, [(0, 4), (1, 2)])):
            assert parse_graph(serialize_graph(g)) == g
        # serializing a parse is canonical
        text = "1 2\n0 1\n"
        assert serialize_graph(parse_graph(text)) == "# n 3\n0 1\n1 2\n"

    def test_round_trip_json(self):
        import json
        for g in (P3, C4, Graph(1, [])):
            assert parse_graph(json.dumps(graph_to_json_dict(g))) == g


class TestBipartition:
    def test_path3(self):
        a, b = bipartition(P3)
        assert vertices_of(a) == (0, 2) and vertices_of(b) == (1,)

    def test_cycle4(self):
        a, b = bipartition(C4)
        assert vertices_of(a) == (0, 2) and vertices_of(b) == (1, 3)

    def test_triangle_gives_odd_cycle(self):
        with pytest.raises(NotBipartiteError) as exc:
            bipartition(Graph(3, [(0, 1), (1, 2), (0, 2)]))
        cyc = exc.value.odd_cycle
        assert len(cyc) == 3 and len(set(cyc)) == 3

    def test_odd_cycle_witness_is_a_cycle(self):
        g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)])
        with pytest.raises(NotBipartiteError) as exc:
            bipartition(g)
        cyc = exc.value.odd_cycle
        assert len(cyc) % 2 == 1
        for i, v in enumerate(cyc):
            assert g.has_edge(v, cyc[(i + 1) % len(cyc)])

    def test_classes_are_independent_sets(self, rng):
        for _ in range(25):
            n = rng.randint(2, 9)
            tree = nx.random_labeled_tree(n, seed=rng.randint(0, 10 ** 6))
            g = Graph(n, list(tree.edges()))
            a, b = bipartition(g)
            for u, v in g.edges():
                assert bool(a & mask_of([u])) != bool(a & mask_of([v]))

    def test_component_minimum_goes_to_side_a(self):
        g = Graph(4, [(0, 1), (2, 3)])
        a, _b = bipartition(g)
        assert mask_of([0]) & a and mask_of([2]) & a


class TestComponents:
    def test_path4_minus_b(self):
        assert components(P4, mask_of([1])) == [mask_of([0]), mask_of([2, 3])]

    def test_no_removal_gives_connected_components(self):
        g = Graph(5, [(0, 1), (2, 3)])
        assert components(g) == [mask_of([0, 1]), mask_of([2, 3]), mask_of([4])]

    def test_star_minus_center(self):
        assert components(K13, mask_of([0])) == [mask_of([1]), mask_of([2]), mask_of([3])]

    def test_partition_no_cross_edges(self, rng):
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(2, 9))
            removed = mask_of(v for v in range(g.n) if rng.random() < 0.3)
            comps = components(g, removed)
            union = 0
            for c in comps:
                assert union & c == 0
                union |= c
            assert union == g.full_mask & ~removed
            for i, c1 in enumerate(comps):
                for c2 in comps[i + 1:]:
                    for u in vertices_of(c1):
                        assert g.adj_mask[u] & c2 == 0


class TestDistances:
    def test_path4_from_end(self):
        assert distances_from_set(P4, mask_of([0])) == [0, 1, 2, 3]

    def test_empty_source_all_unreached(self):
        assert distances_from_set(P4, 0) == [None] * 4

    def test_cycle4_two_sources(self):
        assert distances_from_set(C4, mask_of([0, 1])) == [0, 0, 1, 1]

    def test_unreached_is_none_not_large(self):
        g = Graph(3, [(0, 1)])
        assert distances_from_set(g, mask_of([0])) == [0, 1, None]


class TestCutvertices:
    def test_fixed_vectors(self):
        assert vertices_of(cutvertices(P4)) == (1, 2)
        assert cutvertices(C4) == 0
        assert vertices_of(cutvertices(K13)) == (0,)

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            cutvertices(Graph(4, [(0, 1), (2, 3)]))

    def test_matches_definitional_brute_force_on_corpus(self):
        for n in range(2, 7):
            for g in enumerate_connected_graphs(n):
                expected = naive_cutvertices(to_nx(g))
                assert set(vertices_of(cutvertices(g))) == expected

    def test_matches_networkx_on_random_graphs(self, rng):
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(3, 10))
            expected = set(nx.articulation_points(to_nx(g)))
            assert set(vertices_of(cutvertices(g))) == expected


class TestMinimalSeparators:
    def test_path4(self):
        certs = minimal_separators(P4)
        assert [vertices_of(c.separator) for c in certs] == [(1,), (2,)]

    def test_cycle4(self):
        certs = minimal_separators(C4)
        assert [vertices_of(c.separator) for c in certs] == [(0, 2), (1, 3)]

    def test_edge_has_none(self):
        assert minimal_separators(Graph(2, [(0, 1)])) == []

    def test_cap_enforced(self):
        with pytest.raises(GraphError, match="capped"):
            minimal_separators(path(20))

    def test_certificates_are_sound(self):
        for g in (P4, C4, K13, cycle(6), path(6)):
            for cert in minimal_separators(g):
                assert len(cert.close_sides) >= 1
                assert list(cert.sides) == components(g, cert.separator)
                for i in cert.close_sides:
                    side = cert.sides[i]
                    assert (g.neighborhood_mask(side) & ~side) == cert.separator

    def test_matches_brute_force_on_corpus(self):
        for n in range(2, 7):
            for g in enumerate_connected_graphs(n):
                expected = naive_minimal_separators(to_nx(g))
                got = {frozenset(vertices_of(c.separator)) for c in minimal_separators(g)}
                assert got == expected

    def test_matches_brute_force_on_random_graphs(self, rng):
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(4, 9))
            expected = naive_minimal_separators(to_nx(g))
            got = {frozenset(vertices_of(c.separator)) for c in minimal_separators(g)}
            assert got == expected


class TestInducedP3s:
    def test_fixed_vectors(self):
        assert induced_p3s(P3) == [(0, 1, 2)]
        assert induced_p3s(Graph(2, [(0, 1)])) == []
        assert len(induced_p3s(C4)) == 4

    def test_matches_brute_force(self, rng):
        import itertools
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(3, 8))
            expected = set()
            for x, z, y in itertools.permutations(range(g.n), 3):
                if x < y and g.has_edge(x, z) and g.has_edge(z, y) and not g.has_edge(x, y):
                    expected.add((x, z, y))
            assert set(induced_p3s(g)) == expected
            # ends ascend, each triple listed once
            assert len(induced_p3s(g)) == len(set(induced_p3s(g)))
