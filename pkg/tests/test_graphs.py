import itertools
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricgraph.graphs import (
    Graph,
    GraphFormatError,
    NotBipartiteError,
    bipartition,
    canonical_form,
    complete_bipartite,
    complete_core_graph,
    cycle_core_graph,
    cycle_graph,
    enumerate_cycles,
    graph_to_json,
    is_connected,
    jackson_min_edges,
    matching_number,
    max_edges_for_reg,
    parse_graph,
    parse_graph_json,
    path_graph,
    realizing_graph,
    star,
)


@st.composite
def bipartite_graphs(draw, max_a=3, max_b=4):
    a = draw(st.integers(1, max_a))
    b = draw(st.integers(1, max_b))
    mask = draw(st.integers(1, 2 ** (a * b) - 1))
    edges = tuple(
        (i, a + j) for i in range(a) for j in range(b) if (mask >> (i * b + j)) & 1
    )
    return Graph(a + b, edges)


def brute_force_cycles(g):
    """Independent cycle oracle: try every vertex subset and every ordering."""
    out = set()
    for k in range(3, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            s = subset[0]
            for perm in itertools.permutations(subset[1:]):
                if perm[0] > perm[-1]:
                    continue
                walk = (s,) + perm
                if all(
                    walk[(i + 1) % k] in g.neighbors[walk[i]] for i in range(k)
                ):
                    out.add(walk)
    return out


def brute_force_matching(g):
    best = 0
    for r in range(g.q, 0, -1):
        for sub in itertools.combinations(g.edges, r):
            used = [v for e in sub for v in e]
            if len(used) == len(set(used)):
                return r
    return best


class TestGraphType:
    def test_normalizes_and_validates(self):
        g = Graph(3, ((2, 0), (1, 2)))
        assert g.edges == ((0, 2), (1, 2))
        assert g.q == 2

    def test_rejects_loop(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(2, ((1, 1),))

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(2, ((0, 1), (1, 0)))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, ((0, 2),))


class TestParse:
    def test_single_edge(self):
        g = parse_graph("0 1")
        assert (g.n, g.q) == (2, 1)

    def test_four_cycle(self):
        g = parse_graph("0 1\n1 2\n2 3\n3 0\n")
        assert (g.n, g.q) == (4, 4)

    def test_comments_and_blanks(self):
        g = parse_graph("# a square\n0 1\n\n1 2  # chord next\n2 3\n3 0\n")
        assert (g.n, g.q) == (4, 4)

    def test_labels_compact_in_first_occurrence_order(self):
        g = parse_graph("5 7\n7 9\n")
        assert g.n == 3
        assert g.edges == ((0, 1), (1, 2))

    def test_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="loop"):
            parse_graph("0 0")

    def test_duplicate_rejected(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            parse_graph("0 1\n1 0\n")

    def test_malformed_rejected(self):
        with pytest.raises(GraphFormatError):
            parse_graph("0 1 2")
        with pytest.raises(GraphFormatError):
            parse_graph("a b")
        with pytest.raises(GraphFormatError):
            parse_graph("")

    def test_json_roundtrip(self):
        g = complete_bipartite(2, 3)
        assert parse_graph_json(graph_to_json(g)) == g

    def test_json_rejects_garbage(self):
        with pytest.raises(GraphFormatError):
            parse_graph_json("[1, 2]")
        with pytest.raises(GraphFormatError):
            parse_graph_json('{"n": 2, "edges": [[0, 0]]}')


class TestBipartition:
    def test_c4(self):
        parts = bipartition(cycle_graph(4))
        assert sorted(map(len, (parts.part_a, parts.part_b))) == [2, 2]

    def test_k23(self):
        parts = bipartition(complete_bipartite(2, 3))
        assert sorted(map(len, (parts.part_a, parts.part_b))) == [2, 3]

    def test_triangle_raises(self):
        with pytest.raises(NotBipartiteError):
            bipartition(cycle_graph(3))

    def test_every_edge_crosses(self):
        g = cycle_core_graph(8, 2, 3)
        parts = bipartition(g)
        a = set(parts.part_a)
        assert all((u in a) != (v in a) for u, v in g.edges)


class TestConnectivity:
    def test_path_connected(self):
        assert is_connected(path_graph(4))

    def test_two_disjoint_edges(self):
        assert not is_connected(Graph(4, ((0, 1), (2, 3))))

    def test_k33(self):
        assert is_connected(complete_bipartite(3, 3))

    def test_single_vertex(self):
        assert is_connected(Graph(1, ()))


class TestEnumerateCycles:
    def test_tree_has_none(self):
        assert enumerate_cycles(star(5)) == ()
        assert enumerate_cycles(path_graph(5)) == ()

    def test_k23_matches_brute_force(self):
        g = complete_bipartite(2, 3)
        got = enumerate_cycles(g)
        assert len(got) == 3
        assert all(c.length == 4 for c in got)
        assert {c.vertices for c in got} == brute_force_cycles(g)

    def test_k45_closed_form_counts(self):
        # 2k-cycles of K_{a,b}: C(a,k) C(b,k) k! (k-1)! / 2
        g = complete_bipartite(4, 5)
        got = enumerate_cycles(g)
        by_len = {}
        for c in got:
            by_len[c.length] = by_len.get(c.length, 0) + 1
        expected = {
            2 * k: comb(4, k) * comb(5, k) * factorial(k) * factorial(k - 1) // 2
            for k in range(2, 5)
        }
        assert by_len == expected
        assert len(got) == 660

    def test_canonical_rooting(self):
        g = complete_bipartite(3, 3)
        for c in enumerate_cycles(g):
            assert c.vertices[0] == min(c.vertices)
            assert c.vertices[1] < c.vertices[-1]
            assert len(set(c.edge_indices)) == c.length

    @settings(max_examples=60, deadline=None)
    @given(bipartite_graphs())
    def test_bipartite_cycles_even_and_complete(self, g):
        got = enumerate_cycles(g)
        assert all(c.length % 2 == 0 for c in got)
        assert {c.vertices for c in got} == brute_force_cycles(g)


class TestMatching:
    def test_complete_bipartite(self):
        assert matching_number(complete_bipartite(2, 3)) == 2
        assert matching_number(complete_bipartite(4, 4)) == 4

    def test_cycle_and_path(self):
        assert matching_number(cycle_graph(6)) == 3
        assert matching_number(path_graph(4)) == 2

    def test_not_bipartite(self):
        with pytest.raises(NotBipartiteError):
            matching_number(cycle_graph(5))

    @settings(max_examples=60, deadline=None)
    @given(bipartite_graphs())
    def test_matches_brute_force_and_bound(self, g):
        mat = matching_number(g)
        assert mat == brute_force_matching(g)
        assert mat <= g.n // 2


class TestFamilies:
    def test_k22(self):
        g = complete_bipartite(2, 2)
        assert (g.n, g.q) == (4, 4)

    def test_c6(self):
        g = cycle_graph(6)
        assert (g.n, g.q) == (6, 6)
        assert g.edges[0] == (0, 1)

    def test_star4(self):
        g = star(4)
        assert (g.n, g.q) == (4, 3)

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            complete_bipartite(0, 2)
        with pytest.raises(ValueError):
            cycle_graph(2)
        with pytest.raises(ValueError):
            star(1)


class TestWitnessConstructions:
    def test_figure_cases(self):
        g = cycle_core_graph(10, 3, 2)
        assert (g.n, g.q) == (10, 11)
        h = complete_core_graph(10, 3, 12)
        assert (h.n, h.q) == (10, 21)

    def test_degenerate_cases_are_c4(self):
        c4 = canonical_form(cycle_graph(4))
        assert canonical_form(cycle_core_graph(4, 1, 1)) == c4
        assert canonical_form(complete_core_graph(4, 1, 1)) == c4

    def test_cycle_core_contains_its_core_cycle(self):
        g = cycle_core_graph(10, 3, 2)
        lengths = {c.length for c in enumerate_cycles(g)}
        assert 8 in lengths  # the 2r+2 core

    def test_complete_core_contains_block(self):
        g = complete_core_graph(9, 2, 5)
        block = {(u, v) for u in range(3) for v in range(3, 6)}
        assert block <= set(g.edges)

    @pytest.mark.parametrize("n", range(4, 11))
    def test_edge_count_connected_bipartite(self, n):
        for r in range(1, n // 2):
            for p in range(1, r * r + 1):
                g = cycle_core_graph(n, r, p)
                assert (g.n, g.q) == (n, n + p - 1)
                assert is_connected(g)
                bipartition(g)
            for p in range(r * r, r * (n - 2 - r) + 1):
                g = complete_core_graph(n, r, p)
                assert (g.n, g.q) == (n, n + p - 1)
                assert is_connected(g)
                bipartition(g)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            cycle_core_graph(10, 3, 10)  # p > r^2
        with pytest.raises(ValueError):
            cycle_core_graph(10, 5, 1)  # r >= floor(n/2)
        with pytest.raises(ValueError):
            complete_core_graph(10, 3, 8)  # p < r^2
        with pytest.raises(ValueError):
            complete_core_graph(10, 3, 16)  # p > r(n-2-r)
        with pytest.raises(ValueError):
            cycle_core_graph(3, 1, 1)  # n < 4

    def test_realizing_graph(self):
        assert realizing_graph(0, 0).edges == ((0, 1),)
        assert canonical_form(realizing_graph(1, 1)) == canonical_form(cycle_graph(4))
        g = realizing_graph(2, 7)
        assert g.n == 11
        with pytest.raises(ValueError):
            realizing_graph(0, 1)
        with pytest.raises(ValueError):
            realizing_graph(3, 0)

    def test_guard_inequality(self):
        # r <= floor(n/2) - 1 forces n - 2 - 2r >= 0
        for n in range(2, 40):
            for r in range(0, n // 2):
                assert n - 2 - 2 * r >= 0


class TestBounds:
    def test_jackson_values(self):
        assert jackson_min_edges(2, 2, 3) == 4
        # both branches coincide at the overlap a = 2m-2
        assert jackson_min_edges(2, 2, 2) == 3
        assert jackson_min_edges(3, 4, 4) == 10

    def test_jackson_validation(self):
        with pytest.raises(ValueError):
            jackson_min_edges(1, 2, 2)
        with pytest.raises(ValueError):
            jackson_min_edges(3, 2, 4)

    def test_jackson_sound_exhaustively(self):
        # every bipartite graph with parts (a, b), a <= 3, b <= 4, and more
        # than the threshold many edges contains a cycle of length >= 2m
        for a in range(2, 4):
            for b in range(a, 5):
                for m in range(2, a + 1):
                    threshold = jackson_min_edges(m, a, b)
                    for mask in range(1 << (a * b)):
                        if bin(mask).count("1") <= threshold:
                            continue
                        edges = tuple(
                            (i, a + j)
                            for i in range(a)
                            for j in range(b)
                            if (mask >> (i * b + j)) & 1
                        )
                        g = Graph(a + b, edges)
                        longest = max(
                            (c.length for c in enumerate_cycles(g)), default=0
                        )
                        assert longest >= 2 * m, (m, a, b, edges)

    def test_max_edges_for_reg(self):
        assert max_edges_for_reg(0, 7) == 6  # trees
        assert max_edges_for_reg(3, 8) == 16  # K_{4,4}
        assert max_edges_for_reg(3, 10) == 24


class TestCanonicalForm:
    def test_relabelings_of_c6_agree(self):
        g = cycle_graph(6)
        code = canonical_form(g)
        for perm in itertools.islice(itertools.permutations(range(6)), 0, 720, 37):
            relabeled = Graph(6, tuple((perm[u], perm[v]) for u, v in g.edges))
            assert canonical_form(relabeled) == code

    def test_distinct_graphs_differ(self):
        assert canonical_form(cycle_graph(6)) != canonical_form(complete_bipartite(3, 3))
        assert canonical_form(path_graph(4)) != canonical_form(star(4))

    def test_k23_minus_any_edge_all_agree(self):
        g = complete_bipartite(2, 3)
        codes = set()
        for drop in range(g.q):
            edges = g.edges[:drop] + g.edges[drop + 1:]
            codes.add(canonical_form(Graph(5, edges)))
        assert len(codes) == 1

    def test_fallback_paths(self):
        # non-bipartite and disconnected graphs take the all-permutation path
        tri = cycle_graph(3)
        relabeled = Graph(3, ((1, 2), (0, 2), (0, 1)))
        assert canonical_form(tri) == canonical_form(relabeled)
        d1 = Graph(4, ((0, 1), (2, 3)))
        d2 = Graph(4, ((0, 2), (1, 3)))
        assert canonical_form(d1) == canonical_form(d2)
        assert canonical_form(d1) != canonical_form(path_graph(4))

    @settings(max_examples=40, deadline=None)
    @given(bipartite_graphs(max_a=3, max_b=3), st.randoms())
    def test_relabeling_invariance(self, g, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabeled = Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))
        assert canonical_form(relabeled) == canonical_form(g)

    def test_large_twin_classes_stay_cheap(self):
        # 9 leaves of star(10) share one neighborhood: one arrangement, not 9!
        code = canonical_form(star(10))
        shifted = Graph(10, tuple((9, k) for k in range(9)))
        assert canonical_form(shifted) == code
        assert canonical_form(complete_bipartite(5, 5)) != code
