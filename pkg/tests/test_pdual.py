from itertools import combinations

import pytest

from ribbonpd import (
    bouquet_bn,
    check_merge_split,
    check_up_conditions,
    enumerate_diagrams,
    is_isomorphic,
    parse_word,
    partial_dual,
    partial_dual_reference,
    spanning_boundary_count,
    stats,
    to_ribbon_graph,
    tree_path,
    tree_star,
)
from ribbonpd.core import CROSS_THEN_ROTATE, ROTATE_THEN_CROSS

from conftest import random_connected_graph

TYPE_DELTAS = {"pp": (-1, -1, 1), "uu": (1, 1, -1), "pu": (-1, 1, 0), "up": (1, -1, 0)}
FLIP = str.maketrans("pu", "up")


def all_subsets(m):
    for r in range(m + 1):
        yield from (list(c) for c in combinations(range(m), r))


def one_vertex_graphs(max_n):
    for n in range(1, max_n + 1):
        for d in enumerate_diagrams(n):
            yield to_ribbon_graph(d)


class TestSpanningBoundaryCount:
    def test_fixtures(self):
        b3 = bouquet_bn(3)
        assert spanning_boundary_count(b3, []) == 1
        assert spanning_boundary_count(b3, [0, 1, 2]) == 2
        assert spanning_boundary_count(tree_path(2), [0, 1]) == 1

    def test_unknown_edge(self):
        with pytest.raises(ValueError, match="unknown edge"):
            spanning_boundary_count(bouquet_bn(2), [5])

    def test_conventions_agree(self, rng):
        for g in [bouquet_bn(3), tree_star(3), random_connected_graph(rng, 4, 2)]:
            for a in all_subsets(g.num_edges):
                assert spanning_boundary_count(g, a, CROSS_THEN_ROTATE) == spanning_boundary_count(
                    g, a, ROTATE_THEN_CROSS
                )

    def test_counts_vertices_of_dual(self, rng):
        fixtures = [bouquet_bn(3), tree_path(3), random_connected_graph(rng, 4, 3)]
        for g in fixtures:
            for a in all_subsets(g.num_edges):
                assert partial_dual(g, a).num_vertices == spanning_boundary_count(g, a)

    def test_counts_faces_via_complement(self, rng):
        fixtures = [bouquet_bn(3), tree_path(3), random_connected_graph(rng, 4, 3)]
        for g in fixtures:
            for a in all_subsets(g.num_edges):
                comp = [e for e in range(g.num_edges) if e not in a]
                assert stats(partial_dual(g, a)).f == spanning_boundary_count(g, comp)


class TestPartialDual:
    def test_identity(self, rng):
        fixtures = [bouquet_bn(3), tree_path(2), to_ribbon_graph(parse_word("BABCAC"))]
        fixtures += [random_connected_graph(rng, 4, 2) for _ in range(3)]
        for g in fixtures:
            assert is_isomorphic(g, partial_dual(g, []))

    def test_middle_chord_gives_sphere(self):
        g = to_ribbon_graph(parse_word("BABCAC"))
        assert stats(partial_dual(g, [1])).genus == 0

    def test_full_dual_of_b2(self):
        s = stats(partial_dual(bouquet_bn(2), [0, 1]))
        assert (s.v, s.f, s.genus) == (1, 1, 1)

    def test_involution(self):
        for g in one_vertex_graphs(5):
            for a in all_subsets(g.num_edges):
                assert is_isomorphic(partial_dual(partial_dual(g, a), a), g)

    def test_involution_multi_vertex(self, rng):
        for _ in range(5):
            g = random_connected_graph(rng, 4, rng.randint(2, 4))
            for a in all_subsets(g.num_edges):
                assert is_isomorphic(partial_dual(partial_dual(g, a), a), g)

    def test_one_edge_at_a_time(self):
        for g in one_vertex_graphs(4):
            m = g.num_edges
            for a in all_subsets(m):
                for e in range(m):
                    if e in a:
                        continue
                    step = partial_dual(partial_dual(g, [e]), a)
                    assert is_isomorphic(partial_dual(g, a + [e]), step)

    def test_symmetric_difference(self):
        for g in one_vertex_graphs(4):
            m = g.num_edges
            subsets = list(all_subsets(m))
            for a in subsets:
                for b in subsets:
                    lhs = partial_dual(partial_dual(g, a), b)
                    sym = sorted(set(a) ^ set(b))
                    assert is_isomorphic(lhs, partial_dual(g, sym))

    def test_euler_duality_swaps_counts(self, rng):
        fixtures = [bouquet_bn(3), tree_star(3), to_ribbon_graph(parse_word("BABCAC"))]
        fixtures += [random_connected_graph(rng, 5, 3) for _ in range(5)]
        for g in fixtures:
            s0 = stats(g)
            s1 = stats(partial_dual(g, range(g.num_edges)))
            assert (s1.v, s1.f, s1.genus) == (s0.f, s0.v, s0.genus)

    def test_preserves_edge_labels(self):
        g = to_ribbon_graph(parse_word("BABCAC"))
        assert partial_dual(g, [1]).edge_names == g.edge_names

    def test_disconnected_rejected(self):
        from ribbonpd import DisconnectedGraphError, RibbonGraph

        g = RibbonGraph(((0, 1), (2, 3)), ((0, 1), (2, 3)))
        with pytest.raises(DisconnectedGraphError):
            partial_dual(g, [0])


class TestReferenceAgainstFast:
    def test_one_vertex_exhaustive(self):
        for g in one_vertex_graphs(4):
            for a in all_subsets(g.num_edges):
                assert partial_dual_reference(g, a) == partial_dual(g, a)

    def test_multi_vertex_random(self, rng):
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(1, 5), rng.randint(1, 4))
            for a in all_subsets(g.num_edges):
                assert partial_dual_reference(g, a) == partial_dual(g, a)


class TestEdgeType:
    def test_fixtures(self):
        from ribbonpd import edge_type

        b2, b3, star = bouquet_bn(2), bouquet_bn(3), tree_star(3)
        assert all(edge_type(b2, e) == "uu" for e in range(2))
        assert all(edge_type(b3, e) == "up" for e in range(3))
        assert all(edge_type(star, e) == "pu" for e in range(3))

    def test_unknown_edge(self):
        from ribbonpd import edge_type

        with pytest.raises(ValueError, match="unknown edge"):
            edge_type(bouquet_bn(2), 9)

    def test_genus_deltas_and_type_flip(self):
        from ribbonpd import edge_type

        for g in one_vertex_graphs(5):
            s0 = stats(g)
            for e in range(g.num_edges):
                t = edge_type(g, e)
                dual = partial_dual(g, [e])
                s1 = stats(dual)
                assert (s1.v - s0.v, s1.f - s0.f, s1.genus - s0.genus) == TYPE_DELTAS[t]
                assert edge_type(dual, e) == t.translate(FLIP)


class TestMergeSplit:
    def test_uu_loop(self):
        r = check_merge_split(bouquet_bn(2), 0)
        assert (r.dv, r.df) == (1, 1)

    def test_proper_tree_edge(self):
        r = check_merge_split(tree_path(1), 0)
        assert (r.dv, r.df) == (-1, 1)

    def test_up_loop(self):
        r = check_merge_split(bouquet_bn(3), 1)
        assert (r.dv, r.df) == (1, -1)


class TestUpConditions:
    def test_b5_clean(self):
        assert check_up_conditions(bouquet_bn(5)) == ()

    def test_b2_violates_distinct_faces(self):
        violations = check_up_conditions(bouquet_bn(2))
        assert (0, 1) in violations and (1, 1) in violations

    def test_path_pattern_violates_attachment(self):
        violations = check_up_conditions(to_ribbon_graph(parse_word("BABCAC")))
        assert any(cond in (2, 3) for _, cond in violations)

    def test_multi_vertex_rejected(self):
        with pytest.raises(ValueError, match="vertices"):
            check_up_conditions(tree_path(2))
