import json

import pytest

from edgeideals.digraphs import (
    GraphClassTag,
    WeightedDigraph,
    check_hypotheses,
    classify,
    components,
    delete_edge,
    delete_vertex,
    edge_ideal,
    normalize_source_weights,
    random_instance,
)
from edgeideals.fixtures import FIXTURES
from edgeideals.monomials import parse_ideal


def cycle_graph(n, weight=2):
    names = [f"x{i}" for i in range(1, n + 1)]
    edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return WeightedDigraph([(nm, weight) for nm in names], edges)


class TestBasics:
    def test_cycle_degrees(self):
        D = cycle_graph(3)
        assert all(D.degree(v) == 2 for v in D.vertex_names())

    def test_isolated_vertex_degree(self):
        D = WeightedDigraph([("a", 1)], [])
        assert D.degree("a") == 0

    def test_star_center_degree(self):
        D = WeightedDigraph(
            [("c", 1), ("l1", 2), ("l2", 2), ("l3", 2)],
            [("c", "l1"), ("c", "l2"), ("c", "l3")],
        )
        assert D.degree("c") == 3

    def test_unknown_vertex_rejected(self):
        with pytest.raises(ValueError, match="unknown"):
            cycle_graph(3).degree("nope")

    def test_bidirected_edge_rejected(self):
        with pytest.raises(ValueError, match="bidirected"):
            WeightedDigraph([("a", 1), ("b", 1)], [("a", "b"), ("b", "a")])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            WeightedDigraph([("a", 1)], [("a", "a")])

    def test_degree_sum_is_twice_edge_count(self):
        for seed in range(5):
            D = random_instance(
                GraphClassTag.UNICYCLIC_ATTACHED, cycle_len=4, extra_vertices=3, seed=seed
            )
            assert sum(D.degree(v) for v in D.vertex_names()) == 2 * len(D.edges)


class TestNormalize:
    def test_source_weight_reset(self):
        D = WeightedDigraph([("a", 5), ("b", 2)], [("a", "b")])
        N = normalize_source_weights(D)
        assert N.weight("a") == 1 and N.weight("b") == 2

    def test_cycle_unchanged(self):
        D = cycle_graph(4, weight=3)
        assert normalize_source_weights(D) == D

    def test_isolated_vertex_not_a_source(self):
        D = WeightedDigraph([("a", 7), ("b", 1), ("c", 2)], [("b", "c")])
        N = normalize_source_weights(D)
        assert N.weight("a") == 7

    def test_idempotent(self):
        D = WeightedDigraph([("a", 5), ("b", 2)], [("a", "b")])
        N = normalize_source_weights(D)
        assert normalize_source_weights(N) == N

    def test_edge_ideal_ignores_source_weights(self):
        D = WeightedDigraph([("a", 5), ("b", 2)], [("a", "b")])
        assert set(edge_ideal(D).generators) == set(edge_ideal(normalize_source_weights(D)).generators)


class TestEdgeIdeal:
    def test_weighted_cycle(self):
        D = FIXTURES["2.9"].graph
        assert set(edge_ideal(D).generators) == set(
            parse_ideal("(x1*x2^3, x2*x3^2, x3*x4^4, x4*x1^5)").generators
        )

    def test_single_edge_weight_one(self):
        D = WeightedDigraph([("a", 1), ("b", 1)], [("a", "b")])
        assert str(edge_ideal(D)) == "(a*b)"

    def test_counterexample_fixture_ideal(self):
        D = FIXTURES["3.4"].graph
        expected = parse_ideal(
            "(x1*x2^2, x2*x3^2, x3*x4^2, x4*x5^2, x5*x1^2, x1*x6, x6*x7, x7*x8^2)"
        )
        assert set(edge_ideal(D).generators) == set(expected.generators)

    def test_empty_edges_warns_and_returns_zero(self):
        D = WeightedDigraph([("a", 1)], [])
        with pytest.warns(UserWarning, match="no edges"):
            assert edge_ideal(D).is_zero()

    def test_generator_count_equals_edge_count(self):
        for seed in range(5):
            D = random_instance(GraphClassTag.ROOTED_FOREST, extra_vertices=7, seed=seed)
            assert len(edge_ideal(D).generators) == len(D.edges)

    def test_delete_edge_removes_exactly_one_generator(self):
        D = FIXTURES["2.9"].graph
        e = D.edges[0]
        full = set(edge_ideal(D).generators)
        reduced = set(edge_ideal(delete_edge(D, e)).generators)
        assert reduced < full and len(full - reduced) == 1


class TestClassify:
    def test_directed_path_is_rooted_forest(self):
        D = WeightedDigraph([("a", 1), ("b", 2), ("c", 2)], [("a", "b"), ("b", "c")])
        cls = classify(D)
        assert cls.tag is GraphClassTag.ROOTED_FOREST
        assert cls.witness == ("a",)

    def test_cycle_is_oriented_cycle(self):
        cls = classify(cycle_graph(5))
        assert cls.tag is GraphClassTag.ORIENTED_CYCLE
        assert set(cls.witness) == {f"x{i}" for i in range(1, 6)}

    def test_attached_tail_is_unicyclic_attached(self):
        cls = classify(FIXTURES["3.4"].graph)
        assert cls.tag is GraphClassTag.UNICYCLIC_ATTACHED

    def test_against_cycle_orientation_is_other(self):
        assert classify(FIXTURES["3.6"].graph).tag is GraphClassTag.OTHER
        assert classify(FIXTURES["3.7"].graph).tag is GraphClassTag.OTHER

    def test_inward_tree_edge_is_other(self):
        D = WeightedDigraph([("a", 1), ("b", 2), ("c", 2)], [("a", "b"), ("c", "b")])
        assert classify(D).tag is GraphClassTag.OTHER

    def test_mixed_components_are_unicyclic_general(self):
        D = WeightedDigraph(
            [("x1", 2), ("x2", 2), ("x3", 2), ("a", 1), ("b", 2)],
            [("x1", "x2"), ("x2", "x3"), ("x3", "x1"), ("a", "b")],
        )
        assert classify(D).tag is GraphClassTag.UNICYCLIC_GENERAL

    def test_two_cycles_in_one_component_is_other(self):
        D = WeightedDigraph(
            [("a", 2), ("b", 2), ("c", 2), ("d", 2)],
            [("a", "b"), ("b", "c"), ("c", "a"), ("b", "d"), ("d", "c")],
        )
        assert classify(D).tag is GraphClassTag.OTHER


class TestHypotheses:
    def test_counterexample_violations(self):
        D = FIXTURES["3.4"].graph
        report = check_hypotheses(D, classify(D))
        assert set(report.violations) == {"x6", "x7"}
        assert not report.satisfied

    def test_cycle_all_weight_two_satisfied(self):
        D = cycle_graph(3)
        assert check_hypotheses(D, classify(D)).satisfied

    def test_cycle_weight_one_flagged(self):
        D = cycle_graph(3)
        D = WeightedDigraph([("x1", 1)] + list(D.vertices[1:]), D.edges)
        report = check_hypotheses(D, classify(D))
        assert report.violations == ("x1",)

    def test_single_edge_satisfied(self):
        D = WeightedDigraph([("a", 1), ("b", 3)], [("a", "b")])
        assert check_hypotheses(D, classify(D)).satisfied

    def test_star_root_source_exempt(self):
        D = WeightedDigraph(
            [("r", 1), ("y1", 2), ("y2", 2)], [("r", "y1"), ("r", "y2")]
        )
        assert check_hypotheses(D, classify(D)).satisfied


class TestComponents:
    def test_disjoint_union_splits(self):
        D = WeightedDigraph(
            [("x1", 2), ("x2", 2), ("x3", 2), ("a", 1), ("b", 2)],
            [("x1", "x2"), ("x2", "x3"), ("x3", "x1"), ("a", "b")],
        )
        comps = components(D)
        assert len(comps) == 2
        assert {len(c.vertices) for c in comps} == {3, 2}

    def test_connected_graph_is_one_component(self):
        D = cycle_graph(4)
        assert components(D) == [D]

    def test_empty_graph(self):
        assert components(WeightedDigraph([], [])) == []


class TestDeletions:
    def test_cycle_minus_edge_is_rooted_path(self):
        D = cycle_graph(4)
        e = D.edges[-1]
        cls = classify(delete_edge(D, e))
        assert cls.tag is GraphClassTag.ROOTED_FOREST

    def test_delete_leaf_vertex_drops_one_edge(self):
        D = FIXTURES["3.4"].graph
        before = len(D.edges)
        assert len(delete_vertex(D, "x8").edges) == before - 1

    def test_delete_cycle_vertex_leaves_forest(self):
        D = FIXTURES["3.4"].graph
        cls = classify(delete_vertex(D, "x2"))
        assert cls.tag is GraphClassTag.ROOTED_FOREST

    def test_missing_edge_rejected(self):
        with pytest.raises(ValueError):
            delete_edge(cycle_graph(3), ("x1", "x3"))

    def test_missing_vertex_rejected(self):
        with pytest.raises(ValueError):
            delete_vertex(cycle_graph(3), "zz")


class TestRandomInstances:
    @pytest.mark.parametrize("tag,kwargs", [
        (GraphClassTag.ROOTED_FOREST, dict(extra_vertices=6)),
        (GraphClassTag.ORIENTED_CYCLE, dict(cycle_len=4)),
        (GraphClassTag.UNICYCLIC_ATTACHED, dict(cycle_len=3, extra_vertices=3)),
        (GraphClassTag.UNICYCLIC_GENERAL, dict(cycle_len=3, extra_vertices=4)),
    ])
    def test_classifies_as_requested(self, tag, kwargs):
        for seed in range(8):
            D = random_instance(tag, weight_range=(2, 4), seed=seed, **kwargs)
            assert classify(D).tag is tag
            assert check_hypotheses(D, classify(D)).satisfied

    def test_unicyclic_edge_count(self):
        D = random_instance(GraphClassTag.UNICYCLIC_ATTACHED, cycle_len=3, extra_vertices=3, seed=9)
        assert len(D.edges) == len(D.vertices)

    def test_forest_edge_count(self):
        D = random_instance(GraphClassTag.ROOTED_FOREST, extra_vertices=6, seed=1)
        assert len(D.edges) == len(D.vertices) - len(components(D))

    def test_deterministic_under_seed(self):
        a = random_instance(GraphClassTag.UNICYCLIC_ATTACHED, cycle_len=4, extra_vertices=2, seed=5)
        b = random_instance(GraphClassTag.UNICYCLIC_ATTACHED, cycle_len=4, extra_vertices=2, seed=5)
        assert a == b

    def test_seeds_vary_output(self):
        graphs = {
            random_instance(GraphClassTag.ROOTED_FOREST, extra_vertices=7, seed=s)
            for s in range(6)
        }
        assert len(graphs) > 1

    def test_unsatisfiable_params_rejected(self):
        with pytest.raises(ValueError):
            random_instance(GraphClassTag.ORIENTED_CYCLE, cycle_len=2, seed=0)
        with pytest.raises(ValueError):
            random_instance(GraphClassTag.ROOTED_FOREST, extra_vertices=1, seed=0)
        with pytest.raises(ValueError):
            random_instance(GraphClassTag.OTHER, cycle_len=3, seed=0)


class TestJson:
    def test_round_trip(self):
        D = FIXTURES["3.4"].graph
        again = WeightedDigraph.from_json(json.dumps(D.to_json_dict()))
        assert again == D

    def test_malformed_rejected(self):
        with pytest.raises(ValueError, match="malformed"):
            WeightedDigraph.from_json('{"vertices": [{"name": "a"}], "edges": []}')
