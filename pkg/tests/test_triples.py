import networkx as nx
import pytest
from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_edge_match

from thompsonf.trees import (
    CARET, LEAF, X0, X0I, X1, X1I, XB1, XB1I, apply_generator, catalan, enumerate_marked_forests, marked_forest,
    parse_marked_forest,
)
from thompsonf.triples import (
    TreeTriple, enumerate_triples, gamma_n, marked_to_triple, scattered_graph,
    scattered_to_gamma_key, scattered_vertex_multiplicity, triple_action, triple_count,
    triple_count_closed, triple_to_marked,
)


def test_marked_to_triple_examples():
    assert marked_to_triple(marked_forest([LEAF], 0)) == TreeTriple(LEAF, LEAF, LEAF)
    assert marked_to_triple(marked_forest([LEAF, LEAF], 0)) == TreeTriple(LEAF, LEAF, CARET)
    assert marked_to_triple(marked_forest([LEAF, LEAF], 1)) == TreeTriple(CARET, LEAF, LEAF)


@pytest.mark.parametrize("n", range(1, 8))
def test_marked_to_triple_is_a_bijection(n):
    triples = [marked_to_triple(f) for f in enumerate_marked_forests(n)]
    assert len(set(triples)) == len(triples) == len(enumerate_triples(n + 2))
    for f in enumerate_marked_forests(n):
        t = marked_to_triple(f)
        assert t.middle == f.marked
        assert triple_to_marked(t) == f


def test_triple_counts():
    assert [triple_count(n) for n in (3, 4, 6)] == [1, 3, 28]
    for n in range(3, 40):
        assert triple_count(n) == triple_count_closed(n)
    for n in range(3, 10):
        assert len(enumerate_triples(n)) == triple_count(n)
    with pytest.raises(ValueError):
        triple_count(2)


def test_triple_action_matches_forest_action():
    labels = (X0, X0I, X1, X1I, XB1, XB1I)
    for f in enumerate_marked_forests(6):
        for a in labels:
            g = apply_generator(f, a)
            t = triple_action(marked_to_triple(f), a)
            if g is not None:
                assert t == marked_to_triple(g)
    with pytest.raises(ValueError):
        triple_action(TreeTriple(LEAF, LEAF, LEAF), "x2")


def test_small_gamma():
    g3 = gamma_n(3)
    assert len(g3.vertices) == 1 and not g3.edges
    g4 = gamma_n(4)
    assert len(g4.vertices) == 3
    for n in range(3, 9):
        g = gamma_n(n)
        assert len(g.vertices) == triple_count(n)
        assert g.check_serre()
        assert max(g.degrees().values()) <= 6


@pytest.mark.parametrize("n", range(0, 7))
def test_scattered_graph_counts(n):
    g = scattered_graph(n)
    assert sum(g.multiplicity.values()) == (2 * n + 1) * catalan(n)
    for key, m in g.multiplicity.items():
        assert m == scattered_vertex_multiplicity(parse_marked_forest(key))
    assert g.check_serre()


def test_multiplicity_one_tree_each_side():
    assert scattered_vertex_multiplicity(marked_forest([LEAF, LEAF, LEAF], 1)) == 2


def _nx(g):
    d = nx.DiGraph()
    d.add_nodes_from(g.vertices)
    for u, a, v in g.edges:
        d.add_edge(u, v, label=a)
    return d


@pytest.mark.parametrize("n", range(0, 5))
def test_scattered_graph_is_gamma(n):
    s = scattered_graph(n).relabel(scattered_to_gamma_key)
    g = gamma_n(n + 3).restrict_labels([X1, XB1])
    assert s.vertices == g.vertices and s.edges == g.edges
    m = DiGraphMatcher(_nx(s), _nx(g), edge_match=categorical_edge_match("label", None))
    assert m.is_isomorphic()


def test_json_export_sorted():
    import json

    data = json.loads(gamma_n(4).to_json())
    assert data["vertices"] == sorted(data["vertices"])
    assert len(data["edges"]) == len(gamma_n(4).edges)
