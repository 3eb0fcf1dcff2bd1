from __future__ import annotations

import random

import networkx as nx
import pytest

from apollonian.cliquetree import (
    build_clique_tree,
    clique_intersection_edges,
    has_induced_subtree_property,
    is_uniquely_representable,
    maximal_cliques,
    minimal_separators,
    tree_canonical_form,
    tree_degree_profile,
    unlabeled_tree_canonical_form,
)
from apollonian.fixtures import fixture
from apollonian.graph import GraphError, NotChordalError, complete_graph, cycle_graph, new_graph
from apollonian.ran import TreeShape, generate_ran, realize_ran_from_shape
from oracles import nx_maximal_cliques, tree_nx, trees_isomorphic


def book_graph(pages: int) -> object:
    # K2 joined to an independent set: the edge {0, 1} separates every page.
    return new_graph(2 + pages, [(0, 1)] + [(x, p) for p in range(2, 2 + pages) for x in (0, 1)])


def fan_k1_p4():
    return new_graph(5, [(0, v) for v in range(1, 5)] + [(1, 2), (2, 3), (3, 4)])


def test_maximal_cliques_examples():
    assert maximal_cliques(complete_graph(4)) == [frozenset(range(4))]
    c0 = fixture("c0")
    qs = maximal_cliques(c0)
    assert len(qs) == 2 and len(qs[0] & qs[1]) == 3
    assert set(qs) == nx_maximal_cliques(c0)


def test_maximal_cliques_match_networkx():
    for seed in range(40):
        g, _ = generate_ran(6 + seed % 25, seed)
        qs = maximal_cliques(g)
        assert len(qs) == len(set(qs)) == g.n - 3
        assert all(len(q) == 4 for q in qs)
        assert set(qs) == nx_maximal_cliques(g)


def test_non_chordal_rejected():
    with pytest.raises(NotChordalError):
        maximal_cliques(cycle_graph(5))
    with pytest.raises(NotChordalError):
        build_clique_tree(cycle_graph(4))


def test_build_clique_tree_examples():
    t = build_clique_tree(fixture("c0"))
    assert len(t.nodes) == 2 and len(t.edges) == 1 and len(t.edges[0][2]) == 3
    gh = build_clique_tree(fixture("goldner_harary"))
    assert (len(gh.nodes), len(gh.edges), len(gh.leaves())) == (8, 7, 6)
    k4 = build_clique_tree(complete_graph(4))
    assert len(k4.nodes) == 1 and k4.edges == ()


def test_tree_is_tree_with_exact_separators():
    for seed in range(20):
        g, _ = generate_ran(20, seed)
        t = build_clique_tree(g)
        h = tree_nx(t)
        assert nx.is_tree(h)
        for i, j, s in t.edges:
            assert s == t.nodes[i] & t.nodes[j] and s
        assert has_induced_subtree_property(g, t)


def test_weight_is_maximum():
    rng = random.Random(5)
    for seed in range(10):
        g, _ = generate_ran(14, seed)
        t = build_clique_tree(g)
        ci = nx.Graph()
        for (i, j), w in clique_intersection_edges(list(t.nodes)).items():
            ci.add_edge(i, j, weight=w)
        best = nx.maximum_spanning_tree(ci).size(weight="weight")
        assert t.weight() == best
        for _ in range(100):
            for u, v in ci.edges:
                ci[u][v]["r"] = rng.random()
            alt = nx.minimum_spanning_tree(ci, weight="r")
            assert alt.size(weight="weight") <= t.weight()


def test_tree_independent_of_labelling():
    # Relabelling changes every tie-break; the clique-tree of a uniquely
    # representable graph must come out as the same set of clique pairs.
    rng = random.Random(11)
    for seed in range(15):
        g, _ = generate_ran(18, seed)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = new_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        tg, th = build_clique_tree(g), build_clique_tree(h)

        def pairs(t, relabel):
            return {frozenset((frozenset(relabel(t.nodes[i])), frozenset(relabel(t.nodes[j])))) for i, j, _ in t.edges}

        assert pairs(tg, lambda q: {perm[v] for v in q}) == pairs(th, lambda q: q)


def test_separators_on_rans():
    for seed in range(20):
        g, _ = generate_ran(16, seed)
        mult = minimal_separators(build_clique_tree(g))
        assert all(len(s) == 3 for s in mult)
        assert all(c == 1 for c in mult.values())
        assert sum(mult.values()) == g.n - 4


def test_book_graph_not_uniquely_representable():
    g = book_graph(3)
    mult = minimal_separators(build_clique_tree(g))
    assert mult[(0, 1)] == 2
    assert not is_uniquely_representable(g)


def test_fan_is_uniquely_representable():
    # K1 + P4: separators {0,2} and {0,3}, each once, neither inside the other.
    g = fan_k1_p4()
    mult = minimal_separators(build_clique_tree(g))
    assert dict(mult) == {(0, 2): 1, (0, 3): 1}
    assert is_uniquely_representable(g)


def test_uniquely_representable_examples():
    assert is_uniquely_representable(complete_graph(4))
    for seed in range(20):
        assert is_uniquely_representable(generate_ran(12, seed)[0])


def test_proper_containment_detected():
    # cliques {0,1,2}, {0,1,4}, {0,3}: separator {0} sits inside {0,1}
    g = new_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 4)])
    seps = set(minimal_separators(build_clique_tree(g)))
    assert (0,) in seps and (0, 1) in seps
    assert not is_uniquely_representable(g)


def test_canonical_form_examples():
    t = {k: build_clique_tree(fixture(f"fig1_{k}")) for k in ("g1", "g2", "g3", "g4")}
    f = {k: tree_canonical_form(v) for k, v in t.items()}
    assert f["g1"] == f["g2"] == f["g4"]
    assert f["g1"] != f["g3"]
    assert unlabeled_tree_canonical_form(1, []) == unlabeled_tree_canonical_form(1, [])
    for a in ("g1", "g3"):
        for b in ("g2", "g3", "g4"):
            assert (f[a] == f[b]) == trees_isomorphic(t[a], t[b])


def test_canonical_form_matches_networkx_on_random_trees():
    rng = random.Random(3)
    shapes = []
    for _ in range(60):
        n = rng.randint(1, 11)
        parents = [rng.randrange(i + 1) for i in range(n - 1)]
        shapes.append((n, [(p, i + 1) for i, p in enumerate(parents)]))
    for n1, e1 in shapes[:30]:
        for n2, e2 in shapes[30:]:
            a, b = nx.Graph(e1), nx.Graph(e2)
            a.add_nodes_from(range(n1))
            b.add_nodes_from(range(n2))
            same = unlabeled_tree_canonical_form(n1, e1) == unlabeled_tree_canonical_form(n2, e2)
            assert same == nx.is_isomorphic(a, b)


def test_degree_profile_examples():
    p = tree_degree_profile(build_clique_tree(fixture("goldner_harary")))
    assert p.counts == {1: 6, 4: 2} and len(p.degree4) == 2
    assert tree_degree_profile(build_clique_tree(fixture("c0"))).counts == {1: 2}
    path = realize_ran_from_shape(TreeShape.path(6), 1)
    assert max(tree_degree_profile(build_clique_tree(path)).counts) == 2


def test_degree_profile_rejects_degree_five():
    g = new_graph(7, [(0, v) for v in range(1, 7)])
    t = build_clique_tree(g)
    with pytest.raises(GraphError):
        tree_degree_profile(t)
    assert tree_degree_profile(t, ran=False).counts == {1: 5, 5: 1}


def test_clique_tree_dot():
    dot = build_clique_tree(fixture("c0")).to_dot()
    assert dot.count("label=") == 3
    assert '0 -- 1 [label="{' in dot
