from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apollonian.cliquetree import build_clique_tree, minimal_separators, tree_canonical_form, unlabeled_tree_canonical_form
from apollonian.classify import classify
from apollonian.fixtures import fixture
from apollonian.graph import GraphError, complete_graph, cycle_graph, is_chordal, is_complete
from apollonian.ran import (
    InsertionTrace,
    ShapeError,
    TreeShape,
    generate_an,
    generate_ran,
    is_kpath,
    is_ktree,
    is_ran,
    preferential_tree_shape,
    proposition_report,
    random_hub_shape,
    random_tree_shape,
    realize_ran_from_shape,
)
from oracles import is_maximal_planar_chordal


def test_generate_n4_is_k4():
    for seed in range(10):
        g, trace = generate_ran(4, seed)
        assert g == complete_graph(4) and trace.n == 4


def test_generate_n5_unique_shape():
    forms = set()
    for seed in range(10):
        g, _ = generate_ran(5, seed)
        assert g.m == 9 and classify(g).label == "C0"
        forms.add(tuple(sorted(len(a) for a in g.adj)))
    assert forms == {(3, 3, 4, 4, 4)}


def test_generate_deterministic():
    a, ta = generate_ran(30, 7)
    b, tb = generate_ran(30, 7)
    assert a.edges() == b.edges() and ta == tb
    assert generate_ran(30, 8)[0].edges() != a.edges()


def test_generate_rejects_small_n():
    with pytest.raises(ValueError):
        generate_ran(3, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 60), st.integers(0, 2**32))
def test_generated_graphs_are_rans(n, seed):
    g, trace = generate_ran(n, seed)
    assert g.n == n and g.m == 3 * n - 6
    assert is_ran(g) and is_chordal(g)
    assert is_maximal_planar_chordal(g)
    assert trace.replay().edges() == g.edges()
    if n >= 5:
        assert all(proposition_report(g).values())


def test_trace_json_round_trip():
    g, trace = generate_ran(12, 3)
    d = trace.to_dict()
    assert d["base"] == [0, 1, 2] and d["steps"][0] == {"v": 3, "face": [0, 1, 2]}
    again = InsertionTrace.from_dict(d)
    assert again == trace and again.replay().edges() == g.edges()


def test_trace_replay_validates():
    with pytest.raises(GraphError):
        InsertionTrace((0, 1, 2), ((4, (0, 1, 2)),)).replay()
    with pytest.raises(GraphError):
        InsertionTrace((0, 1, 2), ((3, (0, 1, 2)), (4, (0, 1, 5)))).replay()
    # 0, 1, 2 are a triangle but 0, 3 not yet adjacent to 4's other corner
    with pytest.raises(GraphError):
        InsertionTrace((0, 1, 2), ((3, (0, 1, 2)), (4, (0, 1, 3)), (5, (2, 3, 4)))).replay()
    with pytest.raises(GraphError):
        InsertionTrace.from_dict({"base": [0, 1, 2], "steps": [{"v": 3}]})


def test_generate_an_sizes():
    assert generate_an(0) == complete_graph(4)
    sizes = [generate_an(d).n for d in range(5)]
    assert sizes == [4, 7, 16, 43, 124]
    for d in range(4):
        assert is_ran(generate_an(d))
    with pytest.raises(ValueError):
        generate_an(7)


def test_is_ktree_examples():
    assert is_ktree(complete_graph(4), 3)
    assert not is_ktree(cycle_graph(4), 1) and not is_ktree(cycle_graph(4), 2)
    assert is_ktree(cycle_graph(3), 2)
    assert not is_ktree(fixture("c0"), 2)


def test_is_ran_examples():
    assert is_ran(fixture("goldner_harary"))
    assert is_ran(fixture("nishizeki"))
    # three vertices inserted on the same triangle: a 3-tree with mu({0,1,2}) = 2
    stacked = InsertionTrace((0, 1, 2), ((3, (0, 1, 2)), (4, (0, 1, 2)), (5, (0, 1, 2)))).replay()
    assert stacked.n == 6 and is_ktree(stacked, 3)
    assert minimal_separators(build_clique_tree(stacked))[(0, 1, 2)] == 2
    assert not is_ran(stacked)
    assert not is_maximal_planar_chordal(stacked)


def test_is_ran_agrees_with_planarity_oracle():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(6, 14)
        steps = []
        cliques = [(0, 1, 2)]
        for v in range(3, n):
            face = rng.choice(cliques)
            steps.append((v, face))
            a, b, c = face
            cliques += [tuple(sorted(x)) for x in ((a, b, v), (a, c, v), (b, c, v))]
        g = InsertionTrace((0, 1, 2), tuple(steps)).replay()
        assert is_ktree(g, 3)
        assert is_ran(g) == is_maximal_planar_chordal(g)


def test_is_kpath_examples():
    p6 = realize_ran_from_shape(TreeShape.path(3), 0)
    assert p6.n == 6 and is_kpath(p6, 3)
    assert not is_kpath(fixture("goldner_harary"), 3)
    assert is_kpath(complete_graph(4), 3)


def test_kpath_implies_path_tree():
    for seed in range(60):
        g, _ = generate_ran(10, seed)
        if is_kpath(g, 3):
            assert max(build_clique_tree(g).degree(i) for i in range(g.n - 3)) <= 2


def test_shape_validation():
    with pytest.raises(ShapeError):
        TreeShape(3, ((0, 1),))
    with pytest.raises(ShapeError):
        TreeShape(4, ((0, 1), (0, 1), (2, 3)))
    with pytest.raises(ShapeError):
        TreeShape.star(5)
    with pytest.raises(ShapeError):
        TreeShape.regular(3, [0, 0, 0, 0])


def test_realize_examples():
    star = realize_ran_from_shape(TreeShape.star(4), 0)
    assert star.n == 8 and classify(star).label == "C1"
    gh_shape = TreeShape.regular(4, [0])
    g = realize_ran_from_shape(gh_shape, 5)
    gh = build_clique_tree(fixture("goldner_harary"))
    assert tree_canonical_form(build_clique_tree(g)) == tree_canonical_form(gh)


def test_regular_shapes():
    for k, inner, n in [(4, [], 8), (4, [0], 11), (4, [0, 1], 14), (3, [], 7), (3, [0], 9), (3, [0, 1], 11)]:
        shape = TreeShape.regular(k, inner)
        assert shape.n_nodes + 3 == n
        assert {d for d in shape_degrees(shape) if d > 1} == {k}


def shape_degrees(shape):
    return [len(a) for a in shape.adjacency()]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 25), st.integers(0, 10**9))
def test_realize_reproduces_shape(n_nodes, seed):
    rng = random.Random(seed)
    for shape in (random_tree_shape(n_nodes, rng), preferential_tree_shape(n_nodes, rng)):
        g = realize_ran_from_shape(shape, seed)
        assert g.n == n_nodes + 3 and is_ran(g)
        if n_nodes > 1:
            assert tree_canonical_form(build_clique_tree(g)) == unlabeled_tree_canonical_form(
                shape.n_nodes, shape.edges
            )


def test_realize_varies_intersections():
    shape = TreeShape.from_parents([0, 0, 0, 0, 1, 5, 6, 7, 7, 7])
    seen = set()
    for seed in range(40):
        t = build_clique_tree(realize_ran_from_shape(shape, seed))
        (a, b) = [i for i in range(len(t.nodes)) if t.degree(i) == 4]
        seen.add(len(t.nodes[a] & t.nodes[b]))
    assert seen == {0, 1, 2}


def test_hub_shape():
    rng = random.Random(0)
    made = 0
    for _ in range(200):
        n_nodes = rng.randint(9, 14)
        shape = random_hub_shape(n_nodes, rng)
        if shape is None:
            continue
        made += 1
        deg = shape_degrees(shape)
        assert shape.n_nodes == n_nodes and deg.count(4) in (2, 3) and max(deg) == 4
        label = classify(realize_ran_from_shape(shape, rng.randrange(1000))).label
        assert label in ("C7", "C8")
    assert made > 100


def test_proposition_report_on_fixtures():
    for name in ("goldner_harary", "nishizeki", "fig4_hamiltonian", "fig1_g1", "fig3_tree_example"):
        report = proposition_report(fixture(name))
        assert all(report.values()), (name, report)


def test_complete_graph_handling():
    assert is_ran(complete_graph(4)) and is_complete(generate_ran(4, 1)[0])
