import pytest

from distnum.graphs import (
    Graph,
    automorphism_group,
    check_complete_graph_characterization,
    graph_action,
    graph_distinguishing_number,
    make_complete,
    make_cycle,
    make_empty,
    make_figure2_graphs,
    make_figure4_graph,
    make_figure7_tree,
    make_path,
    make_star_path_tree,
    tree_decoration,
    tree_distinguishing_labelling,
)
from distnum.labelling import is_distinguishing
from distnum.perms import PreconditionError, ResourceLimitError
from distnum.verify import free_trees


def test_graph_validation():
    with pytest.raises(PreconditionError):
        Graph(3, [(0, 0)])
    with pytest.raises(PreconditionError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(PreconditionError):
        Graph(3, [(0, 5)])


def test_tree_and_connectivity_predicates():
    assert make_path(4).is_tree()
    assert not make_cycle(4).is_tree()
    forest = Graph(4, [(0, 1), (2, 3)])
    assert not forest.is_connected() and not forest.is_tree()


@pytest.mark.parametrize(
    "make,order",
    [
        (lambda: make_cycle(5), 10),
        (lambda: make_complete(4), 24),
        (lambda: make_figure2_graphs()[0], 72),
        (lambda: make_figure2_graphs()[1], 72),
        (lambda: make_figure4_graph(), 72),
        (lambda: make_figure7_tree(), 6),
        (lambda: make_path(2), 2),
    ],
)
def test_automorphism_orders(make, order):
    graph = make()
    group = automorphism_group(graph, vertex_limit=graph.vertex_count)
    assert group.order == order
    # every returned element preserves adjacency
    for g in group.elements:
        for u, v in graph.edges:
            assert graph.has_edge(g(u), g(v))


def test_two_triangles_order_is_wreath_product():
    group = automorphism_group(make_figure2_graphs()[0])
    assert group.order == 72 == 6 * 6 * 2


def test_figure2_g3_needs_raised_vertex_limit():
    g3 = make_figure2_graphs()[2]
    with pytest.raises(ResourceLimitError):
        automorphism_group(g3)  # default limit is 12
    assert automorphism_group(g3, vertex_limit=14).order == 72


def test_automorphism_element_cap():
    with pytest.raises(ResourceLimitError):
        automorphism_group(make_empty(8), element_cap=100)


def test_graph_action_is_faithful():
    for graph in (make_cycle(6), make_figure4_graph(), make_figure7_tree()):
        action = graph_action(graph)
        assert action.kernel().order == 1


@pytest.mark.parametrize("n,want", [(3, 3), (4, 3), (5, 3), (6, 2), (7, 2), (8, 2)])
def test_cycle_numbers(n, want):
    assert graph_distinguishing_number(make_cycle(n))[0] == want


def test_figure2_numbers():
    numbers = [
        graph_distinguishing_number(g, vertex_limit=14)[0] for g in make_figure2_graphs()
    ]
    assert numbers == [4, 3, 2]


def test_figure2_vertex_counts():
    assert tuple(g.vertex_count for g in make_figure2_graphs()) == (6, 8, 14)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_complete_graph_numbers(n):
    assert graph_distinguishing_number(make_complete(n))[0] == n


def test_tree_labelling_base_cases():
    assert tree_distinguishing_labelling(make_path(1)).labels == (1,)
    assert tree_distinguishing_labelling(make_path(2)).labels == (1, 2)
    phi = tree_distinguishing_labelling(make_path(3))
    assert phi.label_count == 2


def test_tree_labelling_star():
    star = make_star_path_tree(5, ())
    phi = tree_distinguishing_labelling(star)
    assert phi.label_count == 5 == star.max_degree()


def test_tree_labelling_rejects_non_trees():
    with pytest.raises(PreconditionError):
        tree_distinguishing_labelling(make_cycle(5))
    with pytest.raises(PreconditionError):
        tree_distinguishing_labelling(Graph(4, [(0, 1), (2, 3)]))


def test_figure7_tree():
    tree = make_figure7_tree()
    assert tree.vertex_count == 9 and tree.max_degree() == 5
    number, witness = graph_distinguishing_number(tree, vertex_limit=9)
    assert number == 3
    assert is_distinguishing(graph_action(tree, vertex_limit=9), witness).distinguishing
    phi = tree_distinguishing_labelling(tree)
    assert phi.label_count <= 5


@pytest.mark.parametrize("i", [2, 3, 4])
def test_star_path_sharpness(i):
    tree = make_star_path_tree(i, (2, 3))
    assert tree.max_degree() == i + 2
    assert graph_distinguishing_number(tree, vertex_limit=tree.vertex_count)[0] == i


def test_star_path_validation():
    with pytest.raises(PreconditionError):
        make_star_path_tree(3, (2, 2))
    with pytest.raises(PreconditionError):
        make_star_path_tree(3, (1,))
    with pytest.raises(PreconditionError):
        make_star_path_tree(0, ())


def test_tree_bound_exhaustive_small():
    for n in range(1, 9):
        for tree in free_trees(n):
            bound = 1 if n == 1 else max(tree.max_degree(), 2)
            number, _ = graph_distinguishing_number(tree, vertex_limit=n)
            assert number <= bound
            phi = tree_distinguishing_labelling(tree)
            assert phi.label_count <= bound


def test_tree_decoration_records_leaf_orbits():
    tree = make_figure7_tree()
    decoration = tree_decoration(tree)
    decoration.validate(tree)
    assert decoration.leaf_orbit_sequence[0] == (1, 2, 3)
    assert decoration.degrees[0] == 5
    # stripping the outer leaves leaves a bare path, whose reflection pairs
    # the remaining leaves across the old root
    assert decoration.leaf_orbit_sequence[1] == (5, 8)

    star = make_star_path_tree(5, ())
    assert tree_decoration(star).leaf_orbit_sequence == ((1, 2, 3, 4, 5),)
    assert tree_decoration(make_path(2)).leaf_orbit_sequence == ()
    with pytest.raises(PreconditionError):
        tree_decoration(make_cycle(4))


def test_complete_graph_characterization_verdicts():
    complete_plus_isolated = Graph(5, make_complete(4).edge_list())
    assert check_complete_graph_characterization(complete_plus_isolated).verdict == "holds"
    assert check_complete_graph_characterization(make_empty(4)).verdict == "holds"
    c5 = check_complete_graph_characterization(make_cycle(5))
    assert c5.verdict == "hypothesis-not-met"  # |Aut| = 10 is not a factorial
    p4 = check_complete_graph_characterization(make_path(4))
    assert p4.verdict in {"holds", "hypothesis-not-met"}
