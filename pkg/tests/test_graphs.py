"""
Tests for colored graphs, trees, morphisms, the file format and generators.
"""
import pytest

from apps.core.exceptions import InvalidGraph
from apps.graphs.formats import dump_graph, dumps, load_graph, loads, to_dot
from apps.graphs.generators import make_rng, random_graph
from apps.graphs.graph import (
    EPSILON,
    ColoredGraph,
    RootedTree,
    reachable_from,
    restrict,
    sccs,
    unfold,
    validate,
)
from apps.graphs.morphisms import check_morphism, compose, find_graph_morphism


def test_sink_is_rejected_with_diagnostic():
    with pytest.raises(InvalidGraph) as error:
        ColoredGraph.build(('a',), ['x', 'y'], [('x', 'a', 'y')])
    assert error.value.diagnostic == {'sinks': ['y']}


def test_pregraph_keeps_its_sinks():
    g = ColoredGraph.build(('a',), ['x', 'y'], [('x', 'a', 'y')], pregraph=True)
    assert g.sinks() == ('y',)
    assert not g.is_graph


def test_epsilon_cannot_be_declared():
    with pytest.raises(InvalidGraph):
        ColoredGraph.build(('a', EPSILON), ['x'], [('x', 'a', 'x')])


def test_duplicate_vertices_are_reported():
    with pytest.raises(InvalidGraph) as error:
        ColoredGraph.build(('a',), ['x', 'x'], [('x', 'a', 'x')])
    assert error.value.diagnostic['duplicates'] == ('x',)


def test_unknown_color_is_rejected():
    with pytest.raises(InvalidGraph):
        ColoredGraph.build(('a',), ['x'], [('x', 'b', 'x')])


def test_validate_accepts_vertex_records():
    g = validate({'alphabet': ['a'], 'vertices': [{'id': 'x'}], 'edges': [['x', 'a', 'x']]})
    assert g.vertices == ('x',)
    assert g.successors('x', 'a') == {'x'}


def test_unfold_builds_a_tree(two_cycle):
    tree, projection = unfold(two_cycle, 'x', 3)
    tree.check()
    assert len(tree.graph.vertices) == 4
    assert projection[tree.root] == 'x'
    leaf = max(tree.graph.vertices, key=len)
    assert projection[leaf] == 'y'


def test_rooted_tree_rejects_shared_children():
    g = ColoredGraph.build(
        ('a',), ['r', 's', 't'], [('r', 'a', 's'), ('r', 'a', 't'), ('s', 'a', 't')], pregraph=True
    )
    with pytest.raises(InvalidGraph):
        RootedTree(g, 'r').check()


def test_restrict_and_reachability(two_cycle):
    assert reachable_from(two_cycle, 'x') == {'x', 'y'}
    part = restrict(two_cycle, ['x'])
    assert part.edges == ()
    assert part.sinks() == ('x',)


def test_sccs_come_sinks_first():
    g = ColoredGraph.build(('a',), ['x', 'y'], [('x', 'a', 'y'), ('y', 'a', 'y')])
    assert sccs(g) == [frozenset({'y'}), frozenset({'x'})]


def test_two_cycle_maps_onto_a_double_loop(two_cycle):
    target = ColoredGraph.build(('a', 'b'), ['v'], [('v', 'a', 'v'), ('v', 'b', 'v')])
    mapping = find_graph_morphism(two_cycle, target)
    assert mapping == {'x': 'v', 'y': 'v'}
    assert check_morphism(two_cycle, target, mapping) is None


def test_loop_does_not_map_into_a_two_cycle(a_loop, two_cycle):
    assert find_graph_morphism(a_loop, two_cycle) is None
    assert check_morphism(a_loop, two_cycle, {'v': 'x'}) == ('v', 'a', 'v')


def test_partial_map_is_rejected(two_cycle, a_loop):
    with pytest.raises(InvalidGraph):
        check_morphism(two_cycle, a_loop, {'x': 'v'})


def test_anchor_restricts_the_image(two_cycle):
    assert find_graph_morphism(two_cycle, two_cycle, anchor=('x', ['y'])) is None
    assert find_graph_morphism(two_cycle, two_cycle, anchor=('x', ['x'])) == {'x': 'x', 'y': 'y'}


def test_compose():
    assert compose({'a': 1}, {1: 'z'}) == {'a': 'z'}


def test_document_loads_back(two_cycle):
    document = loads(dumps(dump_graph(two_cycle, initial='x')))
    assert document['initial'] == 'x'
    assert load_graph(document) == two_cycle


def test_malformed_json_is_an_input_error():
    with pytest.raises(InvalidGraph):
        loads('{"alphabet": ')


def test_dot_marks_owners(two_cycle):
    text = to_dot(two_cycle, eve={'x'}, initial='x')
    assert text.startswith('digraph "G" {')
    assert '"x" [shape=circle, penwidth=2];' in text
    assert '"y" [shape=box];' in text
    assert '"x" -> "y" [label="a"];' in text


def test_random_graph_is_seeded_and_sink_free():
    first = random_graph(make_rng(7), 5, ('a', 'b'))
    second = random_graph(make_rng(7), 5, ('a', 'b'))
    assert first == second
    assert first.is_graph
    assert not first.sinks()
