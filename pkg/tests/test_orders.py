"""
Tests for ordered graphs, width, chain decompositions and ε-separation.
"""
import pytest

from apps.core.exceptions import InvalidOrder, NotMonotone
from apps.graphs.graph import EPSILON, ColoredGraph
from apps.orders.poset import (
    OrderedGraph,
    chain_decomposition,
    check_monotone,
    monotone_closure,
    poset_width,
)
from apps.orders.separation import (
    EpsSeparatedGraph,
    check_chromatic,
    check_eps_separated,
    derive_update,
    eps_separate,
)


def loops(names, colors=('a',)):
    return ColoredGraph.build(colors, names, [(v, c, v) for v in names for c in colors])


@pytest.fixture
def lo_hi():
    """lo < hi, each with its own a-loop; monotonicity wants hi -a-> lo."""
    return OrderedGraph.from_generators(loops(['lo', 'hi']), [('lo', 'hi')])


def test_order_is_closed_transitively():
    og = OrderedGraph.from_generators(loops(['x', 'y', 'z']), [('x', 'y'), ('y', 'z')])
    assert og.leq('x', 'z')
    assert og.down('z') == {'x', 'y', 'z'}
    assert og.up('x') == {'x', 'y', 'z'}
    assert og.generators() == [('x', 'y'), ('y', 'z')]


def test_cyclic_order_is_rejected():
    with pytest.raises(InvalidOrder):
        OrderedGraph.from_generators(loops(['x', 'y']), [('x', 'y'), ('y', 'x')])


def test_unknown_order_vertex_is_rejected():
    with pytest.raises(InvalidOrder):
        OrderedGraph.from_generators(loops(['x']), [('x', 'w')])


def test_width_of_a_chain_and_an_antichain():
    chain = OrderedGraph.from_generators(loops(['x', 'y', 'z']), [('x', 'y'), ('y', 'z')])
    assert poset_width(chain) == (1, ('x',))
    assert chain_decomposition(chain) == [['x', 'y', 'z']]

    flat = OrderedGraph.discrete(loops(['x', 'y', 'z']))
    assert poset_width(flat) == (3, ('x', 'y', 'z'))
    assert chain_decomposition(flat) == [['x'], ['y'], ['z']]


def test_width_of_a_diamond():
    og = OrderedGraph.from_generators(
        loops(['bot', 'l', 'r', 'top']),
        [('bot', 'l'), ('bot', 'r'), ('l', 'top'), ('r', 'top')],
    )
    width, antichain = poset_width(og)
    assert width == 2
    assert set(antichain) == {'l', 'r'}
    chains = chain_decomposition(og)
    assert len(chains) == 2
    assert sorted(v for chain in chains for v in chain) == ['bot', 'l', 'r', 'top']


def test_monotone_witness_and_closure(lo_hi):
    assert check_monotone(lo_hi) == ('hi', 'hi', 'hi', 'lo', 'a')
    closed = monotone_closure(lo_hi)
    assert closed.graph.has_edge('hi', 'a', 'lo')
    assert check_monotone(closed) is None


def test_eps_separate_follows_the_chains(lo_hi):
    sep = eps_separate(monotone_closure(lo_hi))
    assert sep.breadth == 1
    assert sep.parts == {0: ['lo', 'hi']}
    assert sep.graph.has_edge('hi', EPSILON, 'lo')
    assert sep.check() is None


def test_eps_separate_refuses_non_monotone_graphs(lo_hi):
    with pytest.raises(NotMonotone) as error:
        eps_separate(lo_hi)
    assert error.value.witness == ('hi', 'hi', 'hi', 'lo', 'a')


def test_crossing_eps_edge_is_a_violation():
    graph = ColoredGraph.build(
        ('a',),
        ['x', 'y'],
        [('x', 'a', 'x'), ('y', 'a', 'y'), ('x', EPSILON, 'x'), ('y', EPSILON, 'y'), ('x', EPSILON, 'y')],
    )
    violation = check_eps_separated(graph, {'x': 0, 'y': 1})
    assert violation.clause == 'crossing'


def test_missing_reflexive_loop_is_a_violation():
    graph = ColoredGraph.build(('a',), ['x'], [('x', 'a', 'x')])
    assert check_eps_separated(graph, {'x': 0}).clause == 'reflexive'


def test_chromatic_update():
    graph = ColoredGraph.build(
        ('a', 'b'),
        ['x', 'y'],
        [
            ('x', EPSILON, 'x'), ('y', EPSILON, 'y'),
            ('x', 'a', 'x'), ('x', 'b', 'y'), ('y', 'a', 'x'), ('y', 'b', 'y'),
        ],
    )
    partition = {'x': 'a', 'y': 'b'}
    sep = EpsSeparatedGraph(graph=graph, partition=partition)
    update = derive_update(sep)
    assert update == {('a', 'a'): 'a', ('a', 'b'): 'b', ('b', 'a'): 'a', ('b', 'b'): 'b'}
    assert check_chromatic(graph, partition, update) is None
    assert check_chromatic(graph, partition, {**update, ('a', 'b'): 'a'}) == ('x', 'b', 'y')
    assert sep.with_delta(update).check() is None
