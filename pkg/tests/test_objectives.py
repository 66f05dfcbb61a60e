"""
Tests for objectives, lasso membership, automata and graph satisfaction.
"""
import pytest

from apps.core.exceptions import InvalidObjective
from apps.graphs.graph import EPSILON, ColoredGraph
from apps.objectives import builtins as objectives
from apps.objectives.automata import DFA
from apps.objectives.compile import compile_objective
from apps.objectives.formats import dump_objective, load_objective
from apps.objectives.objectives import (
    Complement,
    LassoWord,
    Muller,
    Union,
    eps_lasso_membership,
    has_winning_continuation,
    lasso_membership,
    parity_objective,
    trivially_losing,
    trivially_winning,
)
from apps.objectives.satisfaction import graph_satisfies, has_doomed_prefix, satisfying_vertices


def lasso(prefix, cycle):
    return LassoWord.parse(prefix, cycle)


@pytest.mark.parametrize('objective, prefix, cycle, expected', [
    (objectives.w1(), '', 'ab', True),
    (objectives.w1(), '', 'a', False),
    (objectives.w1(), 'aaa', 'ba', True),
    (objectives.alternation(), '', 'ab', True),
    (objectives.alternation(), '', 'ba', False),
    (objectives.alternation(), 'a', 'ba', True),
    (objectives.w2(3), '', 'abc', True),
    (objectives.w2(3), 'aa', 'bc', False),
    (objectives.w3(1, 2), 'abba', 'b', True),
    (objectives.w3(1, 2), 'aba', 'b', False),
    (objectives.w3(1, 2), '', 'b', False),
    (objectives.w4(), '', 'b', True),
    (objectives.w4(), '', 'ac', True),
    (objectives.w4(), '', 'a', False),
    (objectives.w5(3), '', 'ab', True),
    (objectives.w5(3), '', 'abc', False),
    (parity_objective(3), '', '01', False),
    (parity_objective(3), '', '12', True),
])
def test_lasso_membership(objective, prefix, cycle, expected):
    assert lasso_membership(objective, lasso(prefix, cycle)) is expected


@pytest.mark.parametrize('objective, prefix, cycle', [
    (objectives.w1(), '', 'ab'),
    (objectives.w1(), 'b', 'a'),
    (objectives.alternation(), 'a', 'ba'),
    (objectives.w2(3), 'ab', 'ca'),
    (objectives.w3(1, 2), 'ab', 'b'),
    (objectives.w3(1, 2), 'abba', 'ab'),
    (objectives.w4(), 'c', 'aab'),
    (objectives.w5(3), 'c', 'ac'),
])
def test_compiled_automaton_agrees_with_membership(objective, prefix, cycle):
    automaton = compile_objective(objective)
    word = lasso(prefix, cycle)
    assert automaton.accepts(word.prefix, word.cycle) == lasso_membership(objective, word)


def test_epsilon_is_neutral():
    w1 = objectives.w1()
    assert eps_lasso_membership(w1, LassoWord((), ('a', EPSILON, 'b')))
    assert eps_lasso_membership(w1, LassoWord(('a',), (EPSILON,)))
    assert not eps_lasso_membership(trivially_losing('a'), LassoWord(('a',), (EPSILON,)))


def test_winning_continuation():
    alternation = objectives.alternation()
    assert has_winning_continuation(alternation, ('a', 'b'))
    assert not has_winning_continuation(alternation, ('b',))


def test_unknown_color_is_rejected():
    with pytest.raises(InvalidObjective):
        lasso_membership(objectives.w1(), lasso('', 'c'))


def test_empty_cycle_is_rejected():
    with pytest.raises(InvalidObjective):
        LassoWord(('a',), ())


def test_muller_rejects_members_outside_the_alphabet():
    with pytest.raises(InvalidObjective):
        Muller(('a',), [{'a', 'b'}])


def test_trivial_objectives():
    assert lasso_membership(trivially_winning('a'), lasso('', 'a'))
    assert not lasso_membership(trivially_losing('a'), lasso('', 'a'))


def test_complement_and_union():
    w1 = objectives.w1()
    assert lasso_membership(Complement(w1), lasso('', 'a'))
    only_a = Muller(('a', 'b'), [{'a'}])
    either = Union((w1, only_a))
    assert lasso_membership(either, lasso('', 'a'))
    assert not lasso_membership(either, lasso('', 'b'))


def test_prefix_independence():
    assert objectives.w1().prefix_independent
    assert not objectives.alternation().prefix_independent
    assert not objectives.w3(1, 2).prefix_independent


def test_dfa_requires_a_complete_transition_table():
    with pytest.raises(InvalidObjective):
        DFA.build(('a', 'b'), ('s',), 's', {('s', 'a'): 's'})


def test_epsilon_extension_adds_loops():
    automaton = compile_objective(objectives.alternation()).with_epsilon()
    live = automaton.live
    for state in automaton.states:
        target, priority = automaton.step(state, EPSILON)
        assert target == state
        assert priority == (0 if state in live else 1)


def test_objective_documents():
    document = {'type': 'builtin', 'name': 'W2', 'params': {'size': 3}}
    w2 = load_objective(document)
    assert w2.alphabet == ('a', 'b', 'c')
    muller = load_objective({'type': 'muller', 'alphabet': ['a', 'b'], 'family': [['a', 'b']]})
    assert muller == objectives.w1()
    assert load_objective(dump_objective(muller)) == muller


@pytest.mark.parametrize('document', [
    {'alphabet': ['a']},
    {'type': 'muller', 'alphabet': ['a']},
    {'type': 'no-such-kind'},
    {'type': 'builtin', 'name': 'W9'},
])
def test_malformed_objective_documents(document):
    with pytest.raises(InvalidObjective):
        load_objective(document)


def test_graph_satisfaction_with_counterexample(a_loop, two_cycle):
    result = graph_satisfies(a_loop, objectives.w1())
    assert not result
    assert result.counterexample.cycle == ('a',)
    assert result.start == 'v'
    assert graph_satisfies(two_cycle, objectives.w1())


def test_satisfaction_from_a_vertex(two_cycle):
    alternation = objectives.alternation()
    assert satisfying_vertices(two_cycle, alternation) == {'x'}
    assert not graph_satisfies(two_cycle, alternation, 'y')


def test_doomed_prefix():
    graph = ColoredGraph.build(('a', 'b'), ['x'], [('x', 'a', 'x'), ('x', 'b', 'x')])
    assert has_doomed_prefix(graph, objectives.alternation())
    assert not has_doomed_prefix(graph, objectives.w1())
