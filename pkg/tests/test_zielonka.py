"""
Tests for Zielonka trees, the memory formula and leaf automata.
"""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apps.core.exceptions import InvalidObjective
from apps.objectives import builtins as objectives
from apps.objectives.objectives import LassoWord, Muller, all_subsets, lasso_membership
from apps.zielonka.parity import zielonka_to_parity
from apps.zielonka.render import pretty, to_dot
from apps.zielonka.tree import build_zielonka, build_zielonka_from, memory_of

ABC = ('a', 'b', 'c')
ABCD = ('a', 'b', 'c', 'd')


def lassos(colors, prefix_length=2, cycle_length=4):
    prefixes = [
        ''.join(letters) for size in range(prefix_length + 1)
        for letters in itertools.product(colors, repeat=size)
    ]
    cycles = [
        ''.join(letters) for size in range(1, cycle_length + 1)
        for letters in itertools.product(colors, repeat=size)
    ]
    return [LassoWord.parse(prefix, cycle) for prefix in prefixes for cycle in cycles]


def families(colors):
    subsets = all_subsets(colors)
    for mask in range(2 ** len(subsets)):
        yield [members for i, members in enumerate(subsets) if mask >> i & 1]


def assert_automaton_agrees(alphabet, family, words):
    objective = Muller(alphabet, family)
    automaton = zielonka_to_parity(build_zielonka(alphabet, family), alphabet)
    for word in words:
        expected = lasso_membership(objective, word)
        assert automaton.accepts(word.prefix, word.cycle) == expected, (family, word)


@pytest.fixture
def example_tree():
    return build_zielonka(ABC, [{'a', 'b'}, {'a', 'c'}, {'b'}])


def test_example_family_shape(example_tree):
    assert not example_tree.positive
    assert [child.colors for child in example_tree.children] == [('a', 'b'), ('a', 'c')]
    assert example_tree.leaves == ((0, 0), (1, 0), (1, 1))
    assert example_tree.height == 2


@pytest.mark.parametrize('alphabet, family, memory', [
    (ABC, [{'a', 'b'}, {'a', 'c'}, {'b'}], 2),
    (('a', 'b'), [{'a', 'b'}], 2),
    (ABC, all_subsets(ABC, 2), 2),
    (ABC, all_subsets(ABC), 1),
    (('a',), [{'a'}], 1),
])
def test_memory_formula(alphabet, family, memory):
    assert memory_of(build_zielonka(alphabet, family)) == memory


def test_tree_from_a_predicate_matches_the_family():
    tree = build_zielonka_from(ABC, lambda colors: len(colors) == 2)
    assert tree.leaves == build_zielonka(ABC, all_subsets(ABC, 2)).leaves


def test_empty_member_is_rejected():
    with pytest.raises(InvalidObjective):
        build_zielonka(ABC, [set()])


def test_leaf_automaton_agrees_with_muller(example_tree):
    family = Muller(ABC, [{'a', 'b'}, {'a', 'c'}, {'b'}])
    automaton = zielonka_to_parity(example_tree, ABC)
    assert len(automaton.states) == len(example_tree.leaves)
    for cycle in ['a', 'b', 'c', 'ab', 'ac', 'bc', 'abc', 'aab', 'cbca']:
        word = LassoWord.parse('', cycle)
        assert automaton.accepts(word.prefix, word.cycle) == lasso_membership(family, word), cycle


def test_w5_automaton_has_one_state_per_leaf():
    w5 = objectives.w5(3)
    tree = build_zielonka(w5.alphabet, w5.family)
    assert len(tree.leaves) == 6
    assert len(zielonka_to_parity(tree).states) == 6


def test_pretty_rendering():
    tree = build_zielonka(('a', 'b'), [{'a', 'b'}])
    assert pretty(tree) == '(a, b)\n  [a]\n  [b]\n'


def test_dot_rendering(example_tree):
    text = to_dot(example_tree)
    assert 'n [label="a, b, c", shape=box];' in text
    assert 'n -> n_1;' in text
    assert 'n_1_1 [label="c", shape=box];' in text


@pytest.mark.parametrize('alphabet', [
    ('a',),
    ('a', 'b'),
    pytest.param(ABC, marks=pytest.mark.slow),
])
def test_leaf_automaton_agrees_on_every_family(alphabet):
    words = lassos(alphabet)
    for family in families(alphabet):
        assert_automaton_agrees(alphabet, family, words)


@pytest.mark.slow
@given(st.sets(st.sampled_from(all_subsets(ABCD))))
@settings(max_examples=15, deadline=None)
def test_leaf_automaton_agrees_on_four_color_families(family):
    assert_automaton_agrees(ABCD, family, lassos(ABCD))


@given(
    st.sets(st.sampled_from(all_subsets(ABCD))),
    st.text(alphabet='abcd', max_size=2),
    st.text(alphabet='abcd', min_size=1, max_size=4),
)
@settings(max_examples=200, deadline=None)
def test_leaf_automaton_agrees_on_sampled_four_color_lassos(family, prefix, cycle):
    assert_automaton_agrees(ABCD, family, [LassoWord.parse(prefix, cycle)])
