"""
Property tests against brute force: width, morphisms, lasso words and solvers.
"""
import itertools
from functools import cache

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from apps.graphs.generators import make_rng, random_graph
from apps.graphs.graph import ColoredGraph, reachable_from, unfold
from apps.graphs.morphisms import check_morphism, compose, find_graph_morphism
from apps.objectives import builtins as objectives
from apps.objectives.objectives import (
    LassoWord,
    Muller,
    all_subsets,
    lasso_membership,
    parity_objective,
)
from apps.objectives.satisfaction import graph_satisfies, satisfying_vertices
from apps.orders.poset import OrderedGraph, chain_decomposition, poset_width
from apps.solver.lifting import extract_strategy, solve_via_universal
from apps.solver.oracle import solve_oracle
from apps.solver.sampling import random_game
from apps.solver.strategies import verify_strategy
from apps.universal.builtins import builtin_universal
from apps.universal.constructions import muller_universal, parity_universal

ABC = ('a', 'b', 'c')
BOUND = 5

seeds = st.integers(min_value=0, max_value=10000)
words = st.text(alphabet='ab', max_size=4)
cycles = st.text(alphabet='ab', min_size=1, max_size=4)

OBJECTIVES = {
    'w1': objectives.w1,
    'alternation': objectives.alternation,
    'parity': lambda: parity_objective(3),
}


@cache
def lifted_case(name):
    """Return (objective, universal graph) for the extraction properties."""
    if name == 'w1':
        objective = objectives.w1()
        return objective, muller_universal(objective, BOUND)
    if name == 'muller':
        objective = Muller(ABC, [{'a', 'b'}, {'a', 'c'}, {'b'}])
        return objective, muller_universal(objective, BOUND)
    return parity_objective(3), parity_universal(3, BOUND)


@st.composite
def posets(draw):
    size = draw(st.integers(min_value=1, max_value=8))
    names = [f'p{i}' for i in range(size)]
    pairs = [(names[i], names[j]) for i in range(size) for j in range(i + 1, size)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    graph = ColoredGraph.build(('a',), names, [(v, 'a', v) for v in names])
    return OrderedGraph.from_generators(graph, chosen)


def largest_antichain(og):
    vertices = og.vertices
    for size in range(len(vertices), 0, -1):
        for subset in itertools.combinations(vertices, size):
            if not any(og.comparable(x, y) for x, y in itertools.combinations(subset, 2)):
                return size
    return 0


def violates_by_enumeration(graph, objective, start):
    """True if some strongly connected set of edges reachable from ``start`` is rejected."""
    reachable = reachable_from(graph, start)
    edges = [edge for edge in graph.edges if edge[0] in reachable]
    for size in range(1, len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            looped = nx.DiGraph([(source, target) for source, _, target in subset])
            colors = {color for _, color, _ in subset}
            if nx.is_strongly_connected(looped) and not objective.accepts_set(colors):
                return True
    return False


@given(posets())
@settings(max_examples=60, deadline=None)
def test_width_matches_chain_count_and_brute_force(og):
    width, antichain = poset_width(og)
    chains = chain_decomposition(og)
    assert width == len(chains) == largest_antichain(og)
    assert len(antichain) == width
    assert not any(og.comparable(x, y) for x, y in itertools.combinations(antichain, 2))
    for chain in chains:
        assert all(og.leq(x, y) for x, y in zip(chain, chain[1:]))


@given(seeds, st.integers(1, 5), st.integers(1, 5))
@settings(max_examples=40, deadline=None)
def test_morphism_search_is_complete(seed, source_size, target_size):
    rng = make_rng(seed)
    source = random_graph(rng, source_size, ('a', 'b'), max_out=2)
    target = random_graph(rng, target_size, ('a', 'b'), max_out=2)
    found = find_graph_morphism(source, target)
    exists = any(
        check_morphism(source, target, dict(zip(source.vertices, images))) is None
        for images in itertools.product(target.vertices, repeat=len(source.vertices))
    )
    assert (found is not None) == exists
    if found is not None:
        assert check_morphism(source, target, found) is None


@given(seeds, st.integers(1, 4), st.integers(0, 4))
@settings(max_examples=40, deadline=None)
def test_unfolding_projects_onto_the_graph(seed, size, depth):
    graph = random_graph(make_rng(seed), size, ('a', 'b'), max_out=2)
    tree, projection = unfold(graph, graph.vertices[-1], depth)
    assert check_morphism(tree.graph, graph, projection) is None


@given(seeds, st.integers(1, 3), st.integers(1, 3), st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_morphisms_compose(seed, middle_size, target_size, depth):
    rng = make_rng(seed)
    middle = random_graph(rng, middle_size, ('a', 'b'), max_out=2)
    target = random_graph(rng, target_size, ('a', 'b'), max_out=2)
    tree, projection = unfold(middle, middle.vertices[0], depth)
    for images in itertools.product(target.vertices, repeat=len(middle.vertices)):
        mapping = dict(zip(middle.vertices, images))
        if check_morphism(middle, target, mapping) is None:
            assert check_morphism(tree.graph, target, compose(projection, mapping)) is None


@given(words, cycles)
def test_membership_ignores_how_a_lasso_is_written(prefix, cycle):
    word = LassoWord.parse(prefix, cycle)
    rotated = LassoWord.parse(prefix + cycle[0], cycle[1:] + cycle[0])
    repeated = LassoWord.parse(prefix, cycle * 2)
    for objective in (objectives.w1(), objectives.alternation(), objectives.w3(1, 2)):
        expected = lasso_membership(objective, word)
        assert lasso_membership(objective, rotated) == expected
        assert lasso_membership(objective, repeated) == expected


@given(words, words, cycles)
def test_prefix_independent_membership_ignores_the_prefix(first, second, cycle):
    for objective in (objectives.w1(), Muller(('a', 'b'), [{'a'}, {'a', 'b'}])):
        assert lasso_membership(objective, LassoWord.parse(first, cycle)) == lasso_membership(
            objective, LassoWord.parse(second, cycle)
        )


@given(
    st.text(alphabet='012', max_size=3),
    st.text(alphabet='012', max_size=3),
    st.text(alphabet='012', min_size=1, max_size=4),
)
def test_parity_membership_ignores_the_prefix(first, second, cycle):
    objective = parity_objective(3)
    assert lasso_membership(objective, LassoWord.parse(first, cycle)) == lasso_membership(
        objective, LassoWord.parse(second, cycle)
    )


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_satisfying_vertices_agree_with_single_checks(seed):
    graph = random_graph(make_rng(seed), 4, ('a', 'b'), max_out=2)
    alternation = objectives.alternation()
    expected = {v for v in graph.vertices if graph_satisfies(graph, alternation, v)}
    assert satisfying_vertices(graph, alternation) == expected


@given(seeds, st.integers(1, 3), st.sets(st.sampled_from(all_subsets(ABC))))
@settings(max_examples=60, deadline=None)
def test_muller_satisfaction_matches_cycle_enumeration(seed, size, family):
    graph = random_graph(make_rng(seed), size, ABC, max_out=3)
    objective = Muller(ABC, family)
    for vertex in graph.vertices:
        expected = not violates_by_enumeration(graph, objective, vertex)
        assert bool(graph_satisfies(graph, objective, vertex)) == expected


@given(seeds, st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_lifting_agrees_with_the_oracle_on_the_alternation(seed, size):
    game = random_game(make_rng(seed), size, objectives.alternation(), max_out=2)
    lifted = solve_via_universal(game, builtin_universal('alternation'))
    assert lifted.region == solve_oracle(game).region


@given(seeds, st.integers(1, 4), st.sampled_from(sorted(OBJECTIVES)))
@settings(max_examples=40, deadline=None)
def test_oracle_strategies_match_its_region(seed, size, name):
    game = random_game(make_rng(seed), size, OBJECTIVES[name](), max_out=2)
    solution = solve_oracle(game)
    for vertex in game.graph.vertices:
        if vertex in solution.region:
            assert verify_strategy(game.with_initial(vertex), solution.strategy(vertex))
        else:
            adam = solution.adam_strategy(vertex)
            assert verify_strategy(game.dual().with_initial(vertex), adam)


@given(seeds, st.integers(1, 4), st.sampled_from(['muller', 'parity', 'w1']))
@settings(max_examples=30, deadline=None)
def test_extracted_strategies_win_within_the_chains(seed, size, name):
    objective, u = lifted_case(name)
    game = random_game(make_rng(seed), size, objective, max_out=2)
    solution = solve_via_universal(game, u)
    assert solution.region == solve_oracle(game).region
    for vertex in solution.region:
        rooted = game.with_initial(vertex)
        strategy = extract_strategy(rooted, solution)
        assert verify_strategy(rooted, strategy)
        assert strategy.memory_usage <= len(solution.universal.memory_states)
