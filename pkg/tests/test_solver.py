"""
Tests for games, both solvers, strategy verification and game documents.
"""
import networkx as nx
import pytest

from apps.core.exceptions import InvalidGraph, InvalidObjective, InvalidParameters, LosingPosition
from apps.graphs.graph import EPSILON, ColoredGraph, restrict
from apps.objectives import builtins as objectives
from apps.objectives.objectives import Complement, LassoWord, Muller, lasso_membership
from apps.orders.poset import OrderedGraph
from apps.solver.formats import dump_game, dump_strategy, load_game, load_strategy
from apps.solver.games import Game
from apps.solver.lifting import extract_strategy, solve_via_universal
from apps.solver.lower_bounds import w2_eps_game, width_witness_graph
from apps.solver.oracle import solve_oracle
from apps.solver.parity_games import attractor, solve_parity
from apps.solver.sampling import random_games
from apps.solver.strategies import Outcome, ProductStrategy, verify_strategy
from apps.solver.universality import check_universality_sample
from apps.universal.builtins import builtin_universal
from apps.universal.constructions import muller_universal


def test_game_rejects_unknown_eve_vertices(two_cycle):
    with pytest.raises(InvalidGraph) as error:
        Game.build(two_cycle, {'z'}, 'x', objectives.w1())
    assert error.value.diagnostic == {'vertices': ['z']}


def test_game_rejects_foreign_colors(two_cycle):
    with pytest.raises(InvalidObjective):
        Game.build(two_cycle, {'x'}, 'x', Muller(('a',), [{'a'}]))


def test_game_needs_the_epsilon_flag():
    graph = ColoredGraph.build(('a',), ['v'], [('v', 'a', 'v'), ('v', EPSILON, 'v')])
    with pytest.raises(InvalidGraph):
        Game.build(graph, {'v'}, 'v', Muller(('a',), [{'a'}]))
    assert Game.build(graph, {'v'}, 'v', Muller(('a',), [{'a'}]), epsilon=True).epsilon


def test_dual_swaps_players(choice_game):
    dual = choice_game.dual()
    assert dual.eve == frozenset()
    assert isinstance(dual.objective, Complement)
    with pytest.raises(InvalidParameters):
        w2_eps_game().dual()


def test_oracle_region_of_the_alternation_game(fig1):
    solution = solve_oracle(fig1)
    assert solution.region == {'v0', 'v1', 'v2'}
    strategy = solution.strategy()
    assert verify_strategy(fig1, strategy)
    assert strategy.chromatic


def test_oracle_gives_adam_the_losing_positions(two_cycle):
    game = Game.build(two_cycle, set(), 'y', objectives.alternation())
    solution = solve_oracle(game)
    assert solution.region == {'x'}
    with pytest.raises(LosingPosition):
        solution.strategy()
    adam = solution.adam_strategy()
    assert verify_strategy(game.dual(), adam)


def test_positional_strategy_loses_w1(choice_game):
    strategy = ProductStrategy.build(('a', 'b'), [0], ('v', 0), [(('v', 0), 'a', ('v', 0))])
    verdict = verify_strategy(choice_game, strategy)
    assert verdict.outcome == Outcome.COUNTEREXAMPLE
    assert verdict.counterexample.cycle == ('a',)


def test_two_state_strategy_wins_w1(choice_game):
    strategy = ProductStrategy.build(
        ('a', 'b'),
        [0, 1],
        ('v', 0),
        [(('v', 0), 'a', ('v', 1)), (('v', 1), 'b', ('v', 0))],
    )
    assert verify_strategy(choice_game, strategy)
    assert strategy.memory_usage == 2


def test_strategy_must_answer_every_adam_edge(fig1):
    strategy = ProductStrategy.build(
        ('a', 'b'),
        [0],
        ('v0', 0),
        [(('v0', 0), 'a', ('v2', 0)), (('v2', 0), 'a', ('v2', 0))],
    )
    verdict = verify_strategy(fig1, strategy)
    assert verdict.outcome == Outcome.STRUCTURAL
    assert verdict.clause == 'adam-closure'


def test_strategy_must_follow_game_edges(choice_game):
    strategy = ProductStrategy.build(('a', 'b'), [0], ('v', 0), [(('v', 0), 'a', ('w', 0))])
    verdict = verify_strategy(choice_game, strategy)
    assert verdict.clause == 'projection'


def test_lifting_agrees_with_the_oracle(fig1):
    solution = solve_via_universal(fig1, builtin_universal('alternation'))
    assert solution.region == solve_oracle(fig1).region
    strategy = extract_strategy(fig1, solution)
    assert verify_strategy(fig1, strategy)
    assert strategy.memory_usage <= 2


def test_lifting_on_random_w1_games():
    u = builtin_universal('W1', bound=7)
    for game in random_games(3, 20, objectives.w1(), max_size=4):
        lifted = solve_via_universal(game, u)
        assert lifted.region == solve_oracle(game).region
        if game.initial in lifted.region:
            assert verify_strategy(game, lifted.strategy())


def test_losing_initial_vertex_has_no_strategy(two_cycle):
    game = Game.build(two_cycle, {'x', 'y'}, 'y', objectives.alternation())
    solution = solve_via_universal(game, builtin_universal('alternation'))
    assert 'y' not in solution.region
    with pytest.raises(LosingPosition):
        extract_strategy(game, solution)


def arena(nodes, edges):
    graph = nx.DiGraph()
    for node, player, priority in nodes:
        graph.add_node(node, player=player, priority=priority)
    graph.add_edges_from(edges)
    return graph


def test_attractor_waits_for_every_adam_edge():
    graph = arena(
        [('t', 0, 0), ('e', 0, 0), ('a', 1, 0), ('z', 1, 1)],
        [('e', 't'), ('e', 'z'), ('a', 't'), ('a', 'z'), ('t', 't'), ('z', 'z')],
    )
    region, strategy = attractor(graph, {'t'}, 0, set(graph.nodes))
    assert region == {'t', 'e'}
    assert strategy == {'e': 't'}


def test_parity_game_regions():
    graph = arena(
        [('even', 0, 2), ('odd', 1, 1), ('hub', 0, 0)],
        [('hub', 'even'), ('hub', 'odd'), ('even', 'even'), ('odd', 'odd')],
    )
    regions, strategies = solve_parity(graph)
    assert regions[0] == {'even', 'hub'}
    assert regions[1] == {'odd'}
    assert strategies[0]['hub'] == 'even'


def test_dead_ends_are_rejected():
    graph = arena([('x', 0, 0), ('y', 0, 0)], [('x', 'y')])
    with pytest.raises(InvalidGraph):
        solve_parity(graph)


def test_game_and_strategy_documents(fig1):
    game = load_game(dump_game(fig1))
    assert game.eve == fig1.eve
    assert game.initial == 'v0'
    assert lasso_membership(game.objective, LassoWord.parse('', 'ab'))
    assert not lasso_membership(game.objective, LassoWord.parse('b', 'ab'))

    strategy = solve_oracle(fig1).strategy()
    document = dump_strategy(strategy)
    reloaded = load_strategy(document, game)
    assert verify_strategy(game, reloaded)


def test_game_document_with_objective_file(tmp_path, two_cycle):
    (tmp_path / 'w1.json').write_text(
        '{"type": "builtin", "name": "W1"}', encoding='utf-8'
    )
    document = {
        'alphabet': ['a', 'b'],
        'vertices': [{'id': 'x', 'owner': 'eve'}, {'id': 'y', 'owner': 'adam'}],
        'edges': [['x', 'a', 'y'], ['y', 'b', 'x']],
        'objective': 'w1.json',
    }
    game = load_game(document, base_dir=tmp_path)
    assert game.eve == {'x'}
    assert game.graph == two_cycle
    with pytest.raises(InvalidObjective):
        load_game({**document, 'objective': 'missing.json'}, base_dir=tmp_path)


def test_universality_passes_on_the_full_graph():
    u = muller_universal(objectives.w1(), 7)
    report = check_universality_sample(u, objectives.w1(), [width_witness_graph(3)])
    assert report
    assert report.checked == 1


def test_universality_reports_where_a_column_is_missing():
    u = muller_universal(objectives.w1(), 7)
    column = [vertex for vertex in u.vertices if vertex[0] == 0]
    narrow = OrderedGraph.from_predicate(restrict(u.graph, column), u.leq)
    report = check_universality_sample(narrow, objectives.w1(), [width_witness_graph(3)])
    assert not report
    assert report.checked == 1
    assert report.index == 0
    root, start, edge = report.stuck
    assert root == '0'
    assert start in column
    assert edge[:2] == ('0', 'a')
    assert str(report).startswith('sample 0 fails')


def test_universality_stops_at_the_first_failing_sample(two_cycle):
    narrow = OrderedGraph.discrete(two_cycle)
    samples = [two_cycle, width_witness_graph(3), width_witness_graph(4)]
    report = check_universality_sample(narrow, objectives.w1(), samples)
    assert report.index == 1
    assert report.checked == 2
    assert report.stuck[:2] == ('0', 'x')
