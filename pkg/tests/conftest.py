import pytest

from apps.graphs.graph import ColoredGraph
from apps.objectives import builtins as objectives
from apps.solver.games import Game
from apps.solver.lower_bounds import fig1_game


@pytest.fixture
def two_cycle():
    """x -a-> y -b-> x"""
    return ColoredGraph.build(('a', 'b'), ['x', 'y'], [('x', 'a', 'y'), ('y', 'b', 'x')])


@pytest.fixture
def a_loop():
    return ColoredGraph.build(('a', 'b'), ['v'], [('v', 'a', 'v')])


@pytest.fixture
def fig1():
    return fig1_game()


@pytest.fixture
def choice_game():
    """Eve picks between an a-loop and a b-loop; W1 wants both forever."""
    graph = ColoredGraph.build(('a', 'b'), ['v'], [('v', 'a', 'v'), ('v', 'b', 'v')])
    return Game.build(graph, {'v'}, 'v', objectives.w1())


@pytest.fixture
def small_budget(settings):
    settings.MEMORIA_MAX_SEARCH = 1
    return settings
