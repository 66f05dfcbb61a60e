"""
Reference solver: the game times the objective's parity automaton.

Arena nodes are ``('v', vertex, state)`` owned by the vertex owner and
``('e', vertex, state, color, target)`` carrying the priority of the
transition taken. Strategies read back from the arena use the automaton
states as memory and are chromatic with the automaton's transitions.
"""
import logging
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from apps.core.exceptions import LosingPosition
from apps.core.ordering import canonical
from apps.graphs.graph import EPSILON
from apps.objectives.compile import compile_objective

from .parity_games import solve_parity
from .strategies import ProductStrategy

logger = logging.getLogger(__name__)


def product_arena(game, automaton):
    """Return the parity arena of ``game`` against ``automaton``."""
    arena = nx.DiGraph()
    for vertex in game.graph.vertices:
        player = 0 if game.is_eve(vertex) else 1
        for state in automaton.states:
            arena.add_node(('v', vertex, state), player=player, priority=0)
    for source, color, target in game.graph.edges:
        for state in automaton.states:
            next_state, priority = automaton.step(state, color)
            node = ('e', source, state, color, target)
            arena.add_node(node, player=0, priority=priority)
            arena.add_edge(('v', source, state), node)
            arena.add_edge(node, ('v', target, next_state))
    return arena


def game_automaton(game):
    automaton = compile_objective(game.objective)
    return automaton.with_epsilon() if game.epsilon else automaton


@dataclass(frozen=True)
class OracleSolution:
    game: object
    automaton: object
    winning: frozenset = field(hash=False)
    choices: tuple = field(hash=False)

    @property
    def region(self):
        """Return the vertices from which Eve wins."""
        return frozenset(
            vertex for vertex in self.game.graph.vertices if self.wins(vertex)
        )

    def wins(self, vertex, state=None):
        """Return True if Eve wins from ``vertex`` with the automaton in ``state``."""
        state = self.automaton.initial if state is None else state
        return ('v', vertex, state) in self.winning

    def _unfold(self, game, player, start):
        automaton = self.automaton
        chooser = self.choices[player]
        initial = (start, automaton.initial)
        seen = {initial}
        queue = deque([initial])
        edges = []
        while queue:
            vertex, state = queue.popleft()
            node = ('v', vertex, state)
            if node in chooser:
                _, _, _, color, target = chooser[node]
                moves = [(vertex, color, target)]
            else:
                moves = game.graph.out_edges(vertex)
            for _, color, target in moves:
                pair = (target, automaton.step(state, color)[0])
                edges.append(((vertex, state), color, pair))
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        memory = canonical({state for _, state in seen})
        colors = game.graph.alphabet + ((EPSILON,) if game.epsilon else ())
        delta = {
            (state, color): automaton.step(state, color)[0]
            for state in memory for color in colors
        }
        return ProductStrategy.build(
            game.graph.alphabet,
            memory,
            initial,
            edges,
            delta=delta,
            eps_respecting=game.epsilon,
        )

    def strategy(self, vertex=None):
        """
        Return Eve's winning strategy from ``vertex`` (default: the initial vertex).

        The strategy is a strategy of ``game.with_initial(vertex)``.
        """
        vertex = self.game.initial if vertex is None else vertex
        if not self.wins(vertex):
            raise LosingPosition(f'Eve does not win from {vertex!r}')
        return self._unfold(self.game, 0, vertex)

    def adam_strategy(self, vertex=None):
        """Return Adam's winning strategy from ``vertex`` as an Eve strategy of the dual game."""
        vertex = self.game.initial if vertex is None else vertex
        if self.wins(vertex):
            raise LosingPosition(f'Adam does not win from {vertex!r}')
        return self._unfold(self.game.dual(), 1, vertex)


def solve_oracle(game):
    """Solve ``game`` exactly and return an OracleSolution."""
    automaton = game_automaton(game)
    arena = product_arena(game, automaton)
    regions, strategies = solve_parity(arena)
    solution = OracleSolution(
        game=game,
        automaton=automaton,
        winning=frozenset(regions[0]),
        choices=(strategies[0], strategies[1]),
    )
    logger.info(
        'Oracle: Eve wins %d of %d vertices', len(solution.region), len(game.graph.vertices)
    )
    return solution
