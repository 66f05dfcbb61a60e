"""
Two-player games on colored graphs.

Eve owns the vertices listed in ``eve``; Adam owns the rest. ε-games may
carry ε-edges and are judged against the ε-extension of their objective.
"""
from dataclasses import dataclass
from functools import cached_property

from apps.core.exceptions import InvalidGraph, InvalidObjective, InvalidParameters
from apps.core.ordering import canonical
from apps.graphs.graph import ColoredGraph
from apps.objectives.objectives import Complement

EVE = 'eve'
ADAM = 'adam'


@dataclass(frozen=True)
class Game:
    graph: ColoredGraph
    eve: frozenset
    initial: object
    objective: object
    epsilon: bool = False

    @classmethod
    def build(cls, graph, eve, initial, objective, epsilon=False):
        """Check the game invariants and return the game."""
        eve = frozenset(eve)
        outside = eve - graph.vertex_set
        if outside:
            raise InvalidGraph(
                'Eve vertices outside the graph',
                diagnostic={'vertices': list(canonical(outside))},
            )
        if initial not in graph.vertex_set:
            raise InvalidGraph(f'initial vertex {initial!r} is not in the graph')
        sinks = graph.sinks()
        if sinks:
            raise InvalidGraph('game graph has sinks', diagnostic={'sinks': list(sinks)})
        if graph.has_epsilon and not epsilon:
            raise InvalidGraph('ε-edges in a game not flagged as an ε-game')
        unknown = set(graph.alphabet) - set(objective.alphabet)
        if unknown:
            raise InvalidObjective(
                f'game colors {canonical(unknown)!r} are outside the objective alphabet'
            )
        return cls(graph=graph.as_graph(), eve=eve, initial=initial, objective=objective, epsilon=epsilon)

    @cached_property
    def adam(self):
        return self.graph.vertex_set - self.eve

    def owner(self, vertex):
        return EVE if vertex in self.eve else ADAM

    def is_eve(self, vertex):
        return vertex in self.eve

    def with_initial(self, vertex):
        if vertex not in self.graph.vertex_set:
            raise InvalidGraph(f'initial vertex {vertex!r} is not in the graph')
        return Game(self.graph, self.eve, vertex, self.objective, self.epsilon)

    def dual(self):
        """Swap the players and complement the objective."""
        if self.epsilon:
            raise InvalidParameters('the dual of an ε-game is not defined')
        return Game(
            graph=self.graph,
            eve=self.adam,
            initial=self.initial,
            objective=Complement(self.objective),
            epsilon=False,
        )

    def __len__(self):
        return len(self.graph)
