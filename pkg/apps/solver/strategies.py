"""
Product strategies and their verification.

A product strategy is a graph over ``(vertex, memory)`` pairs. Verification
checks the structural invariants first and only then asks whether every
infinite path from the initial pair satisfies the objective.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

from django.db import models

from apps.core.exceptions import InvalidGraph
from apps.core.ordering import canonical
from apps.graphs.graph import EPSILON, ColoredGraph, reachable_from, restrict
from apps.graphs.morphisms import check_morphism
from apps.objectives.satisfaction import graph_satisfies

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProductStrategy:
    """
    A strategy for Eve with memory ``memory``.

    ``delta`` maps ``(memory state, color)`` to the next memory state when the
    strategy is chromatic.
    """

    memory: tuple
    graph: ColoredGraph
    initial: tuple
    delta: dict = field(default=None, hash=False)
    eps_respecting: bool = False

    @classmethod
    def build(cls, alphabet, memory, initial, edges, delta=None, eps_respecting=False):
        edges = list(edges)
        vertices = {initial}
        for source, _, target in edges:
            vertices.update((source, target))
        graph = ColoredGraph.build(alphabet, vertices, edges, pregraph=True)
        return cls(
            memory=canonical(memory),
            graph=graph,
            initial=initial,
            delta=None if delta is None else dict(delta),
            eps_respecting=eps_respecting,
        )

    @property
    def chromatic(self):
        return self.delta is not None

    @cached_property
    def fibers(self):
        fibers = {}
        for vertex, state in self.graph.vertices:
            fibers.setdefault(vertex, set()).add(state)
        return {vertex: canonical(states) for vertex, states in fibers.items()}

    def fiber(self, vertex):
        """Return the memory states paired with ``vertex``."""
        return self.fibers.get(vertex, ())

    @property
    def memory_usage(self):
        """Return the largest fiber size."""
        return max((len(states) for states in self.fibers.values()), default=0)

    def choice(self, vertex, state):
        """Return the out-edges of the pair ``(vertex, state)``."""
        return self.graph.out_edges((vertex, state))


class Outcome(models.TextChoices):
    WINNING = 'winning', 'Winning'
    COUNTEREXAMPLE = 'counterexample', 'Counterexample lasso'
    STRUCTURAL = 'structural', 'Structural violation'


@dataclass(frozen=True)
class Verdict:
    outcome: str
    clause: str = ''
    witness: object = None
    counterexample: object = None

    def __bool__(self):
        return self.outcome == Outcome.WINNING

    def __str__(self):
        if self.outcome == Outcome.WINNING:
            return 'winning'
        if self.outcome == Outcome.COUNTEREXAMPLE:
            return f'counterexample {self.counterexample}'
        return f'structural violation ({self.clause}): {self.witness!r}'


def _structural(clause, witness):
    logger.debug('Strategy violates %s at %r', clause, witness)
    return Verdict(Outcome.STRUCTURAL, clause=clause, witness=witness)


def _structure(game, strategy):
    graph = strategy.graph
    if strategy.initial not in graph.vertex_set or strategy.initial[0] != game.initial:
        return _structural('initial', strategy.initial)
    known = set(strategy.memory)
    for vertex in graph.vertices:
        if vertex[1] not in known:
            return _structural('memory', vertex)
    projection = {vertex: vertex[0] for vertex in graph.vertices}
    try:
        bad = check_morphism(graph, game.graph, projection)
    except InvalidGraph as exc:
        return _structural('projection', exc.diagnostic)
    if bad is not None:
        return _structural('projection', bad)
    for pair in graph.vertices:
        vertex = pair[0]
        if game.is_eve(vertex):
            continue
        answered = {(color, target[0]) for _, color, target in graph.out_edges(pair)}
        for _, color, target in game.graph.out_edges(vertex):
            if (color, target) not in answered:
                return _structural('adam-closure', (pair, color, target))
    sinks = graph.sinks()
    if sinks:
        return _structural('sink', sinks[0])
    if strategy.eps_respecting:
        for source, color, target in graph.edges:
            if color == EPSILON and source[1] != target[1]:
                return _structural('eps-update', (source, color, target))
    if strategy.delta is not None:
        for source, color, target in graph.edges:
            if strategy.eps_respecting and color == EPSILON:
                expected = strategy.delta.get((source[1], EPSILON), source[1])
                if expected != source[1]:
                    return _structural('eps-update', (source[1], color, expected))
            else:
                expected = strategy.delta.get((source[1], color))
            if expected != target[1]:
                return _structural('chromatic', (source, color, target))
    return None


def verify_strategy(game, strategy):
    """
    Check ``strategy`` against ``game``.

    Returns a Verdict: winning, a counterexample lasso read from the initial
    pair, or the first structural invariant that fails with its witness.
    """
    violation = _structure(game, strategy)
    if violation is not None:
        return violation
    reached = restrict(strategy.graph, reachable_from(strategy.graph, strategy.initial))
    result = graph_satisfies(reached, game.objective, strategy.initial)
    if result:
        return Verdict(Outcome.WINNING)
    logger.debug('Strategy loses along %s', result.counterexample)
    return Verdict(Outcome.COUNTEREXAMPLE, counterexample=result.counterexample)
