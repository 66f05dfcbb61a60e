"""
Brute-force search for the least memory a winning strategy needs.

For each k the search builds a strategy graph over ``V × {0..k-1}`` lazily
from ``(v0, 0)``. Each open pair gets its moves decided in turn: Eve picks
one edge and a memory state for it, Adam's edges each get a memory state.
Memory states are handed out in order of first use, so relabelings are not
revisited. A partial strategy is abandoned as soon as one of its paths can
no longer be completed into a win or one of its cycles loses.
"""
import logging
from dataclasses import dataclass

from django.db import models

from apps.core.conf import search_budget
from apps.core.exceptions import InvalidParameters, SearchBudgetExceeded, StrategyRejected
from apps.core.ordering import canonical
from apps.graphs.graph import EPSILON, ColoredGraph
from apps.objectives.satisfaction import graph_satisfies, has_doomed_prefix

from .strategies import ProductStrategy, verify_strategy

logger = logging.getLogger(__name__)


class Variant(models.TextChoices):
    EPS_FREE = 'eps-free', 'ε-free memory'
    EPS = 'eps', 'ε-memory'
    CHROMATIC = 'chromatic', 'Chromatic memory'
    EPS_CHROMATIC = 'eps-chromatic', 'Chromatic ε-memory'


@dataclass(frozen=True)
class MemoryResult:
    variant: str
    k_max: int
    memory: int = None
    strategy: ProductStrategy = None
    explored: int = 0

    @property
    def found(self):
        return self.memory is not None

    def __str__(self):
        return str(self.memory) if self.found else f'>{self.k_max}'


class _Search:
    def __init__(self, game, variant, k, budget, explored=0):
        self.game = game
        self.k = k
        self.budget = budget
        self.explored = explored
        self.keeps_on_eps = variant in (Variant.EPS, Variant.EPS_CHROMATIC)
        self.chromatic = variant in (Variant.CHROMATIC, Variant.EPS_CHROMATIC)
        self.initial = (game.initial, 0)
        self.nodes = {self.initial}
        self.edges = set()
        self.delta = {}
        self.used = 1

    def _states(self, state, color):
        """Yield ``(next state, new delta key or None, new used count)``."""
        if color == EPSILON and self.keeps_on_eps:
            yield state, None, self.used
            return
        if self.chromatic and (state, color) in self.delta:
            yield self.delta[(state, color)], None, self.used
            return
        key = (state, color) if self.chromatic else None
        for target in range(min(self.k, self.used + 1)):
            yield target, key, max(self.used, target + 1)

    def _options(self, pair):
        vertex, state = pair
        out = self.game.graph.out_edges(vertex)
        if self.game.is_eve(vertex):
            for _, color, target in out:
                for next_state, key, used in self._states(state, color):
                    yield [((pair, color, (target, next_state)), key)], used
            return
        yield from self._adam_options(pair, list(out), [], self.used, {})

    def _adam_options(self, pair, out, chosen, used, pending):
        # pending holds δ entries fixed earlier in this same combination
        if not out:
            yield list(chosen), used
            return
        (_, color, target), rest = out[0], out[1:]
        state = pair[1]
        saved = self.used
        self.used = used
        if self.chromatic and (state, color) in pending:
            options = [(pending[(state, color)], None, used)]
        else:
            options = list(self._states(state, color))
        self.used = saved
        for next_state, key, next_used in options:
            chosen.append(((pair, color, (target, next_state)), key))
            if key is not None:
                pending[key] = next_state
            yield from self._adam_options(pair, rest, chosen, next_used, pending)
            if key is not None:
                del pending[key]
            chosen.pop()

    def _partial(self):
        return ColoredGraph(
            alphabet=self.game.graph.alphabet,
            vertices=canonical(self.nodes),
            edges=canonical(self.edges),
            pregraph=True,
        )

    def _alive(self):
        partial = self._partial()
        objective = self.game.objective
        if has_doomed_prefix(partial, objective, self.initial):
            return False
        return bool(graph_satisfies(partial, objective, self.initial))

    def _expand(self, pending):
        self.explored += 1
        if self.explored > self.budget:
            raise SearchBudgetExceeded(
                f'memory search exceeded {self.budget} nodes', explored=self.explored
            )
        if not pending:
            return True
        pair, rest = pending[0], pending[1:]
        for moves, used in self._options(pair):
            added_nodes, added_keys = [], []
            saved_used = self.used
            for edge, key in moves:
                self.edges.add(edge)
                if edge[2] not in self.nodes:
                    self.nodes.add(edge[2])
                    added_nodes.append(edge[2])
                if key is not None and key not in self.delta:
                    self.delta[key] = edge[2][1]
                    added_keys.append(key)
            self.used = used
            if self._alive() and self._expand(rest + tuple(canonical(added_nodes))):
                return True
            for edge, _ in moves:
                self.edges.discard(edge)
            for node in added_nodes:
                self.nodes.discard(node)
            for key in added_keys:
                del self.delta[key]
            self.used = saved_used
        return False

    def run(self):
        if not self._expand((self.initial,)):
            return None
        delta = None
        if self.chromatic:
            colors = self.game.graph.alphabet + ((EPSILON,) if self.game.epsilon else ())
            delta = {
                (m, c): self.delta.get((m, c), m)
                for m in range(self.k) for c in colors
            }
        return ProductStrategy.build(
            self.game.graph.alphabet,
            range(self.k),
            self.initial,
            self.edges,
            delta=delta,
            eps_respecting=self.keeps_on_eps,
        )


def min_memory(game, variant=Variant.EPS_FREE, k_max=4):
    """
    Return the least k <= k_max such that Eve wins with k memory states.

    The returned MemoryResult carries the verified witness strategy, or
    reports ``>k_max`` when none of the sizes suffices.
    """
    if variant not in Variant.values:
        raise InvalidParameters(f'unknown memory variant {variant!r}')
    if k_max < 1:
        raise InvalidParameters('k_max must be at least 1')
    budget = search_budget()
    explored = 0
    for k in range(1, k_max + 1):
        search = _Search(game, variant, k, budget, explored)
        strategy = search.run()
        explored = search.explored
        logger.debug('Memory %d (%s): %s after %d nodes', k, variant, bool(strategy), explored)
        if strategy is not None:
            verdict = verify_strategy(game, strategy)
            if not verdict:
                raise StrategyRejected(
                    f'memory search produced a losing strategy: {verdict}', verdict=verdict
                )
            logger.info('Minimal %s memory is %d', variant, k)
            return MemoryResult(variant, k_max, k, strategy, explored)
    logger.info('No %s strategy with memory at most %d', variant, k_max)
    return MemoryResult(variant, k_max, explored=explored)


def memory_chain(game, k_max=4):
    """Return the results of every variant on ``game``, in increasing strength."""
    return {
        variant: min_memory(game, variant, k_max)
        for variant in Variant.values
    }
