"""
Solving games through a monotone universal graph.

The solver keeps, for every game vertex v, the set of universal-graph
vertices x that can follow v forever: Eve needs one matched edge, Adam has
all his edges matched. The sets shrink to a greatest fixpoint; they are
upward closed, so their minimal elements form the progress map. Strategy
extraction then walks the chains (or the ε-separated parts) of the graph,
which become the memory states.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from apps.core.exceptions import InvalidUniversalGraph, LosingPosition, NotMonotone
from apps.core.ordering import canonical, sort_key
from apps.graphs.graph import EPSILON, restrict
from apps.objectives.satisfaction import graph_satisfies, satisfying_vertices
from apps.orders.poset import chain_decomposition, check_monotone
from apps.orders.separation import EpsSeparatedGraph
from apps.universal.constructions import TOP, top_complete

from .strategies import ProductStrategy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreparedUniversal:
    """A universal graph with its ⊤, satisfying vertices and memory layout."""

    graph: object
    satisfying: frozenset = field(hash=False)
    memory: dict = field(hash=False)
    delta: dict = field(default=None, hash=False)
    separated: bool = False

    @property
    def memory_states(self):
        return canonical(set(self.memory.values()) - {TOP})

    @cached_property
    def chains(self):
        """Return ``{memory state: vertices in ascending order}``."""
        chains = {}
        for vertex in self.graph.vertices:
            chains.setdefault(self.memory[vertex], []).append(vertex)
        for members in chains.values():
            members.sort(key=lambda v: (len(self.graph.down(v)), sort_key(v)))
        return chains


@lru_cache(maxsize=32)
def prepare_universal(u, objective):
    """
    Check ``u`` and complete it with a ⊤ when it has none.

    ``u`` is an OrderedGraph or an EpsSeparatedGraph.
    """
    separated = isinstance(u, EpsSeparatedGraph)
    ordered = u.ordered() if separated else u
    witness = check_monotone(ordered)
    if witness is not None:
        raise NotMonotone('universal graph is not monotone', witness=witness)
    base = [v for v in ordered.vertices if v != ordered.top]
    base_graph = restrict(ordered.graph, base)
    if graph_satisfies(base_graph, objective):
        satisfying = frozenset(base)
    else:
        satisfying = satisfying_vertices(base_graph, objective)
    if not satisfying:
        raise InvalidUniversalGraph('no vertex of the universal graph satisfies the objective')
    completed = ordered
    if ordered.top is None:
        completed = top_complete(ordered, objective, prune=False)
    if separated:
        memory = {v: u.partition.get(v, TOP) for v in completed.vertices}
        delta = u.delta
    else:
        chains = chain_decomposition(completed)
        memory = {v: index for index, chain in enumerate(chains) for v in chain}
        delta = None
    logger.debug(
        'Prepared universal graph: %d vertices, %d satisfying, %d memory states',
        len(completed.vertices), len(satisfying), len(set(memory.values())),
    )
    return PreparedUniversal(
        graph=completed,
        satisfying=satisfying,
        memory=memory,
        delta=delta,
        separated=separated,
    )


def _matches(u, source, color, targets):
    """Return the vertices among ``targets`` that answer ``source -color->``."""
    if color == EPSILON:
        answers = u.graph.successors(source, EPSILON) | u.down(source)
    else:
        answers = u.graph.successors(source, color)
    return answers & targets


@dataclass(frozen=True)
class UniversalSolution:
    game: object
    universal: PreparedUniversal
    relation: dict = field(hash=False)

    @property
    def region(self):
        return frozenset(
            v for v, xs in self.relation.items() if xs & self.universal.satisfying
        )

    @property
    def progress(self):
        """Return the minimal universal-graph vertices each game vertex can map to."""
        u = self.universal.graph
        result = {}
        for vertex, xs in self.relation.items():
            minimal = [x for x in xs if not any(y != x and u.leq(y, x) for y in xs)]
            result[vertex] = canonical(minimal)
        return result

    def strategy(self):
        return extract_strategy(self.game, self)


def solve_via_universal(game, u):
    """
    Solve ``game`` with the universal graph ``u`` for its objective.

    Returns a UniversalSolution whose region is the set of vertices that map
    to a satisfying vertex of ``u``; every other vertex maps to ⊤ only.
    """
    prepared = prepare_universal(u, game.objective)
    graph = prepared.graph
    relation = {v: set(graph.vertices) for v in game.graph.vertices}
    queue = deque(game.graph.vertices)
    queued = set(queue)
    rounds = 0
    while queue:
        vertex = queue.popleft()
        queued.discard(vertex)
        rounds += 1
        edges = game.graph.out_edges(vertex)
        if game.is_eve(vertex):
            removed = {
                x for x in relation[vertex]
                if not any(_matches(graph, x, c, relation[t]) for _, c, t in edges)
            }
        else:
            removed = {
                x for x in relation[vertex]
                if not all(_matches(graph, x, c, relation[t]) for _, c, t in edges)
            }
        if not removed:
            continue
        relation[vertex] -= removed
        for pred, _, _ in game.graph.in_edges(vertex):
            if pred not in queued:
                queued.add(pred)
                queue.append(pred)
    logger.debug('Lifting settled after %d vertex updates', rounds)
    solution = UniversalSolution(
        game=game,
        universal=prepared,
        relation={v: frozenset(xs) for v, xs in relation.items()},
    )
    logger.info(
        'Universal-graph solver: Eve wins %d of %d vertices',
        len(solution.region), len(game.graph.vertices),
    )
    return solution


def extract_strategy(game, solution):
    """
    Build a winning ProductStrategy whose memory states are the chains (or
    parts) of the universal graph.

    From ``(v, m)`` the strategy stands on the least vertex of chain m that v
    can map to, and follows the game edges that vertex answers.
    """
    if game.initial not in solution.region:
        raise LosingPosition(f'Eve does not win from {game.initial!r}')
    prepared = solution.universal
    u = prepared.graph
    relation = solution.relation
    chains = prepared.chains

    def representative(vertex, state):
        return next(x for x in chains[state] if x in relation[vertex])

    def answer(x, color, target):
        candidates = _matches(u, x, color, relation[target])
        minimal = [y for y in candidates if not any(z != y and u.leq(z, y) for z in candidates)]
        best = min(minimal, key=lambda y: (sort_key(prepared.memory[y]), sort_key(y)))
        return prepared.memory[best]

    reached = relation[game.initial]
    starts = [
        x for x in reached & prepared.satisfying
        if not any(y != x and u.leq(y, x) for y in reached)
    ]
    first = min(starts, key=lambda x: (sort_key(prepared.memory[x]), sort_key(x)))
    initial = (game.initial, prepared.memory[first])

    seen = {initial}
    queue = deque([initial])
    edges = []
    while queue:
        vertex, state = queue.popleft()
        x = representative(vertex, state)
        moves = []
        for _, color, target in game.graph.out_edges(vertex):
            if _matches(u, x, color, relation[target]):
                moves.append((color, target, answer(x, color, target)))
                if game.is_eve(vertex):
                    break
        for color, target, next_state in moves:
            pair = (target, next_state)
            edges.append(((vertex, state), color, pair))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)

    delta = None
    if prepared.delta is not None:
        delta = dict(prepared.delta)
        if game.epsilon:
            delta.update({(m, EPSILON): m for m in prepared.memory_states})
    strategy = ProductStrategy.build(
        game.graph.alphabet,
        prepared.memory_states,
        initial,
        edges,
        delta=delta,
        eps_respecting=prepared.separated and game.epsilon,
    )
    logger.info(
        'Extracted strategy with %d memory states (largest fiber %d)',
        len(strategy.memory), strategy.memory_usage,
    )
    return strategy
