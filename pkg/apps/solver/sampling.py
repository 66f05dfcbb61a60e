"""
Seeded random games, satisfying sample graphs and monotone graphs.
"""
import logging

from apps.core.exceptions import InvalidParameters
from apps.graphs.generators import make_rng, random_graph
from apps.objectives.satisfaction import graph_satisfies
from apps.orders.poset import OrderedGraph, monotone_closure

from .games import Game

logger = logging.getLogger(__name__)


def random_game(rng, size, objective, max_out=3, alphabet=None):
    """Return a random game on ``size`` vertices, each owned by Eve with probability 1/2."""
    alphabet = tuple(alphabet or objective.alphabet)
    graph = random_graph(rng, size, alphabet, max_out=max_out)
    eve = [vertex for vertex in graph.vertices if rng.random() < 0.5]
    return Game.build(graph, eve, graph.vertices[0], objective)


def random_games(seed, count, objective, max_size=6, max_out=3):
    """Yield ``count`` games of 1..max_size vertices drawn from ``seed``."""
    rng = make_rng(seed)
    for _ in range(count):
        yield random_game(rng, rng.randint(1, max_size), objective, max_out=max_out)


def satisfying_samples(objective, count, max_size=5, seed=0, attempts=200):
    """
    Return up to ``count`` random samples satisfying ``objective``.

    Prefix-independent objectives get whole graphs that satisfy from every
    vertex; other objectives get ``(graph, root)`` pairs.
    """
    if count < 0 or max_size < 1:
        raise InvalidParameters('sample count and size must be positive')
    rng = make_rng(seed)
    samples = []
    tries = 0
    while len(samples) < count and tries < count * attempts:
        tries += 1
        graph = random_graph(rng, rng.randint(1, max_size), objective.alphabet, max_out=2)
        if objective.prefix_independent:
            if graph_satisfies(graph, objective):
                samples.append(graph)
            continue
        roots = [v for v in graph.vertices if graph_satisfies(graph, objective, v)]
        if roots:
            samples.append((graph, roots[0]))
    if len(samples) < count:
        logger.warning('Only %d of %d satisfying samples found', len(samples), count)
    return samples


def random_monotone_graph(rng, size, alphabet, density=0.3):
    """
    Return a random OrderedGraph closed under monotonicity.

    The order comes from random pairs ``i < j`` between vertex indices.
    """
    graph = random_graph(rng, size, alphabet, max_out=2)
    pairs = [
        (graph.vertices[i], graph.vertices[j])
        for i in range(size) for j in range(i + 1, size)
        if rng.random() < density
    ]
    return monotone_closure(OrderedGraph.from_generators(graph, pairs))
