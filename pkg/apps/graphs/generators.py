"""
Seeded random colored graphs for sampling and property tests.
"""
import random

from apps.core.exceptions import InvalidParameters

from .graph import ColoredGraph


def random_graph(rng, size, alphabet, max_out=3, loops=True):
    """
    Return a random sink-free graph on vertices ``'0'..str(size-1)``.

    Every vertex gets between 1 and ``max_out`` distinct outgoing edges.
    """
    if size < 1:
        raise InvalidParameters('size must be at least 1')
    if not alphabet:
        raise InvalidParameters('alphabet must be nonempty')
    vertices = [str(index) for index in range(size)]
    edges = set()
    for source in vertices:
        targets = vertices if loops else [v for v in vertices if v != source] or vertices
        wanted = rng.randint(1, max_out)
        for _ in range(wanted):
            edges.add((source, rng.choice(list(alphabet)), rng.choice(targets)))
    return ColoredGraph.build(alphabet, vertices, edges)


def make_rng(seed):
    """Return a private ``random.Random`` for ``seed``."""
    return random.Random(seed)
