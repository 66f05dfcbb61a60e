"""
Sampled universality checks.

A candidate graph u passes on a sample H when a prover can answer every
H-edge from some satisfying vertex of u forever, which maps the unfolding
of H into u. The simulation is a safety game solved as a greatest fixpoint.
"""
import logging
from dataclasses import dataclass

from apps.core.exceptions import InvalidGraph
from apps.core.ordering import canonical
from apps.objectives.satisfaction import graph_satisfies, satisfying_vertices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UniversalityReport:
    ok: bool
    checked: int = 0
    sample: object = None
    index: int = None
    stuck: tuple = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f'pass ({self.checked} samples)'
        return f'sample {self.index} fails; stuck at {self.stuck!r}'


def simulation(sample, graph):
    """
    Return the greatest set of pairs ``(h, x)`` from which ``graph`` answers
    every path of ``sample``, and for each discarded pair the sample edge
    that could not be answered.
    """
    alive = {(h, x) for h in sample.vertices for x in graph.vertices}
    blocked = {}
    changed = True
    rounds = 0
    while changed:
        changed = False
        rounds += 1
        for h, x in canonical(alive):
            for edge in sample.out_edges(h):
                _, color, target = edge
                if not any((target, y) in alive for y in graph.successors(x, color)):
                    alive.discard((h, x))
                    blocked[(h, x)] = edge
                    changed = True
                    break
    logger.debug('Simulation settled after %d rounds with %d pairs', rounds, len(alive))
    return alive, blocked


def _roots(sample, objective):
    if isinstance(sample, tuple):
        graph, root = sample
        if not graph_satisfies(graph, objective, root):
            raise InvalidGraph(f'sample violates the objective from {root!r}')
        return graph, [root]
    result = graph_satisfies(sample, objective)
    if not result:
        raise InvalidGraph(
            'sample violates the objective',
            diagnostic={'start': result.start, 'lasso': str(result.counterexample)},
        )
    return sample, list(sample.vertices)


def check_universality_sample(u, objective, samples):
    """
    Check ``u`` on every sample.

    A sample is a graph (every vertex is a root) or a ``(graph, root)`` pair.
    Returns a UniversalityReport naming the first failing sample and the
    stuck pair reached from its root.
    """
    graph = u.graph
    satisfying = satisfying_vertices(graph, objective) - {getattr(u, 'top', None)}
    for index, sample in enumerate(samples):
        sample_graph, roots = _roots(sample, objective)
        alive, blocked = simulation(sample_graph, graph)
        for root in roots:
            if any((root, x) in alive for x in satisfying):
                continue
            start = canonical(satisfying)[0] if satisfying else None
            stuck = (root, start, blocked.get((root, start)))
            logger.info('Universality sample %d fails at root %r', index, root)
            return UniversalityReport(False, index + 1, sample, index, stuck)
    logger.info('Universality check passed on %d samples', len(samples))
    return UniversalityReport(True, len(samples))
