"""
ε-separated graphs: chain partitions whose order is carried by ε-edges.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

from apps.core.exceptions import InvalidGraph, InvalidOrder, NotMonotone
from apps.core.ordering import canonical, sort_key
from apps.graphs.graph import EPSILON, ColoredGraph

from .poset import OrderedGraph, chain_decomposition, check_monotone

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    """A failed ε-separation clause and the vertices or edge witnessing it."""

    clause: str
    witness: tuple

    def __str__(self):
        return f'{self.clause} violated at {self.witness!r}'


@dataclass(frozen=True)
class EpsSeparatedGraph:
    """
    A graph over alphabet ∪ {ε} with a partition into parts.

    The order is induced by ε-edges: ``v <= v2`` iff ``v2 -eps-> v``.
    ``delta`` is the chromatic update ``{(part, color): part}`` when known.
    """

    graph: ColoredGraph
    partition: dict = field(hash=False)
    delta: dict = field(default=None, hash=False)

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def alphabet(self):
        return self.graph.alphabet

    @cached_property
    def parts(self):
        """Return ``{part: vertices in ascending order}``."""
        members = {}
        for vertex in self.graph.vertices:
            members.setdefault(self.partition[vertex], []).append(vertex)
        order = self.ordered()
        return {
            part: sorted(items, key=lambda v: (len(order.down(v)), sort_key(v)))
            for part, items in sorted(members.items(), key=lambda item: sort_key(item[0]))
        }

    @property
    def breadth(self):
        return len(self.parts)

    @property
    def memory(self):
        return canonical(self.parts)

    def ordered(self):
        """Return the induced OrderedGraph over the same graph."""
        pairs = [(target, source) for source, color, target in self.graph.edges if color == EPSILON]
        return OrderedGraph.from_generators(self.graph, pairs)

    def with_delta(self, delta):
        return EpsSeparatedGraph(graph=self.graph, partition=self.partition, delta=delta)

    def check(self):
        """Return the first separation violation, or a chromatic violation, or None."""
        violation = check_eps_separated(self.graph, self.partition)
        if violation is None and self.delta is not None:
            edge = check_chromatic(self.graph, self.partition, self.delta)
            if edge is not None:
                violation = Violation('chromatic', edge)
        return violation


def _require_total(graph, partition):
    missing = [vertex for vertex in graph.vertices if vertex not in partition]
    if missing:
        raise InvalidOrder(f'partition misses vertices {canonical(missing)!r}')


def check_eps_separated(graph, partition):
    """Return None when every ε-separation clause holds, else a Violation."""
    _require_total(graph, partition)
    eps = {(s, t) for s, c, t in graph.edges if c == EPSILON}
    for vertex in graph.vertices:
        if (vertex, vertex) not in eps:
            return Violation('reflexive', (vertex,))
    successors = {}
    for source, target in eps:
        successors.setdefault(source, set()).add(target)
    for u, v in canonical(eps):
        for w in canonical(successors.get(v, ())):
            if (u, w) not in eps:
                return Violation('transitive', (u, v, w))
    for u, v in canonical(eps):
        if u != v and (v, u) in eps:
            return Violation('antisymmetric', (u, v))
    for u, v in canonical(eps):
        if partition[u] != partition[v]:
            return Violation('crossing', (u, EPSILON, v))
    by_part = {}
    for vertex in graph.vertices:
        by_part.setdefault(partition[vertex], []).append(vertex)
    for part in canonical(by_part):
        members = by_part[part]
        for index, u in enumerate(members):
            for v in members[index + 1:]:
                if (u, v) not in eps and (v, u) not in eps:
                    return Violation('chain', (u, v))
    pairs = [(target, source) for source, target in eps]
    witness = check_monotone(OrderedGraph.from_generators(graph, pairs))
    if witness is not None:
        return Violation('monotone', witness)
    return None


def check_chromatic(graph, partition, update):
    """
    Return None if every edge follows ``update``, else the first bad edge.

    ε-edges must keep the part.
    """
    _require_total(graph, partition)
    for source, color, target in graph.edges:
        if color == EPSILON:
            expected = partition[source]
        else:
            expected = update.get((partition[source], color))
        if partition[target] != expected:
            return (source, color, target)
    return None


def eps_separate(og):
    """
    Turn a monotone ordered graph into an ε-separated one along a minimum chain cover.

    Parts are chain indices; the non-ε edges are unchanged.
    """
    if og.graph.has_epsilon:
        raise InvalidGraph('eps_separate expects an ε-free ordered graph')
    witness = check_monotone(og)
    if witness is not None:
        raise NotMonotone('cannot ε-separate a non-monotone graph', witness=witness)
    chains = chain_decomposition(og)
    partition = {}
    edges = set(og.graph.edges)
    for index, chain in enumerate(chains):
        for position, vertex in enumerate(chain):
            partition[vertex] = index
            for lower in chain[:position + 1]:
                edges.add((vertex, EPSILON, lower))
    graph = ColoredGraph(
        alphabet=og.graph.alphabet,
        vertices=og.graph.vertices,
        edges=canonical(edges),
        pregraph=og.graph.pregraph,
    )
    logger.debug('ε-separated %d vertices into %d parts', len(graph), len(chains))
    return EpsSeparatedGraph(graph=graph, partition=partition)


def derive_update(sep):
    """
    Return the update function forced by the edges of ``sep``, or None.

    Pairs (part, color) with no edge keep the part.
    """
    update = {}
    for source, color, target in sep.graph.edges:
        if color == EPSILON:
            continue
        key = (sep.partition[source], color)
        part = sep.partition[target]
        if update.setdefault(key, part) != part:
            return None
    for part in sep.memory:
        for color in sep.graph.alphabet:
            update.setdefault((part, color), part)
    return update
