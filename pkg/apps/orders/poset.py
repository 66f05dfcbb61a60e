"""
Partially ordered colored graphs: monotonicity, width and chain decompositions.

Orders are stored as their reflexive-transitive closure, a frozenset of
(lesser, greater) pairs. Width and chains come from a maximum matching in the
bipartite split of the strict order (Dilworth / König).
"""
import logging
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from apps.core.exceptions import InvalidOrder
from apps.core.ordering import canonical, sort_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderedGraph:
    """A colored graph together with a partial order on its vertices."""

    graph: object
    order: frozenset
    top: object = None

    @classmethod
    def from_generators(cls, graph, pairs=(), top=None):
        """Close ``pairs`` reflexively and transitively; reject cycles."""
        relation = nx.DiGraph()
        relation.add_nodes_from(graph.vertices)
        for lesser, greater in pairs:
            if lesser not in graph.vertex_set or greater not in graph.vertex_set:
                raise InvalidOrder(f'order pair ({lesser!r}, {greater!r}) uses unknown vertices')
            if lesser != greater:
                relation.add_edge(lesser, greater)
        if not nx.is_directed_acyclic_graph(relation):
            cycle = nx.find_cycle(relation)
            raise InvalidOrder(f'order is not antisymmetric: cycle through {cycle[0][0]!r}')
        closure = nx.transitive_closure_dag(relation)
        order = {(v, v) for v in graph.vertices}
        order.update(closure.edges())
        if top is not None and top not in graph.vertex_set:
            raise InvalidOrder(f'top {top!r} is not a vertex')
        return cls(graph=graph, order=frozenset(order), top=top)

    @classmethod
    def from_predicate(cls, graph, leq, top=None):
        """Build the order from a ``leq(a, b)`` predicate over all vertex pairs."""
        pairs = [
            (a, b) for a in graph.vertices for b in graph.vertices
            if a != b and leq(a, b)
        ]
        return cls.from_generators(graph, pairs, top=top)

    @classmethod
    def discrete(cls, graph, top=None):
        return cls.from_generators(graph, (), top=top)

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def alphabet(self):
        return self.graph.alphabet

    @cached_property
    def _up(self):
        up = {v: set() for v in self.graph.vertices}
        for lesser, greater in self.order:
            up[lesser].add(greater)
        return {v: frozenset(items) for v, items in up.items()}

    @cached_property
    def _down(self):
        down = {v: set() for v in self.graph.vertices}
        for lesser, greater in self.order:
            down[greater].add(lesser)
        return {v: frozenset(items) for v, items in down.items()}

    def leq(self, a, b):
        return (a, b) in self.order

    def comparable(self, a, b):
        return (a, b) in self.order or (b, a) in self.order

    def up(self, vertex):
        """Return every vertex above ``vertex``, itself included."""
        return self._up[vertex]

    def down(self, vertex):
        """Return every vertex below ``vertex``, itself included."""
        return self._down[vertex]

    def down_closure(self, vertices):
        closed = set()
        for vertex in vertices:
            closed |= self._down[vertex]
        return closed

    def generators(self):
        """Return the covering pairs (Hasse diagram) of the order."""
        strict = {(a, b) for a, b in self.order if a != b}
        covers = []
        for a, b in strict:
            between = self._up[a] & self._down[b]
            if len(between) == 2:
                covers.append((a, b))
        return sorted(covers, key=sort_key)

    def with_graph(self, graph):
        """Return the same order over a graph with the same vertices."""
        return OrderedGraph(graph=graph, order=self.order, top=self.top)


def _violations_at(og, vertex, color):
    # Targets forced by monotonicity at (vertex, color) that are missing
    required = set()
    for lower in og.down(vertex):
        required |= og.graph.successors(lower, color)
    required = og.down_closure(required)
    return required - og.graph.successors(vertex, color)


def _colors(og):
    return list(og.graph.alphabet) + (['eps'] if og.graph.has_epsilon else [])


def check_monotone(og):
    """
    Return None if ``og`` is monotone, else the lexicographically first
    witness (u, v, v', u', c) with u >= v -c-> v' >= u' and no edge u -c-> u'.
    """
    colors = _colors(og)
    for u in og.graph.vertices:
        if not any(_violations_at(og, u, color) for color in colors):
            continue
        best = None
        for v in og.down(u):
            for _, color, v_next in og.graph.out_edges(v):
                for u_next in og.down(v_next):
                    if og.graph.has_edge(u, color, u_next):
                        continue
                    candidate = (u, v, v_next, u_next, color)
                    if best is None or sort_key(candidate) < sort_key(best):
                        best = candidate
        return best
    return None


def monotone_closure(og):
    """Return ``og`` with every edge forced by monotonicity added."""
    from apps.graphs.graph import ColoredGraph

    added = set(og.graph.edges)
    for u in og.graph.vertices:
        for color in _colors(og):
            for target in _violations_at(og, u, color):
                added.add((u, color, target))
    logger.debug('Monotone closure added %d edges', len(added) - len(og.graph.edges))
    graph = ColoredGraph(
        alphabet=og.graph.alphabet,
        vertices=og.graph.vertices,
        edges=canonical(added),
        pregraph=og.graph.pregraph,
    )
    if graph.pregraph and not graph.sinks():
        graph = graph.as_graph()
    return og.with_graph(graph)


def _matching(og, elements):
    """Return ``{a: b}`` pairing a with its successor b > a in a chain cover."""
    bipartite = nx.Graph()
    left = [('L', v) for v in elements]
    bipartite.add_nodes_from(left, bipartite=0)
    bipartite.add_nodes_from((('R', v) for v in elements), bipartite=1)
    members = set(elements)
    for a in elements:
        for b in canonical(og.up(a) & members):
            if a != b:
                bipartite.add_edge(('L', a), ('R', b))
    matching = nx.bipartite.hopcroft_karp_matching(bipartite, top_nodes=left)
    return {
        node[1]: partner[1]
        for node, partner in matching.items()
        if node[0] == 'L'
    }


def _width_of(og, elements):
    if not elements:
        return 0
    return len(elements) - len(_matching(og, elements))


def poset_width(og):
    """Return (width, lexicographically least maximum antichain)."""
    elements = list(og.graph.vertices)
    if not elements:
        raise InvalidOrder('empty poset has no width')
    width = _width_of(og, elements)
    antichain = []
    for index, candidate in enumerate(elements):
        if any(og.comparable(candidate, chosen) for chosen in antichain):
            continue
        chosen = antichain + [candidate]
        pool = [
            other for other in elements[index + 1:]
            if not any(og.comparable(other, item) for item in chosen)
        ]
        if len(chosen) + _width_of(og, pool) == width:
            antichain = chosen
            if len(antichain) == width:
                break
    return width, tuple(antichain)


def chain_decomposition(og):
    """
    Return a minimum chain cover as a list of ascending vertex lists.

    Chains are ordered by their smallest element.
    """
    elements = list(og.graph.vertices)
    successor = _matching(og, elements)
    has_predecessor = set(successor.values())
    chains = []
    for start in elements:
        if start in has_predecessor:
            continue
        chain = [start]
        while chain[-1] in successor:
            chain.append(successor[chain[-1]])
        chains.append(chain)
    chains.sort(key=lambda chain: sort_key(chain[0]))
    return chains
