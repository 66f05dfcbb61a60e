"""
Finite colored graphs, pregraphs and rooted trees.

A ColoredGraph is immutable once validated. Vertices are opaque hashable ids
(strings in files, nested tuples in constructions); edges are (source, color,
target) triples kept in canonical order.
"""
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from apps.core.exceptions import InvalidGraph
from apps.core.ordering import canonical, sort_key

# Reserved meta-color; never a member of a declared alphabet
EPSILON = 'eps'


@dataclass(frozen=True)
class ColoredGraph:
    """
    A finite directed graph whose edges carry colors.

    ``pregraph`` marks values that may contain sinks. A value built with
    ``pregraph=False`` has been checked to have an outgoing edge at every vertex.
    """

    alphabet: tuple
    vertices: tuple
    edges: tuple
    pregraph: bool = False

    @classmethod
    def build(cls, alphabet, vertices, edges, pregraph=False):
        """Validate the parts and return a canonical graph."""
        alphabet = tuple(alphabet)
        if EPSILON in alphabet:
            raise InvalidGraph(f"'{EPSILON}' is reserved and cannot be declared as a color")
        if len(set(alphabet)) != len(alphabet):
            raise InvalidGraph('duplicate color in alphabet')
        vertex_list = list(vertices)
        vertex_set = set(vertex_list)
        if len(vertex_set) != len(vertex_list):
            seen, duplicates = set(), []
            for vertex in vertex_list:
                if vertex in seen:
                    duplicates.append(vertex)
                seen.add(vertex)
            raise InvalidGraph(
                'duplicate vertex identifier',
                diagnostic={'duplicates': canonical(set(duplicates))},
            )
        colors = set(alphabet) | {EPSILON}
        edge_set = set()
        for source, color, target in edges:
            if source not in vertex_set or target not in vertex_set:
                raise InvalidGraph(
                    f'dangling edge endpoint in {source!r} -{color}-> {target!r}',
                    diagnostic={'edge': (source, color, target)},
                )
            if color not in colors:
                raise InvalidGraph(
                    f'unknown color {color!r}',
                    diagnostic={'edge': (source, color, target)},
                )
            edge_set.add((source, color, target))
        graph = cls(
            alphabet=alphabet,
            vertices=canonical(vertex_set),
            edges=canonical(edge_set),
            pregraph=True,
        )
        if not pregraph:
            sinks = graph.sinks()
            if sinks:
                raise InvalidGraph(
                    f'{len(sinks)} sink(s) in a value requested as a graph',
                    diagnostic={'sinks': list(sinks)},
                )
            graph = graph.as_graph()
        return graph

    def as_graph(self):
        """Return the same value tagged sink-free; the caller vouches for it."""
        return ColoredGraph(self.alphabet, self.vertices, self.edges, pregraph=False)

    def as_pregraph(self):
        return ColoredGraph(self.alphabet, self.vertices, self.edges, pregraph=True)

    @property
    def is_graph(self):
        """Return True if this value is tagged sink-free."""
        return not self.pregraph

    @cached_property
    def vertex_set(self):
        return frozenset(self.vertices)

    @cached_property
    def edge_set(self):
        return frozenset(self.edges)

    @cached_property
    def _out(self):
        out = {vertex: [] for vertex in self.vertices}
        for edge in self.edges:
            out[edge[0]].append(edge)
        return out

    @cached_property
    def _in(self):
        incoming = {vertex: [] for vertex in self.vertices}
        for edge in self.edges:
            incoming[edge[2]].append(edge)
        return incoming

    @cached_property
    def _succ(self):
        succ = {}
        for source, color, target in self.edges:
            succ.setdefault((source, color), set()).add(target)
        return {key: frozenset(value) for key, value in succ.items()}

    def out_edges(self, vertex):
        return self._out[vertex]

    def in_edges(self, vertex):
        return self._in[vertex]

    def successors(self, vertex, color):
        """Return the set of c-successors of ``vertex``."""
        return self._succ.get((vertex, color), frozenset())

    def has_edge(self, source, color, target):
        return (source, color, target) in self.edge_set

    def sinks(self):
        return tuple(vertex for vertex in self.vertices if not self._out[vertex])

    @cached_property
    def has_epsilon(self):
        """Return True if some edge is labelled with the reserved ε color."""
        return any(color == EPSILON for _, color, _ in self.edges)

    @cached_property
    def colors_used(self):
        return frozenset(color for _, color, _ in self.edges)

    def to_networkx(self):
        """Return a MultiDiGraph keyed by color."""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for source, color, target in self.edges:
            graph.add_edge(source, target, key=color, color=color)
        return graph

    def __len__(self):
        return len(self.vertices)


def validate(candidate, status='graph'):
    """
    Validate a raw description ``{'alphabet', 'vertices', 'edges'}``.

    ``vertices`` may list plain ids or ``{'id': ...}`` records. With
    ``status='graph'`` every sink is reported in the error diagnostic.
    """
    if status not in ('graph', 'pregraph'):
        raise InvalidGraph(f'unknown status {status!r}')
    try:
        alphabet = list(candidate['alphabet'])
        raw_vertices = list(candidate['vertices'])
        raw_edges = list(candidate.get('edges', []))
    except (KeyError, TypeError) as exc:
        raise InvalidGraph(f'malformed graph description: {exc}') from exc
    vertices = [item['id'] if isinstance(item, dict) else item for item in raw_vertices]
    edges = []
    for item in raw_edges:
        if len(item) != 3:
            raise InvalidGraph(f'edge {item!r} is not a [source, color, target] triple')
        edges.append(tuple(item))
    return ColoredGraph.build(alphabet, vertices, edges, pregraph=(status == 'pregraph'))


@dataclass(frozen=True)
class RootedTree:
    """A pregraph with a root from which every vertex has a unique path."""

    graph: ColoredGraph
    root: object

    def check(self):
        """Raise InvalidGraph unless the tree invariants hold."""
        indegree = {vertex: 0 for vertex in self.graph.vertices}
        for _, _, target in self.graph.edges:
            indegree[target] += 1
        if indegree.get(self.root, None) != 0:
            raise InvalidGraph('tree root must exist and have in-degree 0')
        if any(count > 1 for count in indegree.values()):
            raise InvalidGraph('tree vertex with in-degree above 1')
        if reachable_from(self.graph, self.root) != self.graph.vertex_set:
            raise InvalidGraph('tree has vertices unreachable from the root')
        return self


def unfold(g, v0, depth):
    """
    Unfold ``g`` from ``v0`` up to ``depth`` edges.

    Tree vertices are paths, encoded as tuples of (color, vertex) steps; the
    root is the empty path. Returns the tree and the projection map
    path -> last vertex.
    """
    if v0 not in g.vertex_set:
        raise InvalidGraph(f'unknown start vertex {v0!r}')
    if depth < 0:
        raise InvalidGraph('depth must be non-negative')
    root = ()
    vertices = [root]
    edges = []
    projection = {root: v0}
    frontier = [root]
    for _ in range(depth):
        next_frontier = []
        for path in frontier:
            for _, color, target in g.out_edges(projection[path]):
                child = path + ((color, target),)
                vertices.append(child)
                edges.append((path, color, child))
                projection[child] = target
                next_frontier.append(child)
        frontier = next_frontier
    tree = ColoredGraph.build(g.alphabet, vertices, edges, pregraph=True)
    return RootedTree(tree, root), projection


def restrict(g, keep):
    """Return the induced pregraph on ``keep``."""
    keep = set(keep)
    unknown = keep - g.vertex_set
    if unknown:
        raise InvalidGraph(f'cannot keep unknown vertices {canonical(unknown)!r}')
    edges = [edge for edge in g.edges if edge[0] in keep and edge[2] in keep]
    return ColoredGraph(
        alphabet=g.alphabet,
        vertices=canonical(keep),
        edges=canonical(edges),
        pregraph=True,
    )


def reachable_from(g, vertex):
    """Return every vertex reachable from ``vertex``, itself included."""
    seen = {vertex}
    queue = deque([vertex])
    while queue:
        current = queue.popleft()
        for _, _, target in g.out_edges(current):
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return frozenset(seen)


def sccs(g):
    """Return strongly connected components in reverse topological order (sinks first)."""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(g.vertices)
    digraph.add_edges_from((source, target) for source, _, target in g.edges)
    condensed = nx.condensation(digraph)
    members = condensed.graph['mapping']
    components = {}
    for vertex, index in members.items():
        components.setdefault(index, set()).add(vertex)
    order = nx.lexicographical_topological_sort(
        condensed, key=lambda index: sort_key(canonical(components[index])[0])
    )
    return [frozenset(components[index]) for index in reversed(list(order))]
