"""
Satisfaction of objectives by finite graphs.

A graph satisfies an objective from a vertex when every infinite path from
that vertex does. Muller and parity conditions on ε-free graphs are decided
on the graph itself by recursive SCC decomposition; everything else runs the
same recursion on the product with the compiled parity automaton.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from apps.core.exceptions import InvalidGraph, InvalidObjective
from apps.core.ordering import canonical, sort_key
from apps.graphs.graph import EPSILON

from .compile import compile_objective
from .objectives import LassoWord, Muller, Parity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SatisfactionResult:
    """Outcome of a satisfaction check; falsy with a lasso counterexample on failure."""

    ok: bool
    counterexample: LassoWord = None
    start: object = None

    def __bool__(self):
        return self.ok


def _components(edges):
    # Nontrivial SCCs of the edge list, with the edges lying inside each
    graph = nx.DiGraph()
    graph.add_edges_from((edge[0], edge[2]) for edge in edges)
    components = sorted(
        nx.strongly_connected_components(graph),
        key=lambda component: sort_key(canonical(component)[0]),
    )
    for component in components:
        inner = [edge for edge in edges if edge[0] in component and edge[2] in component]
        if inner:
            yield inner


def _muller_bad(edges, family, seen):
    for inner in _components(edges):
        colors = frozenset(edge[1] for edge in inner)
        if colors not in family:
            return inner
        for color in canonical(colors):
            sub = [edge for edge in inner if edge[1] != color]
            key = frozenset(sub)
            if not sub or key in seen:
                continue
            seen.add(key)
            found = _muller_bad(sub, family, seen)
            if found:
                return found
    return None


def _parity_bad(edges, priority):
    for inner in _components(edges):
        top = max(priority(edge) for edge in inner)
        if top % 2:
            return inner
        found = _parity_bad([edge for edge in inner if priority(edge) < top], priority)
        if found:
            return found
    return None


def _lasso(edges, starts, component):
    """Return (start, LassoWord) reaching ``component`` and covering its edges."""
    outgoing = {}
    for edge in edges:
        outgoing.setdefault(edge[0], []).append(edge)
    targets = {edge[0] for edge in component}
    parent = {start: None for start in starts}
    queue = deque(starts)
    anchor = None
    while queue:
        node = queue.popleft()
        if node in targets:
            anchor = node
            break
        for edge in outgoing.get(node, ()):
            if edge[2] not in parent:
                parent[edge[2]] = edge
                queue.append(edge[2])
    prefix = []
    node = anchor
    while parent[node] is not None:
        prefix.append(parent[node][1])
        node = parent[node][0]
    start = node
    prefix.reverse()

    inside = {}
    for edge in component:
        inside.setdefault(edge[0], []).append(edge)

    def route(source, target):
        back = {source: None}
        queue = deque([source])
        while queue and target not in back:
            node = queue.popleft()
            for edge in inside[node]:
                if edge[2] not in back:
                    back[edge[2]] = edge
                    queue.append(edge[2])
        colors = []
        while back[target] is not None:
            colors.append(back[target][1])
            target = back[target][0]
        return colors[::-1]

    cycle, position = [], anchor
    for edge in canonical(component):
        cycle += route(position, edge[0])
        cycle.append(edge[1])
        position = edge[2]
    cycle += route(position, anchor)
    return start, LassoWord(tuple(prefix), tuple(cycle))


def _reachable_edges(g, starts):
    seen = set(starts)
    queue = deque(starts)
    edges = []
    while queue:
        vertex = queue.popleft()
        for edge in g.out_edges(vertex):
            edges.append(edge)
            if edge[2] not in seen:
                seen.add(edge[2])
                queue.append(edge[2])
    return edges


def _product_edges(g, automaton, starts):
    initial = [(vertex, automaton.initial) for vertex in starts]
    seen = set(initial)
    queue = deque(initial)
    edges = []
    while queue:
        vertex, state = queue.popleft()
        for _, color, target in g.out_edges(vertex):
            next_state, priority = automaton.step(state, color)
            node = (target, next_state)
            edges.append(((vertex, state), color, node, priority))
            if node not in seen:
                seen.add(node)
                queue.append(node)
    return initial, edges, seen


@lru_cache(maxsize=256)
def _automaton(objective, epsilon):
    automaton = compile_objective(objective)
    return automaton.with_epsilon() if epsilon else automaton


def _check_inputs(g, objective, vertex):
    unknown = g.colors_used - set(objective.alphabet) - {EPSILON}
    if unknown:
        raise InvalidObjective(f'graph uses colors {canonical(unknown)!r} outside the objective')
    if vertex is not None and vertex not in g.vertex_set:
        raise InvalidGraph(f'unknown vertex {vertex!r}')


def graph_satisfies(g, objective, vertex=None):
    """
    Decide whether every infinite path of ``g`` satisfies ``objective``.

    With ``vertex`` only paths from that vertex are judged. Graphs with ε-edges
    are judged against the ε-extension of the objective.
    """
    _check_inputs(g, objective, vertex)
    starts = [vertex] if vertex is not None else list(g.vertices)
    if not g.has_epsilon and isinstance(objective, (Muller, Parity)):
        edges = _reachable_edges(g, starts)
        if isinstance(objective, Muller):
            bad = _muller_bad(edges, objective.family, set())
        else:
            bad = _parity_bad(edges, lambda edge: objective.priority[edge[1]])
        if bad is None:
            return SatisfactionResult(True)
        start, word = _lasso(edges, starts, bad)
        return SatisfactionResult(False, word, start)

    automaton = _automaton(objective, g.has_epsilon)
    initial, edges, _ = _product_edges(g, automaton, starts)
    logger.debug("Product of %d vertices with %d states has %d edges",
                 len(g.vertices), len(automaton.states), len(edges))
    bad = _parity_bad(edges, lambda edge: edge[3])
    if bad is None:
        return SatisfactionResult(True)
    start, word = _lasso(edges, initial, bad)
    return SatisfactionResult(False, word, start[0])


def satisfying_vertices(g, objective):
    """Return the vertices of ``g`` from which ``objective`` is satisfied."""
    return frozenset(v for v in g.vertices if graph_satisfies(g, objective, v))


def has_doomed_prefix(g, objective, vertex=None):
    """
    Return True if some finite path of ``g`` reaches a point from which the
    objective can no longer be won.
    """
    _check_inputs(g, objective, vertex)
    automaton = _automaton(objective, g.has_epsilon)
    starts = [vertex] if vertex is not None else list(g.vertices)
    _, _, reached = _product_edges(g, automaton, starts)
    return any(state not in automaton.live for _, state in reached)
