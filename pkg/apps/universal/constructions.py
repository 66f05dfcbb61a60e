"""
Monotone universal graphs and the operations that combine them.

Ordinal counters are finite: ``bound`` copies stand in for a cardinal.
Vertex ids are nested tuples built from the inputs' ids.
"""
import logging
from collections import deque

from apps.core.exceptions import InvalidObjective, InvalidParameters
from apps.core.ordering import canonical
from apps.graphs.graph import ColoredGraph, restrict
from apps.objectives.objectives import Muller, Safety
from apps.objectives.satisfaction import satisfying_vertices
from apps.orders.poset import OrderedGraph, poset_width
from apps.zielonka.tree import build_zielonka

logger = logging.getLogger(__name__)

TOP = '⊤'


def _check_bound(bound):
    if not isinstance(bound, int) or bound < 1:
        raise InvalidParameters(f'ordinal bound must be a positive integer, got {bound!r}')


def _ordered(alphabet, vertices, edges, leq, top=None):
    graph = ColoredGraph.build(alphabet, vertices, edges, pregraph=True)
    if not graph.sinks():
        graph = graph.as_graph()
    return OrderedGraph.from_predicate(graph, leq, top=top)


def single_loop(colors):
    """One vertex with a loop of every color: the trivially winning graph."""
    colors = tuple(colors)
    vertex = ()
    return _ordered(colors, [vertex], [(vertex, c, vertex) for c in colors], lambda a, b: True)


def descending_chain(colors, bound):
    """Vertices ``(λ,)`` with an edge of every color from higher to lower λ."""
    _check_bound(bound)
    colors = tuple(colors)
    vertices = [(level,) for level in range(bound)]
    edges = [
        ((high,), c, (low,))
        for high in range(bound) for low in range(high) for c in colors
    ]
    return _ordered(colors, vertices, edges, lambda a, b: a[0] <= b[0])


def ltimes_repeat(u, bound):
    """
    Stack ``bound`` copies of ``u``: every color goes from a higher copy to any
    vertex of a lower one, and copies keep their own edges. Copies dominate the order.
    """
    _check_bound(bound)
    vertices = [(level, v) for level in range(bound) for v in u.vertices]
    edges = [
        ((level, s), c, (level, t))
        for level in range(bound) for s, c, t in u.graph.edges
    ]
    colors = list(u.alphabet) + (['eps'] if u.graph.has_epsilon else [])
    for high in range(bound):
        for low in range(high):
            for s in u.vertices:
                for t in u.vertices:
                    edges.extend(((high, s), c, (low, t)) for c in colors)

    def leq(a, b):
        return a[0] < b[0] or (a[0] == b[0] and u.leq(a[1], b[1]))

    return _ordered(u.alphabet, vertices, edges, leq)


def _parallel(alphabet, children, child_labels):
    """Positive composition: children side by side, cycling edges between them."""
    count = len(children)
    vertices, edges = [], []
    for i, child in enumerate(children):
        vertices.extend((i, v) for v in child.vertices)
        edges.extend(((i, s), c, (i, t)) for s, c, t in child.graph.edges)
        following = (i + 1) % count
        outside = [c for c in alphabet if c not in child_labels[i]]
        for s in child.vertices:
            for t in children[following].vertices:
                edges.extend(((i, s), c, (following, t)) for c in outside)

    def leq(a, b):
        return a[0] == b[0] and children[a[0]].leq(a[1], b[1])

    return _ordered(alphabet, vertices, edges, leq)


def _series(alphabet, children):
    """Negative composition: children stacked, every color from higher to lower."""
    vertices, edges = [], []
    for i, child in enumerate(children):
        vertices.extend((i, v) for v in child.vertices)
        edges.extend(((i, s), c, (i, t)) for s, c, t in child.graph.edges)
        for j in range(i):
            for s in child.vertices:
                for t in children[j].vertices:
                    edges.extend(((i, s), c, (j, t)) for c in alphabet)

    def leq(a, b):
        return a[0] < b[0] or (a[0] == b[0] and children[a[0]].leq(a[1], b[1]))

    return _ordered(alphabet, vertices, edges, leq)


def _muller_node(tree, bound):
    colors = tree.colors
    if tree.is_leaf:
        return single_loop(colors) if tree.positive else descending_chain(colors, bound)
    children = [_muller_node(child, bound) for child in tree.children]
    if tree.positive:
        return _parallel(colors, children, [child.label for child in tree.children])
    return ltimes_repeat(_series(colors, children), bound)


def muller_universal(objective, bound):
    """
    Return the monotone universal graph of a Muller objective.

    Positive nodes of the Zielonka tree put their children in parallel;
    negative nodes put them in series and repeat the result ``bound`` times.
    """
    if not isinstance(objective, Muller):
        raise InvalidObjective('muller_universal expects a Muller objective')
    _check_bound(bound)
    tree = build_zielonka(objective.alphabet, objective.family)
    result = _muller_node(tree, bound)
    graph = ColoredGraph(objective.alphabet, result.vertices, result.graph.edges, result.graph.pregraph)
    logger.debug('Muller universal graph: %d vertices (bound %d)', len(graph), bound)
    return result.with_graph(graph)


def lexico_product(u1, u2):
    """
    Replace every vertex of ``u2`` by a copy of ``u1``.

    Vertices are ``(v1, v2)``. A left color moves freely to any lower copy or
    along ``u1`` inside a copy; a right color follows ``u2``.
    """
    shared = set(u1.alphabet) & set(u2.alphabet)
    if shared:
        raise InvalidObjective(f'lexicographic product needs disjoint alphabets, shared {sorted(shared)}')
    vertices = [(a, b) for b in u2.vertices for a in u1.vertices]
    edges = []
    for b in u2.vertices:
        for s, c, t in u1.graph.edges:
            edges.append(((s, b), c, (t, b)))
        for b_low in u2.down(b):
            if b_low == b:
                continue
            for a in u1.vertices:
                for a_target in u1.vertices:
                    edges.extend(((a, b), c, (a_target, b_low)) for c in u1.alphabet)
    for s, c, t in u2.graph.edges:
        for a in u1.vertices:
            for a_target in u1.vertices:
                edges.append(((a, s), c, (a_target, t)))

    def leq(x, y):
        if x[1] == y[1]:
            return u1.leq(x[0], y[0])
        return u2.leq(x[1], y[1])

    alphabet = tuple(u1.alphabet) + tuple(u2.alphabet)
    return _ordered(alphabet, vertices, edges, leq)


def parity_universal(size, bound):
    """
    Return the universal graph of the parity condition over priorities
    ``'0'..str(size-1)``, as the lexicographic product of single-color graphs.
    """
    if size < 1:
        raise InvalidParameters('parity needs at least one priority')
    result = None
    for priority in range(size):
        color = str(priority)
        layer = single_loop((color,)) if priority % 2 == 0 else descending_chain((color,), bound)
        result = layer if result is None else lexico_product(result, layer)
    return result


def direct_product(u1, u2):
    """Coordinatewise product; edges and order both componentwise."""
    if set(u1.alphabet) != set(u2.alphabet):
        raise InvalidObjective('direct product needs graphs over the same alphabet')
    vertices = [(a, b) for a in u1.vertices for b in u2.vertices]
    edges = []
    for color in u1.alphabet:
        for a in u1.vertices:
            for a_target in u1.graph.successors(a, color):
                for b in u2.vertices:
                    for b_target in u2.graph.successors(b, color):
                        edges.append(((a, b), color, (a_target, b_target)))

    def leq(x, y):
        return u1.leq(x[0], y[0]) and u2.leq(x[1], y[1])

    return _ordered(u1.alphabet, vertices, edges, leq)


def direct_sum(graphs):
    """Disjoint union with every color pointing from later summands to earlier ones."""
    graphs = list(graphs)
    if not graphs:
        raise InvalidParameters('direct sum needs at least one summand')
    alphabet = graphs[0].alphabet
    if any(set(g.alphabet) != set(alphabet) for g in graphs):
        raise InvalidObjective('direct sum needs graphs over the same alphabet')
    vertices, edges = [], []
    for i, summand in enumerate(graphs):
        vertices.extend((i, v) for v in summand.vertices)
        edges.extend(((i, s), c, (i, t)) for s, c, t in summand.graph.edges)
        for j in range(i):
            for s in summand.vertices:
                for t in graphs[j].vertices:
                    edges.extend(((i, s), c, (j, t)) for c in alphabet)

    def leq(x, y):
        return x[0] < y[0] or (x[0] == y[0] and graphs[x[0]].leq(x[1], y[1]))

    return _ordered(alphabet, vertices, edges, leq)


def top_complete(u, objective, prune=True):
    """
    Keep the vertices satisfying ``objective`` and add a maximal ``⊤`` with
    every outgoing edge and no incoming edge but its own loops.

    With ``prune=False`` every vertex is kept.
    """
    keep = satisfying_vertices(u.graph, objective) if prune else u.graph.vertex_set
    if TOP in keep:
        raise InvalidParameters(f'vertex id {TOP!r} is reserved')
    base = restrict(u.graph, keep)
    vertices = list(base.vertices) + [TOP]
    colors = list(u.alphabet) + (['eps'] if u.graph.has_epsilon else [])
    edges = list(base.edges)
    edges.extend((TOP, c, target) for target in vertices for c in colors)
    dropped = len(u.vertices) - len(keep)
    if dropped:
        logger.debug('Top completion dropped %d non-satisfying vertices', dropped)

    def leq(a, b):
        if b == TOP:
            return True
        if a == TOP:
            return False
        return u.leq(a, b)

    return _ordered(u.alphabet, vertices, edges, leq, top=TOP)


def _access_words(dfa):
    """Return ``{state: shortest access word}`` for reachable states, by BFS."""
    words = {dfa.initial: ()}
    queue = deque([dfa.initial])
    while queue:
        state = queue.popleft()
        for color in dfa.alphabet:
            target = dfa.delta[(state, color)]
            if target not in words:
                words[target] = words[state] + (color,)
                queue.append(target)
    return words


def quotient_name(word):
    return '[' + (''.join(word) if word else 'ε') + ']'


def safety_quotient_universal(objective):
    """
    Return the graph of nonempty left quotients of a safety objective.

    Quotients are live reachable DFA states up to language equality, named by
    shortest access word and ordered by inclusion. ``[u] -c-> [v]`` whenever
    ``[v] <= [uc]``; a fresh ``⊤`` sits above everything with every edge.
    """
    if not isinstance(objective, Safety):
        raise InvalidObjective('safety_quotient_universal expects a safety objective')
    dfa = objective.dfa
    words = _access_words(dfa)
    live = [state for state in words if state in dfa.live]
    classes = {}
    for state in live:
        for representative in classes:
            if dfa.includes(state, representative) and dfa.includes(representative, state):
                classes[representative].append(state)
                break
        else:
            classes[state] = [state]
    name = {}
    for representative, members in classes.items():
        for state in members:
            name[state] = quotient_name(words[representative])
    names = {rep: name[rep] for rep in classes}
    vertices = list(names.values()) + [TOP]
    edges = [(TOP, c, target) for target in vertices for c in dfa.alphabet]
    for representative in classes:
        for color in dfa.alphabet:
            target_state = dfa.delta[(representative, color)]
            if target_state not in dfa.live:
                continue
            for other in classes:
                if dfa.includes(other, target_state):
                    edges.append((names[representative], color, names[other]))
    by_name = {names[rep]: rep for rep in classes}

    def leq(a, b):
        if b == TOP:
            return True
        if a == TOP:
            return False
        return dfa.includes(by_name[a], by_name[b])

    if not classes:
        logger.warning('Safety objective %s is empty: its quotient graph is only %s', objective, TOP)
    result = _ordered(dfa.alphabet, vertices, edges, leq, top=TOP)
    logger.debug('Safety quotient graph: %d quotients', len(classes))
    return result


def without_top(u):
    """Return ``u`` with its top vertex removed."""
    if u.top is None:
        return u
    keep = [v for v in u.vertices if v != u.top]
    graph = restrict(u.graph, keep)
    if not graph.sinks():
        graph = graph.as_graph()
    pairs = [(a, b) for a, b in u.order if a != u.top and b != u.top]
    return OrderedGraph.from_generators(graph, pairs)


def describe(u):
    """Return a short summary dict of an ordered graph."""
    width, _ = poset_width(u)
    return {
        'vertices': len(u.vertices),
        'edges': len(u.graph.edges),
        'width': width,
        'top': u.top,
        'colors': list(canonical(u.alphabet)),
    }
