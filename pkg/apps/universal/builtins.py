"""
Hand-laid universal graphs for the named objectives.

Each builder lays out its base edges and lets ``monotone_closure`` add the
edges implied by the order. ε-separated builders return an
EpsSeparatedGraph whose parts are chains ordered by their ε-edges.
"""
import logging

from apps.core.conf import default_bound
from apps.core.exceptions import InvalidParameters
from apps.graphs.graph import EPSILON, ColoredGraph
from apps.objectives import builtins as objectives
from apps.orders.poset import OrderedGraph, monotone_closure
from apps.orders.separation import EpsSeparatedGraph, derive_update, eps_separate

from .constructions import (
    TOP,
    _check_bound,
    muller_universal,
    parity_universal,
    safety_quotient_universal,
    without_top,
)

logger = logging.getLogger(__name__)


def _separated(alphabet, chains, edges, delta):
    """
    Build an ε-separated graph from ``chains`` ({part: ascending vertices})
    and its non-ε ``edges``, closed under monotonicity.
    """
    partition = {}
    edges = set(edges)
    for part, chain in chains.items():
        for position, vertex in enumerate(chain):
            partition[vertex] = part
            edges.update((vertex, EPSILON, lower) for lower in chain[:position + 1])
    vertices = [vertex for chain in chains.values() for vertex in chain]
    graph = ColoredGraph.build(alphabet, vertices, edges)
    sep = EpsSeparatedGraph(graph=graph, partition=partition)
    closed = monotone_closure(sep.ordered())
    return EpsSeparatedGraph(graph=closed.graph, partition=partition, delta=delta)


def w1_separated(bound):
    """Two chains ``(c, λ)``; repeating c lowers λ, the other color jumps anywhere in its chain."""
    _check_bound(bound)
    colors = ('a', 'b')
    chains = {c: [(c, level) for level in range(bound)] for c in colors}
    edges = []
    for c in colors:
        other = 'b' if c == 'a' else 'a'
        for level in range(bound):
            edges.extend(((c, level), c, (c, lower)) for lower in range(level))
            edges.extend(((c, level), other, target) for target in chains[other])
    delta = {(part, c): c for part in colors for c in colors}
    return _separated(colors, chains, edges, delta)


def w2_quotient(size=3):
    """The quotient graph of W2 without its ⊤: [ε] above the pairwise incomparable [c]."""
    return without_top(safety_quotient_universal(objectives.w2(size)))


def w2_separated(size=3):
    """
    Dilworth-separate the W2 quotient graph, naming each part after the
    one-letter quotient it holds; the update is then ``δ(m, c) = c``.
    """
    sep = eps_separate(w2_quotient(size))
    colors = objectives.letters(size)
    names = {}
    for part, members in sep.parts.items():
        names[part] = next(v[1:-1] for v in members if v[1:-1] in colors)
    partition = {vertex: names[part] for vertex, part in sep.partition.items()}
    renamed = EpsSeparatedGraph(graph=sep.graph, partition=partition)
    return renamed.with_delta(derive_update(renamed))


def w3_graph(m=1, n=2, bound=None):
    """
    Counting boxes ``('q', j, λ)`` before the m-th a, the waiting vertices
    ``('p', i)`` after it, the box ``('p', n, λ)`` once n letters went by,
    and ``⊤`` once the pattern is complete. Only the ``p`` columns are incomparable.
    """
    if m < 1 or n < 1:
        raise InvalidParameters('W3 needs m, n >= 1')
    bound = bound or default_bound()
    _check_bound(bound)
    counting = [('q', j, level) for j in range(m) for level in range(bound)]
    waiting = [('p', i) for i in range(n)]
    ready = [('p', n, level) for level in range(bound)]
    vertices = counting + waiting + ready + [TOP]
    edges = [(TOP, c, target) for target in vertices for c in 'ab']
    for _, j, level in counting:
        source = ('q', j, level)
        edges.extend((source, 'b', ('q', j, lower)) for lower in range(level))
        if j + 1 < m:
            edges.extend((source, 'a', ('q', j + 1, any_level)) for any_level in range(bound))
        else:
            edges.append((source, 'a', ('p', 0)))
    for i in range(n):
        targets = [('p', i + 1)] if i + 1 < n else ready
        edges.extend((('p', i), c, target) for target in targets for c in 'ab')
    for _, _, level in ready:
        edges.extend((('p', n, level), 'b', ('p', n, lower)) for lower in range(level))
        edges.append((('p', n, level), 'a', TOP))

    def leq(x, y):
        if y == TOP:
            return True
        if x == TOP:
            return False
        if x[0] == 'q' and y[0] == 'q':
            return x[1:] <= y[1:]
        if x[0] == 'q':
            return True
        if y[0] == 'q':
            return False
        if x[1] != y[1]:
            return False
        return len(x) == 2 or x[2] <= y[2]

    graph = ColoredGraph.build(('a', 'b'), vertices, edges)
    ordered = OrderedGraph.from_predicate(graph, leq, top=TOP)
    return monotone_closure(ordered)


def w3_separated(m=1, n=2, bound=None):
    """
    Parts count the b's read since the last a, capped at n.

    Part i holds the counting boxes, the waiting vertices ``p_g`` for
    ``i <= g < n`` and a ready vertex, then its own ⊤. Only part n needs a
    counter on its ready box: the part index bounds b-runs everywhere else.
    """
    if m < 1 or n < 1:
        raise InvalidParameters('W3 needs m, n >= 1')
    bound = bound or default_bound()
    _check_bound(bound)
    parts = range(n + 1)

    def step(part, color):
        return 0 if color == 'a' else min(part + 1, n)

    def ready(part):
        if part < n:
            return [(part, 'P')]
        return [(n, 'p', n, level) for level in range(bound)]

    chains = {}
    for part in parts:
        chains[part] = (
            [(part, 'q', j, level) for j in range(m) for level in range(bound)]
            + [(part, 'p', g) for g in range(part, n)]
            + ready(part)
            + [(part, TOP)]
        )
    edges = []
    for part in parts:
        for vertex in chains[part]:
            kind = vertex[1]
            if kind == TOP:
                edges.extend(
                    (vertex, c, target) for c in 'ab' for target in chains[step(part, c)]
                )
            elif kind == 'q':
                _, _, j, level = vertex
                edges.extend(
                    (vertex, 'b', (step(part, 'b'), 'q', j, lower)) for lower in range(level)
                )
                if j + 1 < m:
                    edges.extend(
                        (vertex, 'a', (0, 'q', j + 1, any_level)) for any_level in range(bound)
                    )
                else:
                    edges.append((vertex, 'a', (0, 'p', 0)))
            elif kind == 'p' and len(vertex) == 3:
                g = vertex[2]
                for c in 'ab':
                    target = step(part, c)
                    if g + 1 < n:
                        edges.append((vertex, c, (target, 'p', g + 1)))
                    else:
                        edges.extend((vertex, c, t) for t in ready(target))
            else:
                edges.append((vertex, 'a', (0, TOP)))
                if kind == 'P':
                    edges.extend((vertex, 'b', t) for t in ready(step(part, 'b')))
                else:
                    level = vertex[3]
                    edges.extend((vertex, 'b', (n, 'p', n, lower)) for lower in range(level))
    delta = {(part, c): step(part, c) for part in parts for c in 'ab'}
    return _separated(('a', 'b'), chains, edges, delta)


def w4_separated(bound=None):
    """
    Two chains: ``('q', λ)`` after a b, and ``('p', λ) < ("p'", λ)`` interleaved
    after an a or a c. λ counts the odd priorities left before the next 2.
    """
    bound = bound or default_bound()
    _check_bound(bound)
    others = ('p', "p'")
    chains = {
        'q': [('q', level) for level in range(bound)],
        'p': [(kind, level) for level in range(bound) for kind in others],
    }
    edges = []
    for level in range(bound):
        edges.extend((('q', level), 'b', ('q', any_level)) for any_level in range(bound))
        for lower in range(level):
            for r in others:
                edges.append(((r, level), 'b', ('q', lower)))
                for d in 'ac':
                    edges.append((('q', level), d, (r, lower)))
                    edges.extend(((r2, level), d, (r, lower)) for r2 in others)
        for r in others:
            edges.extend(((r, level), 'c', (r2, level)) for r2 in others)
        edges.append((("p'", level), 'a', ('p', level)))
    delta = {
        (part, c): 'q' if c == 'b' else 'p' for part in chains for c in 'abc'
    }
    return _separated(('a', 'b', 'c'), chains, edges, delta)


def w5_separated(size=3, bound=None):
    """
    Part x remembers the last color. Its chain holds ``(x, μ, y, ν)`` in
    lexicographic order: y is the partner color, ν bounds repeats of x and
    μ bounds changes of pair.
    """
    if size < 2:
        raise InvalidParameters('W5 needs at least two colors')
    colors = objectives.letters(size)
    bound = bound or default_bound()
    _check_bound(bound)
    rank = {c: index for index, c in enumerate(colors)}

    def key(vertex):
        return (vertex[1], rank[vertex[2]], vertex[3])

    chains = {
        x: sorted(
            [
                (x, mu, y, nu)
                for mu in range(bound) for y in colors if y != x for nu in range(bound)
            ],
            key=key,
        )
        for x in colors
    }
    edges = []
    for x in colors:
        for source in chains[x]:
            _, mu, y, _ = source
            edges.extend((source, x, t) for t in chains[x] if key(t) < key(source))
            for d in colors:
                if d == x:
                    continue
                if rank[d] <= rank[y]:
                    ceiling = (mu, rank[x], bound - 1)
                    edges.extend((source, d, t) for t in chains[d] if key(t) <= ceiling)
                else:
                    edges.extend((source, d, t) for t in chains[d] if t[1] < mu)
    delta = {(part, c): c for part in colors for c in colors}
    return _separated(colors, chains, edges, delta)


def _w1(bound=None):
    return muller_universal(objectives.w1(), bound or default_bound())


def _w5(size=3, bound=None):
    return muller_universal(objectives.w5(size), bound or default_bound())


def _parity(size=3, bound=None):
    return parity_universal(size, bound or default_bound())


def _alternation():
    return safety_quotient_universal(objectives.alternation())


BUILTINS = {
    'W1': _w1,
    'W1-eps': lambda bound=None: w1_separated(bound or default_bound()),
    'W2': w2_quotient,
    'W2-eps': w2_separated,
    'W3': w3_graph,
    'W3-chromatic': w3_separated,
    'W4': w4_separated,
    'W5': _w5,
    'W5-chromatic': w5_separated,
    'parity': _parity,
    'alternation': _alternation,
}


def builtin_universal(name, **params):
    """Return the named universal graph (an OrderedGraph or an EpsSeparatedGraph)."""
    try:
        builder = BUILTINS[name]
    except KeyError:
        raise InvalidParameters(f'unknown builtin universal graph {name!r}') from None
    try:
        result = builder(**params)
    except TypeError as exc:
        raise InvalidParameters(f'bad parameters for {name}: {exc}') from exc
    logger.debug('Built universal graph %s with %d vertices', name, len(result.vertices))
    return result
