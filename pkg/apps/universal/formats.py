"""
Universal graph documents: the graph format plus ``order``/``top`` for
ordered graphs, or ``parts``/``delta`` for ε-separated ones.
"""
from apps.core.exceptions import InvalidGraph
from apps.core.ordering import label
from apps.graphs.formats import dump_graph, load_graph
from apps.orders.poset import OrderedGraph
from apps.orders.separation import EpsSeparatedGraph


def dump_universal(u):
    if isinstance(u, EpsSeparatedGraph):
        return dump_graph(u.graph, parts=u.parts, delta=u.delta)
    return dump_graph(u.graph, order=u.generators(), top=u.top)


def load_universal(document):
    """Return an OrderedGraph or an EpsSeparatedGraph with string vertex ids."""
    graph = load_graph(document, status='pregraph')
    if not graph.sinks():
        graph = graph.as_graph()
    if 'parts' in document:
        partition = {}
        for part, members in document['parts'].items():
            for vertex in members:
                partition[str(vertex)] = str(part)
        delta = None
        if 'delta' in document:
            delta = {(str(m), str(c)): str(n) for m, c, n in document['delta']}
        sep = EpsSeparatedGraph(graph=graph, partition=partition, delta=delta)
        violation = sep.check()
        if violation is not None:
            raise InvalidGraph(f'not ε-separated: {violation}')
        return sep
    pairs = [(str(a), str(b)) for a, b in document.get('order', [])]
    top = document.get('top')
    return OrderedGraph.from_generators(graph, pairs, top=None if top is None else str(top))


def universal_name(u):
    """Return a short description line."""
    if isinstance(u, EpsSeparatedGraph):
        return f'ε-separated graph, {len(u.vertices)} vertices, breadth {u.breadth}'
    top = '' if u.top is None else f', top {label(u.top)}'
    return f'ordered graph, {len(u.vertices)} vertices{top}'
