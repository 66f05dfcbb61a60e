"""
Color-preserving graph morphisms: checking and backtracking search.
"""
import logging

from apps.core.exceptions import InvalidGraph
from apps.core.ordering import canonical

logger = logging.getLogger(__name__)


def check_morphism(source, target, mapping):
    """
    Check that ``mapping`` sends every edge of ``source`` to an edge of ``target``.

    Returns None when it does, otherwise the first violating source edge in
    canonical order.
    """
    missing = [vertex for vertex in source.vertices if vertex not in mapping]
    if missing:
        raise InvalidGraph('map not total', diagnostic={'missing': list(missing)})
    outside = [vertex for vertex in source.vertices if mapping[vertex] not in target.vertex_set]
    if outside:
        raise InvalidGraph('map image outside the target', diagnostic={'vertices': list(outside)})
    for source_vertex, color, target_vertex in source.edges:
        if not target.has_edge(mapping[source_vertex], color, mapping[target_vertex]):
            return (source_vertex, color, target_vertex)
    return None


def compose(first, second):
    """Return ``second ∘ first`` as a dict."""
    return {vertex: second[image] for vertex, image in first.items()}


def _candidates(source, target):
    # Arc-consistency prefilter: an image must offer every color the vertex uses
    out_colors = {v: {c for _, c, _ in source.out_edges(v)} for v in source.vertices}
    in_colors = {v: {c for _, c, _ in source.in_edges(v)} for v in source.vertices}
    target_out = {x: {c for _, c, _ in target.out_edges(x)} for x in target.vertices}
    target_in = {x: {c for _, c, _ in target.in_edges(x)} for x in target.vertices}
    return {
        v: [
            x for x in target.vertices
            if out_colors[v] <= target_out[x] and in_colors[v] <= target_in[x]
        ]
        for v in source.vertices
    }


def _search_order(source):
    # Visit vertices breadth-first from the best-connected one so that each
    # new vertex is constrained by already-assigned neighbours.
    degree = {v: len(source.out_edges(v)) + len(source.in_edges(v)) for v in source.vertices}
    order, seen = [], set()
    for start in sorted(source.vertices, key=lambda v: -degree[v]):
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            vertex = queue.pop(0)
            order.append(vertex)
            neighbours = canonical(
                {e[2] for e in source.out_edges(vertex)} | {e[0] for e in source.in_edges(vertex)}
            )
            for neighbour in neighbours:
                if neighbour not in seen:
                    seen.add(neighbour)
                    queue.append(neighbour)
    return order


def find_graph_morphism(source, target, anchor=None):
    """
    Search for a morphism from ``source`` to ``target``.

    ``anchor`` is an optional ``(source_vertex, allowed_target_vertices)``
    constraint. Returns a dict or None.
    """
    domains = _candidates(source, target)
    if anchor is not None:
        anchor_vertex, allowed = anchor
        if anchor_vertex not in source.vertex_set:
            raise InvalidGraph(f'anchor vertex {anchor_vertex!r} is not in the source')
        allowed = set(allowed)
        domains[anchor_vertex] = [x for x in domains[anchor_vertex] if x in allowed]
    if any(not domain for domain in domains.values()):
        return None

    order = _search_order(source)
    assignment = {}
    explored = 0

    def consistent(vertex, image):
        for _, color, neighbour in source.out_edges(vertex):
            if neighbour == vertex:
                if not target.has_edge(image, color, image):
                    return False
            elif neighbour in assignment:
                if not target.has_edge(image, color, assignment[neighbour]):
                    return False
        for neighbour, color, _ in source.in_edges(vertex):
            if neighbour != vertex and neighbour in assignment:
                if not target.has_edge(assignment[neighbour], color, image):
                    return False
        return True

    def backtrack(index):
        nonlocal explored
        if index == len(order):
            return True
        vertex = order[index]
        for image in domains[vertex]:
            explored += 1
            if consistent(vertex, image):
                assignment[vertex] = image
                if backtrack(index + 1):
                    return True
                del assignment[vertex]
        return False

    found = backtrack(0)
    logger.debug('Morphism search explored %d assignments (found=%s)', explored, found)
    return dict(assignment) if found else None
