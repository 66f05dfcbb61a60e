"""
Graph file format and DOT export.

The file format is a JSON document with ``alphabet``, ``vertices``
(``{id, owner?}`` records), ``edges`` (``[src, color, dst]``) and optional
``initial``, ``order`` (``[lesser, greater]`` generator pairs), ``top``,
``parts`` (part id -> vertex list) and ``delta`` (``[part, color, part]``).
Vertex ids are written as strings; the string-id graph is the canonical form.
"""
import json

from apps.core.exceptions import InvalidGraph
from apps.core.ordering import label

from .graph import ColoredGraph, validate


def relabel(graph, names=None):
    """
    Return (string-id graph, old -> new mapping).

    Raises InvalidGraph if two ids flatten to the same string.
    """
    names = names or {vertex: label(vertex) for vertex in graph.vertices}
    if len(set(names.values())) != len(names):
        raise InvalidGraph('vertex ids collide once written as strings')
    edges = [(names[s], c, names[t]) for s, c, t in graph.edges]
    renamed = ColoredGraph.build(
        graph.alphabet, names.values(), edges, pregraph=True
    )
    if graph.is_graph:
        renamed = renamed.as_graph()
    return renamed, names


def dump_graph(graph, owners=None, initial=None, order=None, top=None, parts=None, delta=None):
    """Return the file document for ``graph`` and its optional annotations."""
    names = {vertex: label(vertex) for vertex in graph.vertices}
    if len(set(names.values())) != len(names):
        raise InvalidGraph('vertex ids collide once written as strings')
    vertices = []
    for vertex in sorted(graph.vertices, key=names.__getitem__):
        record = {'id': names[vertex]}
        if owners is not None:
            record['owner'] = owners[vertex]
        vertices.append(record)
    document = {
        'alphabet': list(graph.alphabet),
        'vertices': vertices,
        'edges': sorted([names[s], c, names[t]] for s, c, t in graph.edges),
    }
    if initial is not None:
        document['initial'] = names[initial]
    if order is not None:
        document['order'] = sorted([names[a], names[b]] for a, b in order)
    if top is not None:
        document['top'] = names[top]
    if parts is not None:
        document['parts'] = {
            label(part): sorted(names[v] for v in members)
            for part, members in parts.items()
        }
    if delta is not None:
        document['delta'] = sorted(
            [label(m), c, label(target)] for (m, c), target in delta.items()
        )
    return document


def load_graph(document, status='graph'):
    """Return the validated ColoredGraph of a file document."""
    if not isinstance(document, dict):
        raise InvalidGraph('graph document must be a mapping')
    try:
        normalized = {
            'alphabet': [str(color) for color in document['alphabet']],
            'vertices': [
                str(item['id'] if isinstance(item, dict) else item)
                for item in document['vertices']
            ],
            'edges': [
                [str(edge[0]), str(edge[1]), str(edge[2])] if len(edge) == 3 else edge
                for edge in document.get('edges', [])
            ],
        }
    except (KeyError, TypeError) as exc:
        raise InvalidGraph(f'malformed graph description: {exc}') from exc
    return validate(normalized, status=status)


def owners_of(document):
    """Return ``{vertex id: owner}`` for records carrying an owner."""
    owners = {}
    for item in document.get('vertices', []):
        if isinstance(item, dict) and 'owner' in item:
            owners[item['id']] = item['owner']
    return owners


def dumps(document):
    """Serialize a document deterministically."""
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGraph(f'malformed JSON: {exc}') from exc


def _quote(value):
    return '"' + str(value).replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(graph, name='G', eve=None, chains=None, initial=None):
    """
    Render ``graph`` as DOT text.

    With ``eve`` given, Eve vertices are circles and Adam vertices boxes.
    ``chains`` (a list of vertex lists) are drawn as clusters.
    """
    lines = [f'digraph {_quote(name)} {{', '    rankdir=LR;']
    for index, chain in enumerate(chains or []):
        lines.append(f'    subgraph cluster_{index} {{')
        lines.append(f'        label={_quote(f"chain {index}")};')
        lines.append('        style=rounded;')
        for vertex in chain:
            lines.append(f'        {_quote(label(vertex))};')
        lines.append('    }')
    for vertex in graph.vertices:
        attributes = []
        if eve is not None:
            attributes.append('shape=circle' if vertex in eve else 'shape=box')
        if vertex == initial:
            attributes.append('penwidth=2')
        suffix = f' [{", ".join(attributes)}]' if attributes else ''
        lines.append(f'    {_quote(label(vertex))}{suffix};')
    for source, color, target in graph.edges:
        style = ', style=dashed' if color == 'eps' else ''
        lines.append(
            f'    {_quote(label(source))} -> {_quote(label(target))} [label={_quote(color)}{style}];'
        )
    lines.append('}')
    return '\n'.join(lines) + '\n'
