"""
Game and strategy documents.

A game document is a graph document plus ``eve`` (vertex list),
``initial``, ``objective`` (inline, or a path to an objective file) and
``epsilon``. A strategy document has ``memory``, ``initial`` as
``[vertex, memory]``, ``edges`` as ``[src, mem, color, dst, mem]`` and an
optional ``delta`` of ``[mem, color, mem]`` triples.
"""
from pathlib import Path

from apps.core.exceptions import InvalidGraph, InvalidObjective
from apps.core.ordering import canonical, label
from apps.graphs.formats import dump_graph, load_graph, loads, owners_of
from apps.objectives.formats import dump_objective, load_objective

from .games import ADAM, EVE, Game
from .strategies import ProductStrategy


def _objective(reference, base_dir):
    if isinstance(reference, dict):
        return load_objective(reference)
    if isinstance(reference, str):
        path = Path(base_dir or '.') / reference
        try:
            text = path.read_text(encoding='utf-8')
        except OSError as exc:
            raise InvalidObjective(f'cannot read objective file {path}: {exc}') from exc
        return load_objective(loads(text))
    raise InvalidObjective('game objective must be a mapping or a file name')


def load_game(document, base_dir=None):
    """Return the Game of a document; relative objective paths resolve against ``base_dir``."""
    graph = load_graph(document)
    if 'eve' in document:
        eve = {str(vertex) for vertex in document['eve']}
    else:
        eve = {v for v, owner in owners_of(document).items() if owner == EVE}
    initial = str(document.get('initial', graph.vertices[0]))
    if 'objective' not in document:
        raise InvalidObjective('game document has no objective')
    objective = _objective(document['objective'], base_dir)
    return Game.build(graph, eve, initial, objective, epsilon=bool(document.get('epsilon', False)))


def dump_game(game):
    owners = {v: EVE if game.is_eve(v) else ADAM for v in game.graph.vertices}
    document = dump_graph(game.graph, owners=owners, initial=game.initial)
    document['eve'] = sorted(label(v) for v in game.eve)
    document['objective'] = dump_objective(game.objective)
    document['epsilon'] = game.epsilon
    return document


def dump_strategy(strategy):
    document = {
        'memory': [label(m) for m in strategy.memory],
        'initial': [label(strategy.initial[0]), label(strategy.initial[1])],
        'edges': sorted(
            [label(s[0]), label(s[1]), c, label(t[0]), label(t[1])]
            for s, c, t in strategy.graph.edges
        ),
        'eps_respecting': strategy.eps_respecting,
    }
    if strategy.delta is not None:
        document['delta'] = sorted(
            [label(m), c, label(n)] for (m, c), n in strategy.delta.items()
        )
    return document


def load_strategy(document, game):
    """Return the ProductStrategy of a document, over ``game``'s alphabet."""
    try:
        memory = [str(m) for m in document['memory']]
        vertex, state = document['initial']
        edges = [
            ((str(s), str(m)), str(c), (str(t), str(n)))
            for s, m, c, t, n in document['edges']
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidGraph(f'malformed strategy document: {exc}') from exc
    delta = None
    if 'delta' in document:
        delta = {(str(m), str(c)): str(n) for m, c, n in document['delta']}
    return ProductStrategy.build(
        game.graph.alphabet,
        canonical(memory),
        (str(vertex), str(state)),
        edges,
        delta=delta,
        eps_respecting=bool(document.get('eps_respecting', False)),
    )
