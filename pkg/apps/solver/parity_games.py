"""
Max-parity games on networkx arenas, solved by Zielonka's recursion.

An arena is a ``nx.DiGraph`` whose nodes carry ``player`` (0 for Eve, 1 for
Adam) and ``priority``. Player p wins a play when the highest priority seen
infinitely often has parity p. The solver returns both winning regions and
a positional strategy for each player on its region.
"""
import logging
from collections import deque

from apps.core.exceptions import InvalidGraph
from apps.core.ordering import canonical, sort_key

logger = logging.getLogger(__name__)


def attractor(arena, target, player, nodes):
    """
    Return the attractor of ``target`` for ``player`` inside ``nodes``.

    The second value maps each attracted node of ``player`` to the
    successor that moves it closer to ``target``.
    """
    region = set(target)
    strategy = {}
    escapes = {}
    for node in nodes:
        if node not in region:
            escapes[node] = sum(1 for succ in arena.successors(node) if succ in nodes)
    queue = deque(canonical(region))
    while queue:
        node = queue.popleft()
        for pred in sorted(arena.predecessors(node), key=sort_key):
            if pred not in nodes or pred in region:
                continue
            if arena.nodes[pred]['player'] == player:
                strategy[pred] = node
            else:
                escapes[pred] -= 1
                if escapes[pred]:
                    continue
            region.add(pred)
            queue.append(pred)
    return region, strategy


def _stay(arena, node, nodes):
    return min((succ for succ in arena.successors(node) if succ in nodes), key=sort_key)


def _solve(arena, nodes):
    regions = (set(), set())
    strategies = ({}, {})
    if not nodes:
        return regions, strategies
    top = max(arena.nodes[node]['priority'] for node in nodes)
    player = top % 2
    opponent = 1 - player
    heads = {node for node in nodes if arena.nodes[node]['priority'] == top}
    attracted, pull = attractor(arena, heads, player, nodes)
    (sub_regions, sub_strategies) = _solve(arena, nodes - attracted)
    if not sub_regions[opponent]:
        strategy = dict(sub_strategies[player])
        strategy.update(pull)
        for node in heads:
            if arena.nodes[node]['player'] == player:
                strategy[node] = _stay(arena, node, nodes)
        regions[player].update(nodes)
        strategies[player].update(strategy)
        return regions, strategies

    lost, push = attractor(arena, sub_regions[opponent], opponent, nodes)
    (rest_regions, rest_strategies) = _solve(arena, nodes - lost)
    regions[player].update(rest_regions[player])
    strategies[player].update(rest_strategies[player])
    regions[opponent].update(lost | rest_regions[opponent])
    strategies[opponent].update(sub_strategies[opponent])
    strategies[opponent].update(push)
    strategies[opponent].update(rest_strategies[opponent])
    return regions, strategies


def solve_parity(arena):
    """
    Solve a max-parity game.

    Returns ``(regions, strategies)``, both indexed by player. Each strategy
    maps the player's nodes in its region to a successor in that region.
    """
    dead = [node for node in arena.nodes if arena.out_degree(node) == 0]
    if dead:
        raise InvalidGraph('parity arena has dead ends', diagnostic={'sinks': canonical(dead)})
    regions, raw = _solve(arena, set(arena.nodes))
    strategies = tuple(
        {
            node: succ for node, succ in raw[player].items()
            if node in regions[player] and arena.nodes[node]['player'] == player
        }
        for player in (0, 1)
    )
    logger.debug(
        'Parity arena of %d nodes: Eve wins %d, Adam wins %d',
        arena.number_of_nodes(), len(regions[0]), len(regions[1]),
    )
    return regions, strategies
