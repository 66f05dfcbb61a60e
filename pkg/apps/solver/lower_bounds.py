"""
Games witnessing memory lower bounds, and the two-state strategy for W2.
"""
import logging
from collections import deque

from apps.core.exceptions import InvalidObjective, InvalidParameters, LosingPosition
from apps.graphs.graph import EPSILON, ColoredGraph
from apps.objectives import builtins as objectives
from apps.objectives.objectives import Safety

from .games import Game
from .oracle import solve_oracle
from .strategies import ProductStrategy

logger = logging.getLogger(__name__)


def fig1_game():
    """
    Adam reads ``a`` into v1 or straight into v2. From v1 Eve moves on to v2
    with either color; at v2 she has to keep ``(ab)^ω`` going with two self-loops.
    """
    graph = ColoredGraph.build(
        ('a', 'b'),
        ['v0', 'v1', 'v2'],
        [
            ('v0', 'a', 'v1'), ('v0', 'a', 'v2'),
            ('v1', 'a', 'v2'), ('v1', 'b', 'v2'),
            ('v2', 'a', 'v2'), ('v2', 'b', 'v2'),
        ],
    )
    return Game.build(graph, {'v1', 'v2'}, 'v0', objectives.alternation())


def w1_game():
    graph = ColoredGraph.build(('a', 'b'), ['v'], [('v', 'a', 'v'), ('v', 'b', 'v')])
    return Game.build(graph, {'v'}, 'v', objectives.w1())


def w3_game(m=1, n=2):
    """
    Adam reads the m initial a's; Eve then loops on b and decides when to
    leave with an a towards a vertex that only reads b.
    """
    if m < 1 or n < 1:
        raise InvalidParameters('W3 needs m, n >= 1')
    starts = [f's{j}' for j in range(m)]
    path = starts + ['e']
    edges = [(path[j], 'a', path[j + 1]) for j in range(m)]
    edges += [('e', 'b', 'e'), ('e', 'a', 't'), ('t', 'b', 't')]
    graph = ColoredGraph.build(('a', 'b'), path + ['t'], edges)
    return Game.build(graph, {'e'}, starts[0], objectives.w3(m, n))


def w4_game():
    """Adam plays b or c into Eve's vertex, which answers with a or b."""
    graph = ColoredGraph.build(
        ('a', 'b', 'c'),
        ['e', 'x'],
        [('x', 'b', 'e'), ('x', 'c', 'e'), ('e', 'a', 'x'), ('e', 'b', 'x')],
    )
    return Game.build(graph, {'e'}, 'x', objectives.w4())


def w2_eps_game(mu=3):
    """Eve jumps by ε to a color x; Adam answers with any color but x."""
    if mu < 2:
        raise InvalidParameters('the ε-game for W2 needs mu >= 2')
    colors = objectives.letters(mu)
    edges = [('v0', EPSILON, x) for x in colors]
    edges += [(x, y, 'v0') for x in colors for y in colors if y != x]
    graph = ColoredGraph.build(colors, ['v0', *colors], edges)
    return Game.build(graph, {'v0'}, 'v0', objectives.w2(mu), epsilon=True)


def _word_vertex(word):
    return f'u[{word}]'


def _pair_vertex(pair):
    return f'e[{pair}]'


def w2_chromatic_game(size=3, length=None):
    """
    Adam spells a word without repeated letters, up to ``length`` letters,
    then hands Eve a pair of colors after one more letter.
    """
    length = size if length is None else length
    if length < 1:
        raise InvalidParameters('truncation length must be at least 1')
    colors = objectives.letters(size)
    pairs = [c + d for i, c in enumerate(colors) for d in colors[i + 1:]]
    words = ['']
    frontier = ['']
    for _ in range(length):
        frontier = [w + c for w in frontier for c in colors if not w.endswith(c)]
        words.extend(frontier)
    edges = []
    for word in words:
        for c in colors:
            if word.endswith(c):
                continue
            if len(word) < length:
                edges.append((_word_vertex(word), c, _word_vertex(word + c)))
            edges.extend((_word_vertex(word), c, _pair_vertex(pair)) for pair in pairs)
    for pair in pairs:
        edges.extend((_pair_vertex(pair), c, _pair_vertex(pair)) for c in pair)
    vertices = [_word_vertex(w) for w in words] + [_pair_vertex(p) for p in pairs]
    graph = ColoredGraph.build(colors, vertices, edges)
    eve = {_pair_vertex(pair) for pair in pairs}
    return Game.build(graph, eve, _word_vertex(''), objectives.w2(size))


LOWER_BOUND_GAMES = {
    'fig1': fig1_game,
    'w1': w1_game,
    'w3': w3_game,
    'w4': w4_game,
    'w2-eps': w2_eps_game,
    'w2-chromatic': w2_chromatic_game,
}


def lower_bound_game(name, **params):
    """Return the named lower-bound game."""
    try:
        builder = LOWER_BOUND_GAMES[name]
    except KeyError:
        raise InvalidParameters(f'unknown lower-bound game {name!r}') from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise InvalidParameters(f'bad parameters for {name}: {exc}') from exc


def width_witness_graph(m=3):
    """Vertices 0..m-1, with ``i -a-> j`` and ``j -b-> i`` for every i < j."""
    if m < 2:
        raise InvalidParameters('the width witness needs m >= 2')
    vertices = [str(i) for i in range(m)]
    edges = []
    for i in range(m):
        for j in range(i + 1, m):
            edges += [(str(i), 'a', str(j)), (str(j), 'b', str(i))]
    return ColoredGraph.build(('a', 'b'), vertices, edges)


def _last_color_dfa(objective):
    """Return the DFA of ``objective`` if its state only depends on the last color."""
    if not isinstance(objective, Safety):
        raise InvalidObjective('the two-state strategy needs a W2 safety objective')
    dfa = objective.dfa
    for state in dfa.reachable:
        for color in dfa.alphabet:
            target = dfa.delta[(state, color)]
            if target not in (dfa.delta[(dfa.initial, color)], dfa.sink):
                raise InvalidObjective('the two-state strategy needs a W2 safety objective')
    return dfa


def w2_two_state_strategy(game):
    """
    Return a strategy remembering one bit per Eve vertex v: whether the
    previous color was v's preferred color.

    Eve prefers a color c1 at v and falls back to a second color c2 after
    entering v through c1. Adam vertices keep a single memory state.
    """
    if game.epsilon:
        raise InvalidParameters('the two-state strategy is defined on ε-free games')
    dfa = _last_color_dfa(game.objective)
    solution = solve_oracle(game)
    if not solution.wins(game.initial):
        raise LosingPosition(f'Eve does not win from {game.initial!r}')

    def good(color, target):
        return solution.wins(target, dfa.delta[(dfa.initial, color)])

    preferred = {}
    for vertex in game.eve:
        colors = sorted({c for _, c, t in game.graph.out_edges(vertex) if good(c, t)})
        if colors:
            preferred[vertex] = (colors[0], colors[1] if len(colors) > 1 else colors[0])

    def move(vertex, bit):
        color = preferred[vertex][bit - 1]
        target = next(
            t for _, c, t in game.graph.out_edges(vertex) if c == color and good(c, t)
        )
        return color, target

    def entering(color, target):
        first = preferred.get(target, (None,))[0]
        return (target, 2 if game.is_eve(target) and color == first else 1)

    initial = (game.initial, 1)
    seen = {initial}
    queue = deque([initial])
    edges = []
    while queue:
        vertex, bit = queue.popleft()
        if game.is_eve(vertex):
            moves = [move(vertex, bit)]
        else:
            moves = [(c, t) for _, c, t in game.graph.out_edges(vertex)]
        for color, target in moves:
            pair = entering(color, target)
            edges.append(((vertex, bit), color, pair))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    logger.debug('Two-state strategy with %d pairs', len(seen))
    return ProductStrategy.build(game.graph.alphabet, (1, 2), initial, edges)
