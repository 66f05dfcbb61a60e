from apps.core.ordering import canonical, label
from apps.graphs.formats import dumps, to_dot
from apps.solver.formats import dump_strategy
from apps.solver.lifting import solve_via_universal
from apps.solver.oracle import solve_oracle
from apps.solver.strategies import verify_strategy

from ...inputs import parse_params, read_game, read_universal
from ...report import Row
from ..base import ReportCommand


def _names(vertices):
    return [label(v) for v in canonical(vertices)]


class Command(ReportCommand):
    help = 'Solve a game, optionally through a universal graph, and extract a strategy'

    positional = ('game', 'universal')
    flags = ('param', 'bound', 'all_winning', 'out', 'dot')

    def add_arguments(self, parser):
        parser.add_argument('game', help='Game file or lower-bound game name')
        parser.add_argument('universal', nargs='?', default=None, help='Universal graph file or builtin name')
        parser.add_argument('--param', action='append', default=[], help='Lower-bound game parameter key=value')
        parser.add_argument('--bound', type=int, default=None, help='Bound for a builtin universal graph')
        parser.add_argument('--all-winning', action='store_true', help='Expect Eve to win everywhere')
        parser.add_argument('--out', default=None, help='Write the winning strategy here')
        parser.add_argument('--dot', default=None, help='Write the game (or the strategy) as DOT here')
        super().add_arguments(parser)

    def run(self, report, **options):
        game = read_game(options['game'], parse_params(options['param']), report)
        oracle = solve_oracle(game)
        if options['universal']:
            u = read_universal(options['universal'], bound=options['bound'], report=report)
            solution = solve_via_universal(game, u)
            region = solution.region
            report.add(Row.check(
                'region', _names(region), _names(oracle.region), note='checked against the oracle solver'
            ))
            winning = game.initial in region
            extract = solution.strategy
        else:
            region = oracle.region
            report.add(Row('region', _names(region)))
            winning = oracle.wins(game.initial)
            extract = oracle.strategy
        if options['all_winning']:
            report.add(Row.check('all winning', len(region), len(game.graph.vertices)))
        report.add(Row('initial', label(game.initial), note='winning' if winning else 'losing'))

        strategy = None
        if winning:
            strategy = extract()
            verdict = verify_strategy(game, strategy)
            report.add(Row.holds('strategy', bool(verdict), note=str(verdict)))
            report.add(Row('memory states', len(strategy.memory)))
            report.add(Row('largest fiber', strategy.memory_usage))
            if options['out']:
                self.write_file(options['out'], dumps(dump_strategy(strategy)))
        if options['dot']:
            if strategy is not None:
                eve = {pair for pair in strategy.graph.vertices if game.is_eve(pair[0])}
                text = to_dot(strategy.graph, name='strategy', eve=eve, initial=strategy.initial)
            else:
                text = to_dot(game.graph, name='game', eve=game.eve, initial=game.initial)
            self.write_file(options['dot'], text)
