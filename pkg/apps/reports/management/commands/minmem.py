from apps.graphs.formats import dumps
from apps.solver.formats import dump_strategy
from apps.solver.memory import Variant, min_memory

from ...inputs import parse_params, read_game
from ...report import Row
from ..base import ReportCommand


class Command(ReportCommand):
    help = 'Find the least memory with which Eve wins a game'

    positional = ('game', 'variant', 'k_max')
    flags = ('param', 'expect', 'out')

    def add_arguments(self, parser):
        parser.add_argument('game', help='Game file or lower-bound game name')
        parser.add_argument('variant', nargs='?', default=Variant.EPS_FREE, choices=Variant.values)
        parser.add_argument('k_max', nargs='?', type=int, default=4, help='Largest memory size tried')
        parser.add_argument('--param', action='append', default=[], help='Lower-bound game parameter key=value')
        parser.add_argument('--expect', type=int, default=None, help='Expected memory')
        parser.add_argument('--out', default=None, help='Write the witness strategy here')
        super().add_arguments(parser)

    def run(self, report, **options):
        game = read_game(options['game'], parse_params(options['param']), report)
        report.feed({'variant': options['variant'], 'k_max': options['k_max']})
        result = min_memory(game, options['variant'], options['k_max'])
        name = f'{options["variant"]} memory'
        if options['expect'] is None:
            report.add(Row(name, str(result)))
        else:
            report.add(Row.check(name, str(result), str(options['expect'])))
        report.add(Row('explored', result.explored))
        if options['out'] and result.found:
            self.write_file(options['out'], dumps(dump_strategy(result.strategy)))
