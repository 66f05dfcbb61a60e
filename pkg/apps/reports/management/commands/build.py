from apps.core.conf import default_bound
from apps.core.exceptions import InvalidParameters
from apps.graphs.formats import dumps, to_dot
from apps.orders.poset import chain_decomposition, check_monotone, poset_width
from apps.orders.separation import EpsSeparatedGraph
from apps.universal.builtins import BUILTINS
from apps.universal.constructions import muller_universal, safety_quotient_universal
from apps.universal.formats import dump_universal, universal_name

from ...inputs import parse_params, read_objective, read_universal
from ...report import Row
from ..base import ReportCommand

CONSTRUCTIONS = ('muller', 'safety')


class Command(ReportCommand):
    help = 'Build a universal graph and write it to a file'

    positional = ('name',)
    flags = ('objective', 'param', 'bound', 'out', 'dot')

    def add_arguments(self, parser):
        parser.add_argument(
            'name',
            help=f'Construction ({", ".join(CONSTRUCTIONS)}) or builtin graph ({", ".join(BUILTINS)})'
        )
        parser.add_argument('--objective', default=None, help='Objective file or builtin name for muller/safety')
        parser.add_argument('--param', action='append', default=[], help='Parameter key=value')
        parser.add_argument('--bound', type=int, default=None, help='Finite ordinal bound')
        parser.add_argument('--out', default=None, help='Write the graph document here')
        parser.add_argument('--dot', default=None, help='Write the graph as DOT here')
        super().add_arguments(parser)

    def build(self, report, name, options):
        params = parse_params(options['param'])
        if name in CONSTRUCTIONS:
            if not options['objective']:
                raise InvalidParameters(f'{name} needs --objective')
            objective = read_objective(options['objective'], params, report)
            if name == 'muller':
                bound = options['bound'] or default_bound()
                report.feed({'bound': bound})
                return muller_universal(objective, bound)
            return safety_quotient_universal(objective)
        if name not in BUILTINS:
            raise InvalidParameters(f'unknown construction {name!r}')
        return read_universal(name, params, options['bound'], report)

    def run(self, report, **options):
        u = self.build(report, options['name'], options)
        report.add(Row('graph', universal_name(u)))
        if isinstance(u, EpsSeparatedGraph):
            report.add(Row('breadth', u.breadth))
            ordered = u.ordered()
            chains = list(u.parts.values())
        else:
            ordered = u
            chains = chain_decomposition(u)
        width, _ = poset_width(ordered)
        report.add(Row('vertices', len(ordered.vertices)))
        report.add(Row('edges', len(ordered.graph.edges)))
        report.add(Row('width', width))
        report.add(Row.holds('monotone', check_monotone(ordered) is None))
        if options['out']:
            self.write_file(options['out'], dumps(dump_universal(u)))
        if options['dot']:
            self.write_file(options['dot'], to_dot(ordered.graph, name=options['name'], chains=chains))
