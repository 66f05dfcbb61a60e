from apps.core.exceptions import InvalidObjective
from apps.objectives.objectives import Muller
from apps.zielonka.render import pretty, to_dot
from apps.zielonka.tree import build_zielonka, memory_of

from ...inputs import parse_params, read_objective
from ...report import Row
from ..base import ReportCommand


class Command(ReportCommand):
    help = 'Print the Zielonka tree of a Muller objective and its memory'

    positional = ('objective',)
    flags = ('param', 'expect', 'dot')

    def add_arguments(self, parser):
        parser.add_argument('objective', help='Muller objective file or builtin name')
        parser.add_argument('--param', action='append', default=[], help='Builtin parameter key=value')
        parser.add_argument('--expect', type=int, default=None, help='Expected memory value')
        parser.add_argument('--dot', default=None, help='Write the tree as DOT to this file')
        super().add_arguments(parser)

    def run(self, report, **options):
        objective = read_objective(options['objective'], parse_params(options['param']), report)
        if not isinstance(objective, Muller):
            raise InvalidObjective(f'{options["objective"]} is not a Muller objective')
        tree = build_zielonka(objective.alphabet, objective.family)
        self.stdout.write(pretty(tree), ending='')
        memory = memory_of(tree)
        if options['expect'] is None:
            report.add(Row('memory', memory))
        else:
            report.add(Row.check('memory', memory, options['expect']))
        report.add(Row('leaves', len(tree.leaves)))
        report.add(Row('height', tree.height))
        if options['dot']:
            self.write_file(options['dot'], to_dot(tree))
