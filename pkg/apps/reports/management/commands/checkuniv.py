from apps.core.conf import default_seed
from apps.solver.sampling import satisfying_samples
from apps.solver.universality import check_universality_sample

from ...inputs import parse_params, read_objective, read_universal
from ...report import Row
from ..base import ReportCommand


class Command(ReportCommand):
    help = 'Test a universal graph against random graphs satisfying an objective'

    positional = ('universal', 'objective')
    flags = ('param', 'samples', 'size', 'seed', 'bound')

    def add_arguments(self, parser):
        parser.add_argument('universal', help='Universal graph file or builtin name')
        parser.add_argument('objective', help='Objective file or builtin name')
        parser.add_argument('--param', action='append', default=[], help='Builtin parameter key=value')
        parser.add_argument('--samples', type=int, default=100, help='Number of sample graphs')
        parser.add_argument('--size', type=int, default=5, help='Largest sample size')
        parser.add_argument('--seed', type=int, default=None, help='Sampling seed')
        parser.add_argument('--bound', type=int, default=None, help='Bound for a builtin universal graph')
        super().add_arguments(parser)

    def run(self, report, **options):
        params = parse_params(options['param'])
        objective = read_objective(options['objective'], params, report)
        u = read_universal(options['universal'], params, options['bound'], report)
        seed = default_seed() if options['seed'] is None else options['seed']
        report.feed({'samples': options['samples'], 'size': options['size'], 'seed': seed})
        samples = list(satisfying_samples(objective, options['samples'], max_size=options['size'], seed=seed))
        result = check_universality_sample(u, objective, samples)
        report.add(Row('samples', result.checked))
        report.add(Row.holds('universal', result.ok, note=str(result)))
