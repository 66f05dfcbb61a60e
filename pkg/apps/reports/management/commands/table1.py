from apps.core.conf import default_seed

from ...suite import SUITE, run_suite
from ..base import ReportCommand


class Command(ReportCommand):
    help = 'Reproduce the memory requirements of the named objectives'

    flags = ('row', 'seed')

    def add_arguments(self, parser):
        parser.add_argument(
            '--row',
            action='append',
            choices=list(SUITE),
            default=[],
            help='Suite group to run (repeatable; all groups by default)'
        )
        parser.add_argument('--seed', type=int, default=None, help='Seed for the random groups')
        super().add_arguments(parser)

    def run(self, report, **options):
        seed = default_seed() if options['seed'] is None else options['seed']
        names = options['row'] or list(SUITE)
        report.feed({'rows': names, 'seed': seed})
        report.extend(run_suite(names, seed))
