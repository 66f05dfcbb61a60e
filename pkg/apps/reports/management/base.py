import time
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from apps.core.conf import report_format
from apps.core.exceptions import MemoriaError

from ..report import Report


class ReportCommand(BaseCommand):
    """
    Base class for the memoria commands.

    Subclasses implement ``run(report, **options)`` and fill the report.
    Input errors exit with code 2, failed expectations with code 1.
    """

    def add_arguments(self, parser):
        parser.add_argument(
            '--format',
            choices=['text', 'json'],
            default=None,
            help='Report format (defaults to MEMORIA_REPORT_FORMAT)'
        )
        parser.add_argument(
            '--record',
            action='store_true',
            help='Store the report as a RunReport row'
        )

    positional = ()
    flags = ()

    def echo(self, options):
        """Return the command line the report is filed under."""
        parts = [self.__module__.rsplit('.', 1)[-1]]
        parts += [str(options[key]) for key in self.positional if options.get(key) is not None]
        for key in self.flags:
            value = options.get(key)
            if value is None or value is False or value == []:
                continue
            flag = '--' + key.replace('_', '-')
            if value is True:
                parts.append(flag)
            elif isinstance(value, list):
                parts += [f'{flag} {item}' for item in value]
            else:
                parts.append(f'{flag} {value}')
        return ' '.join(parts)

    def run(self, report, **options):
        raise NotImplementedError

    def handle(self, *args, **options):
        report = Report(command=self.echo(options))
        started = time.perf_counter()
        try:
            self.run(report, **options)
        except MemoriaError as exc:
            raise CommandError(str(exc), returncode=2) from exc
        report.duration = time.perf_counter() - started

        fmt = options.get('format') or report_format()
        self.stdout.write(report.render(fmt), ending='')
        if options.get('record'):
            stored = report.record()
            self.stderr.write(f'Recorded run report {stored.id}')
        if not report.passed:
            failed = [row.name for row in report.rows if row.passed is False]
            raise CommandError(f'expectations failed: {", ".join(failed)}', returncode=1)
        # stdout stays a single JSON document in json mode
        summary = self.stdout if fmt == 'text' else self.stderr
        summary.write(self.style.SUCCESS('All expectations met.'))

    def write_file(self, path, text):
        try:
            Path(path).write_text(text, encoding='utf-8')
        except OSError as exc:
            raise CommandError(f'cannot write {path}: {exc}', returncode=2) from exc
        self.stderr.write(f'Wrote {path}')
