"""
Results tables printed by the memoria commands.

A report is a list of rows ``(name, value, expected, passed, note)``. The
rendering never includes timings, so the same inputs always print the same
bytes; the duration only goes to the recorded RunReport.
"""
import hashlib
import json
from dataclasses import asdict, dataclass, field

from .models import RunReport


@dataclass(frozen=True)
class Row:
    name: str
    value: object
    expected: object = None
    passed: bool = None
    note: str = ''

    @classmethod
    def check(cls, name, value, expected, note=''):
        """Return a row comparing ``value`` with ``expected``."""
        return cls(name, value, expected, value == expected, note)

    @classmethod
    def holds(cls, name, value, note=''):
        """Return a row that passes when ``value`` is truthy."""
        return cls(name, bool(value), True, bool(value), note)


@dataclass
class Report:
    command: str
    rows: list = field(default_factory=list)
    inputs: list = field(default_factory=list)
    duration: float = 0.0

    def add(self, row):
        self.rows.append(row)
        return row

    def extend(self, rows):
        self.rows.extend(rows)

    def feed(self, item):
        """Record an input (file contents or a parameter) in the digest."""
        self.inputs.append(item if isinstance(item, str) else json.dumps(item, sort_keys=True))

    @property
    def digest(self):
        sha = hashlib.sha256()
        for item in self.inputs:
            sha.update(item.encode('utf-8'))
            sha.update(b'\0')
        return sha.hexdigest()

    @property
    def passed(self):
        return all(row.passed is not False for row in self.rows)

    @property
    def status(self):
        return RunReport.Status.PASS if self.passed else RunReport.Status.FAIL

    def as_dict(self):
        return {
            'command': self.command,
            'inputs_digest': self.digest,
            'status': self.status.value,
            'results': [_jsonable(asdict(row)) for row in self.rows],
        }

    def render(self, fmt='text'):
        if fmt == 'json':
            return json.dumps(self.as_dict(), indent=2, sort_keys=True, ensure_ascii=False) + '\n'
        return self.render_text()

    def render_text(self):
        header = ('name', 'value', 'expected', 'result', 'note')
        lines = [
            (
                row.name,
                _text(row.value),
                '' if row.expected is None else _text(row.expected),
                {True: 'pass', False: 'FAIL', None: ''}[row.passed],
                row.note,
            )
            for row in self.rows
        ]
        widths = [
            max(len(column[i]) for column in [header, *lines])
            for i in range(len(header))
        ]
        out = [f'# {self.command}', f'# inputs {self.digest[:16]}']
        for line in [header, *lines]:
            out.append('  '.join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
        out.append(f'status: {self.status.value}')
        return '\n'.join(out) + '\n'

    def record(self):
        """Persist the report as a RunReport row."""
        return RunReport.objects.create(
            command=self.command[:255],
            inputs_digest=self.digest,
            results=self.as_dict()['results'],
            status=self.status,
            duration=self.duration,
        )


def _text(value):
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, (set, frozenset)):
        return '{' + ', '.join(sorted(str(v) for v in value)) + '}'
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(str(v) for v in value) + ']'
    return str(value)


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(str(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)
