"""
Tests for results reports, recorded runs and the management commands.
"""
import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from apps.core.exceptions import InvalidParameters
from apps.reports.inputs import parse_params, read_game, read_objective
from apps.reports.models import RunReport
from apps.reports.report import Report, Row
from tests.factories import RunReportFactory


def run(*args, **options):
    """Call a command and return (stdout, stderr)."""
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err, **options)
    return out.getvalue(), err.getvalue()


def sample_report():
    report = Report(command='minmem fig1')
    report.feed({'game': 'fig1'})
    report.add(Row.check('eps-free memory', '2', '2'))
    report.add(Row('explored', 17, note='nodes'))
    return report


def test_report_text_is_aligned_and_timeless():
    report = sample_report()
    report.duration = 12.5
    lines = report.render().splitlines()
    assert lines[0] == '# minmem fig1'
    assert lines[1] == f'# inputs {report.digest[:16]}'
    assert lines[2].split() == ['name', 'value', 'expected', 'result', 'note']
    assert lines[3].split() == ['eps-free', 'memory', '2', '2', 'pass']
    assert lines[-1] == 'status: PASS'
    assert '12.5' not in report.render()
    assert report.render() == sample_report().render()


def test_report_json():
    document = json.loads(sample_report().render('json'))
    assert document['status'] == 'PASS'
    assert document['results'][0] == {
        'name': 'eps-free memory', 'value': '2', 'expected': '2', 'passed': True, 'note': '',
    }


def test_failed_row_fails_the_report():
    report = sample_report()
    report.add(Row.check('width', 3, 2))
    assert not report.passed
    assert report.status == RunReport.Status.FAIL
    assert 'FAIL' in report.render()


def test_holds_rows_store_booleans():
    row = Row.holds('strategy', ['winning'])
    assert row.value is True
    assert row.passed is True


def test_digest_depends_on_inputs():
    other = Report(command='minmem fig1')
    other.feed({'game': 'w1'})
    assert other.digest != sample_report().digest


@pytest.mark.django_db
def test_run_report_properties():
    passing = RunReportFactory()
    failing = RunReportFactory(failing=True)
    assert passing.is_passing
    assert passing.row_count == 1
    assert not failing.is_passing
    assert failing.failed_rows[0]['name'] == 'memory'
    assert RunReport.objects.filter(status=RunReport.Status.FAIL).get() == failing


@pytest.mark.django_db
def test_recorded_report_matches_the_table():
    stored = sample_report().record()
    assert stored.status == RunReport.Status.PASS
    assert stored.row_count == 2
    assert stored.inputs_digest == sample_report().digest


def test_parse_params():
    assert parse_params(['size=3', 'name=x']) == {'size': 3, 'name': 'x'}
    with pytest.raises(InvalidParameters):
        parse_params(['size'])


def test_inputs_read_files_and_builtins(tmp_path):
    path = tmp_path / 'w1.json'
    path.write_text('{"type": "builtin", "name": "W1"}', encoding='utf-8')
    report = Report(command='test')
    assert read_objective(str(path), report=report).alphabet == ('a', 'b')
    assert read_objective('W2', {'size': 4}).alphabet == ('a', 'b', 'c', 'd')
    assert read_game('fig1').initial == 'v0'
    assert len(report.inputs) == 1
    with pytest.raises(InvalidParameters):
        read_game(str(tmp_path / 'missing.json'))


def test_zielonka_command():
    out, err = run('zielonka', 'W1', expect=2)
    assert out.startswith('(a, b)\n  [a]\n  [b]\n')
    assert out.endswith('status: PASS\nAll expectations met.\n')
    assert 'All expectations met.' not in err


def test_zielonka_command_reports_a_failed_expectation():
    with pytest.raises(CommandError) as error:
        run('zielonka', 'W1', expect=3)
    assert error.value.returncode == 1


def test_zielonka_command_needs_a_muller_objective():
    with pytest.raises(CommandError) as error:
        run('zielonka', 'alternation')
    assert error.value.returncode == 2


def test_minmem_command():
    out, _ = run('minmem', 'fig1', expect=2, format='json')
    document = json.loads(out)
    assert document['command'] == 'minmem fig1 eps-free 4 --expect 2'
    assert document['results'][0]['value'] == '2'


def test_minmem_command_writes_the_strategy(tmp_path):
    target = tmp_path / 'strategy.json'
    _, err = run('minmem', 'w1', out=str(target))
    assert json.loads(target.read_text(encoding='utf-8'))['memory'] == ['0', '1']
    assert f'Wrote {target}' in err


def test_build_command_rejects_unknown_names():
    with pytest.raises(CommandError) as error:
        run('build', 'W9')
    assert error.value.returncode == 2


def test_build_command(tmp_path):
    target = tmp_path / 'alternation.json'
    out, _ = run('build', 'alternation', out=str(target))
    assert 'monotone' in out
    assert json.loads(target.read_text(encoding='utf-8'))['top'] == '⊤'


def test_solve_command():
    out, _ = run('solve', 'fig1', 'alternation', all_winning=True)
    assert 'checked against the oracle solver' in out
    assert 'status: PASS' in out


def test_checkuniv_command():
    out, _ = run('checkuniv', 'W1', 'W1', samples=5, size=3, bound=4)
    assert 'pass (5 samples)' in out


def test_table1_command():
    out, err = run('table1', row=['zielonka'])
    assert out.count('pass') == 3
    assert out.index('status: PASS') < out.index('All expectations met.')
    assert not err


@pytest.mark.django_db
def test_record_flag_stores_the_run():
    _, err = run('zielonka', 'W1', record=True)
    stored = RunReport.objects.get()
    assert stored.command == 'zielonka W1'
    assert f'Recorded run report {stored.id}' in err


def test_server_entry_points_load():
    from config import asgi, wsgi

    assert callable(wsgi.application)
    assert callable(asgi.application)
