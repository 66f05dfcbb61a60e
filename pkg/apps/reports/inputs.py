"""
Command inputs: every argument is a file path or the name of a builtin.
"""
import inspect
from pathlib import Path

from apps.core.conf import default_bound
from apps.core.exceptions import InvalidParameters
from apps.graphs.formats import loads
from apps.objectives.builtins import BUILTINS as BUILTIN_OBJECTIVES
from apps.objectives.builtins import builtin_objective
from apps.objectives.formats import load_objective
from apps.solver.formats import load_game
from apps.solver.lower_bounds import LOWER_BOUND_GAMES, lower_bound_game
from apps.universal.builtins import BUILTINS as BUILTIN_UNIVERSAL
from apps.universal.builtins import builtin_universal
from apps.universal.formats import load_universal


def parse_params(pairs):
    """Turn ``['size=3', 'name=x']`` into ``{'size': 3, 'name': 'x'}``."""
    params = {}
    for pair in pairs or []:
        key, sep, value = pair.partition('=')
        if not sep or not key:
            raise InvalidParameters(f'parameter {pair!r} is not of the form key=value')
        params[key] = int(value) if value.lstrip('-').isdigit() else value
    return params


def read_text(reference):
    """Return the text of a file, or None when ``reference`` names no file."""
    path = Path(reference)
    if not path.is_file():
        return None
    try:
        return path.read_text(encoding='utf-8')
    except OSError as exc:
        raise InvalidParameters(f'cannot read {path}: {exc}') from exc


def _takes_bound(builder):
    return 'bound' in inspect.signature(builder).parameters


def read_objective(reference, params=None, report=None):
    text = read_text(reference)
    if text is not None:
        _feed(report, text)
        return load_objective(loads(text))
    if reference in BUILTIN_OBJECTIVES:
        _feed(report, {'objective': reference, 'params': params or {}})
        return builtin_objective(reference, **(params or {}))
    raise InvalidParameters(f'{reference!r} is neither an objective file nor a builtin objective')


def read_universal(reference, params=None, bound=None, report=None):
    text = read_text(reference)
    if text is not None:
        _feed(report, text)
        return load_universal(loads(text))
    if reference in BUILTIN_UNIVERSAL:
        params = dict(params or {})
        if _takes_bound(BUILTIN_UNIVERSAL[reference]):
            params.setdefault('bound', bound or default_bound())
        _feed(report, {'universal': reference, 'params': params})
        return builtin_universal(reference, **params)
    raise InvalidParameters(f'{reference!r} is neither a universal-graph file nor a builtin graph')


def read_game(reference, params=None, report=None):
    text = read_text(reference)
    if text is not None:
        _feed(report, text)
        return load_game(loads(text), base_dir=Path(reference).parent)
    if reference in LOWER_BOUND_GAMES:
        _feed(report, {'game': reference, 'params': params or {}})
        return lower_bound_game(reference, **(params or {}))
    raise InvalidParameters(f'{reference!r} is neither a game file nor a lower-bound game')


def _feed(report, item):
    if report is not None:
        report.feed(item)
