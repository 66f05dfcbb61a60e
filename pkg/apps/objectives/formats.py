"""
Objective documents.

Tagged mappings such as ``{"type": "muller", "alphabet": [...], "family": [[...]]}``,
``{"type": "parity", "priorities": {"a": 1}}``,
``{"type": "safety", "alphabet": [...], "dfa": {"states", "initial", "sink", "delta"}}``,
``{"type": "lexico" | "union" | "intersection", "parts": [...]}``,
``{"type": "complement", "inner": {...}}``,
``{"type": "recognized", "alphabet": [...], "automaton": {"states", "initial", "transitions"}}``
and ``{"type": "builtin", "name": "W2", "params": {"size": 3}}``.
"""
from apps.core.exceptions import InvalidObjective, InvalidParameters
from apps.core.ordering import canonical

from .automata import DFA, ParityAutomaton
from .builtins import builtin_objective
from .objectives import (
    Complement,
    Intersection,
    Lexico,
    Muller,
    Parity,
    Recognized,
    Safety,
    Union,
)


def _dfa(document, alphabet):
    delta = {(str(s), str(c)): str(t) for s, c, t in document['delta']}
    sink = document.get('sink')
    return DFA.build(
        alphabet,
        [str(state) for state in document['states']],
        str(document['initial']),
        delta,
        sink=None if sink is None else str(sink),
    )


def _automaton(document, alphabet):
    transitions = {
        (str(s), str(c)): (str(t), int(p)) for s, c, t, p in document['transitions']
    }
    return ParityAutomaton.build(
        alphabet,
        [str(state) for state in document['states']],
        str(document['initial']),
        transitions,
    )


def load_objective(document):
    """Return the Objective described by ``document``."""
    if not isinstance(document, dict) or 'type' not in document:
        raise InvalidObjective('objective document must be a mapping with a "type"')
    kind = document['type']
    name = document.get('name')
    try:
        if kind == 'muller':
            return Muller(
                [str(c) for c in document['alphabet']],
                [[str(c) for c in members] for members in document['family']],
                name=name,
            )
        if kind == 'parity':
            return Parity(dict(document['priorities']), name=name)
        if kind == 'safety':
            alphabet = [str(c) for c in document['alphabet']]
            return Safety(_dfa(document['dfa'], alphabet), name=name)
        if kind == 'recognized':
            alphabet = [str(c) for c in document['alphabet']]
            return Recognized(
                _automaton(document['automaton'], alphabet),
                name=name,
                declared_prefix_independent=bool(document.get('prefix_independent', False)),
            )
        if kind == 'complement':
            return Complement(load_objective(document['inner']), name=name)
        if kind == 'lexico':
            left, right = (load_objective(part) for part in document['parts'])
            return Lexico(left, right, name=name)
        if kind in ('union', 'intersection'):
            parts = [load_objective(part) for part in document['parts']]
            return (Union if kind == 'union' else Intersection)(parts, name=name)
        if kind == 'builtin':
            return builtin_objective(document['name'], **document.get('params', {}))
    except InvalidParameters as exc:
        raise InvalidObjective(str(exc)) from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidObjective(f'malformed {kind} objective: {exc}') from exc
    raise InvalidObjective(f'unknown objective type {kind!r}')


def dump_objective(objective):
    """Return a document for ``objective``."""
    document = _dump(objective)
    if objective.name:
        document['name'] = objective.name
    return document


def _dump(objective):
    if isinstance(objective, Muller):
        return {
            'type': 'muller',
            'alphabet': list(objective.alphabet),
            'family': sorted(list(canonical(members)) for members in objective.family),
        }
    if isinstance(objective, Parity):
        return {'type': 'parity', 'priorities': dict(objective.priorities)}
    if isinstance(objective, Safety):
        dfa = objective.dfa
        return {
            'type': 'safety',
            'alphabet': list(dfa.alphabet),
            'dfa': {
                'states': list(dfa.states),
                'initial': dfa.initial,
                'sink': dfa.sink,
                'delta': sorted([s, c, t] for (s, c), t in dfa.delta.items()),
            },
        }
    if isinstance(objective, Recognized):
        automaton = objective.automaton
        return {
            'type': 'recognized',
            'alphabet': list(automaton.alphabet),
            'prefix_independent': objective.prefix_independent,
            'automaton': {
                'states': list(automaton.states),
                'initial': automaton.initial,
                'transitions': sorted(
                    [s, c, t, p] for (s, c), (t, p) in automaton.transitions.items()
                ),
            },
        }
    if isinstance(objective, Complement):
        return {'type': 'complement', 'inner': dump_objective(objective.inner)}
    if isinstance(objective, Lexico):
        return {'type': 'lexico', 'parts': [dump_objective(objective.left), dump_objective(objective.right)]}
    if isinstance(objective, (Union, Intersection)):
        return {
            'type': 'union' if isinstance(objective, Union) else 'intersection',
            'parts': [dump_objective(part) for part in objective.parts],
        }
    raise InvalidObjective(f'cannot serialize {type(objective).__name__}')
