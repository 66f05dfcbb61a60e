"""
Named objectives used throughout the toolkit.

``W1`` both a and b infinitely often; ``W2`` no color twice in a row;
``W3`` an open pattern condition; ``W4`` infinitely many bb, or finitely many
b and finitely many aa; ``W5`` exactly two colors infinitely often;
``alternation`` the single word (ab)^ω.
"""
import string

from apps.core.exceptions import InvalidParameters

from .automata import DFA, ParityAutomaton
from .objectives import (
    Complement,
    Muller,
    Recognized,
    Safety,
    all_subsets,
    parity_objective,
    trivially_losing,
    trivially_winning,
)

SINK = 'sink'


def letters(size):
    """Return the first ``size`` lowercase colors."""
    if not 1 <= size <= len(string.ascii_lowercase):
        raise InvalidParameters(f'alphabet size {size} out of range')
    return tuple(string.ascii_lowercase[:size])


def w1():
    return Muller(('a', 'b'), [{'a', 'b'}], name='W1')


def w2(size=3):
    if size < 2:
        raise InvalidParameters('W2 needs at least two colors')
    colors = letters(size)
    states = ('start',) + colors + (SINK,)
    delta = {}
    for color in colors:
        delta[('start', color)] = color
        delta[(SINK, color)] = SINK
        for last in colors:
            delta[(last, color)] = SINK if last == color else color
    return Safety(DFA.build(colors, states, 'start', delta, sink=SINK), name='W2')


def alternation():
    delta = {
        ('s0', 'a'): 's1', ('s0', 'b'): SINK,
        ('s1', 'b'): 's0', ('s1', 'a'): SINK,
        (SINK, 'a'): SINK, (SINK, 'b'): SINK,
    }
    dfa = DFA.build(('a', 'b'), ('s0', 's1', SINK), 's0', delta, sink=SINK)
    return Safety(dfa, name='alternation')


def w3_pattern(m=1, n=2):
    """
    Return the DFA whose sink is reached once m a's, then at least n letters,
    then another a have been read.
    """
    if m < 1 or n < 1:
        raise InvalidParameters('W3 needs m, n >= 1')
    counting = [f'q{j}' for j in range(m)]
    waiting = [f'p{i}' for i in range(n + 1)]
    done = 'done'
    delta = {}
    for j, state in enumerate(counting):
        delta[(state, 'b')] = state
        delta[(state, 'a')] = counting[j + 1] if j + 1 < m else waiting[0]
    for i, state in enumerate(waiting[:-1]):
        delta[(state, 'a')] = delta[(state, 'b')] = waiting[i + 1]
    delta[(waiting[-1], 'b')] = waiting[-1]
    delta[(waiting[-1], 'a')] = done
    delta[(done, 'a')] = delta[(done, 'b')] = done
    return DFA.build(('a', 'b'), counting + waiting + [done], counting[0], delta, sink=done)


def w3(m=1, n=2):
    """The words of the pattern language, as the complement of its safety condition."""
    return Complement(Safety(w3_pattern(m, n)), name='W3')


def w4_automaton():
    """Three states remembering the last letter; bb is the only even top priority."""
    transitions = {
        ('q', 'b'): ('q', 2), ('q', 'a'): ('p', 1), ('q', 'c'): ('r', 1),
        ('p', 'a'): ('p', 1), ('p', 'b'): ('q', 1), ('p', 'c'): ('r', 0),
        ('r', 'a'): ('p', 0), ('r', 'b'): ('q', 1), ('r', 'c'): ('r', 0),
    }
    return ParityAutomaton.build(('a', 'b', 'c'), ('q', 'p', 'r'), 'q', transitions)


def w4():
    return Recognized(w4_automaton(), name='W4', declared_prefix_independent=True)


def w5(size=3):
    if size < 2:
        raise InvalidParameters('W5 needs at least two colors')
    return Muller(letters(size), all_subsets(letters(size), 2), name='W5')


BUILTINS = {
    'W1': w1,
    'W2': w2,
    'W3': w3,
    'W4': w4,
    'W5': w5,
    'alternation': alternation,
    'parity': parity_objective,
    'true': trivially_winning,
    'false': trivially_losing,
}


def builtin_objective(name, **params):
    """Return the named objective; ``params`` are passed to its builder."""
    try:
        builder = BUILTINS[name]
    except KeyError:
        raise InvalidParameters(f'unknown builtin objective {name!r}') from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise InvalidParameters(f'bad parameters for {name}: {exc}') from exc
