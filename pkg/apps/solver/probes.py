"""
Exhaustive search for small deterministic parity automata recognising W4.

Every candidate is run on a fixed family of lassos, read from each of its
reachable states. A candidate survives only if it classifies every lasso
like the objective does.
"""
import itertools
import logging
from dataclasses import dataclass

from apps.core.conf import search_budget
from apps.core.exceptions import InvalidParameters, SearchBudgetExceeded
from apps.objectives import builtins as objectives
from apps.objectives.automata import ParityAutomaton
from apps.objectives.objectives import LassoWord, lasso_membership

logger = logging.getLogger(__name__)

ALPHABET = ('a', 'b', 'c')


def probe_cycles():
    """Return the cycles of the probe lassos."""
    cycles = [('a', 'c'), ('a', 'a', 'c')]
    for x, y in itertools.product('ac', repeat=2):
        cycles += [('b', x, y), ('b', 'b', x, y), ('b', y, x, 'b', x, y)]
    return cycles


@dataclass(frozen=True)
class ProbeResult:
    examined: int
    found: ParityAutomaton = None

    def __str__(self):
        if self.found is None:
            return f'no automaton found among {self.examined}'
        return f'automaton with {len(self.found.states)} states passes every probe'


def _access_words(automaton):
    words = {automaton.initial: ()}
    frontier = [automaton.initial]
    while frontier:
        next_frontier = []
        for state in frontier:
            for letter in automaton.alphabet:
                target = automaton.step(state, letter)[0]
                if target not in words:
                    words[target] = words[state] + (letter,)
                    next_frontier.append(target)
        frontier = next_frontier
    return words


def passes_probes(automaton, objective, cycles=None):
    """Return True if ``automaton`` agrees with ``objective`` on every probe lasso."""
    cycles = cycles or probe_cycles()
    for prefix in _access_words(automaton).values():
        for cycle in cycles:
            word = LassoWord(prefix, cycle)
            if automaton.accepts(prefix, cycle) != lasso_membership(objective, word):
                return False
    return True


def _candidates(states, priorities):
    keys = [(state, letter) for state in states for letter in ALPHABET]
    choices = list(itertools.product(states, priorities))
    for images in itertools.product(choices, repeat=len(keys)):
        yield ParityAutomaton(ALPHABET, states, states[0], dict(zip(keys, images)))


def parity_automaton_minimality_probe(states=2, priorities=(0, 1, 2), seed=None, objective=None):
    """
    Look for a deterministic parity automaton with ``states`` states that
    recognises ``objective`` (W4 by default).

    With ``seed`` only that automaton is probed.
    """
    objective = objective or objectives.w4()
    cycles = probe_cycles()
    if seed is not None:
        ok = passes_probes(seed, objective, cycles)
        return ProbeResult(1, seed if ok else None)
    if states < 1:
        raise InvalidParameters('an automaton needs at least one state')
    names = tuple(f'q{index}' for index in range(states))
    space = (states * len(priorities)) ** (states * len(ALPHABET))
    budget = search_budget()
    if space > budget:
        raise SearchBudgetExceeded(f'{space} candidate automata exceed the budget of {budget}')
    examined = 0
    for automaton in _candidates(names, tuple(priorities)):
        examined += 1
        if passes_probes(automaton, objective, cycles):
            logger.info('Probe found a %d-state automaton after %d candidates', states, examined)
            return ProbeResult(examined, automaton)
    logger.info('No %d-state automaton among %d candidates', states, examined)
    return ProbeResult(examined)
