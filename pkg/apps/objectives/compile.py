"""
Compilation of objectives to deterministic max-parity automata.

Muller conditions go through their Zielonka tree. Boolean combinations and
lexicographic products run their parts in parallel; unions and
intersections then feed the tuple of part priorities into a Zielonka-tree
automaton built over those tuples.
"""
import logging
from collections import deque
from functools import lru_cache

from apps.core.exceptions import InvalidObjective
from apps.core.ordering import canonical

from .automata import ParityAutomaton
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

logger = logging.getLogger(__name__)


def _safety_automaton(dfa):
    transitions = {}
    for state in dfa.states:
        for color in dfa.alphabet:
            target = dfa.delta[(state, color)]
            bad = dfa.sink is not None and target == dfa.sink
            transitions[(state, color)] = (target, 1 if bad else 0)
    return ParityAutomaton(dfa.alphabet, dfa.states, dfa.initial, transitions)


def _lexico_automaton(left, right, alphabet_right):
    offset = left.max_priority + 1
    offset += offset % 2
    right_letters = set(alphabet_right)
    alphabet = left.alphabet + right.alphabet
    initial = (left.initial, right.initial)
    transitions = {}
    seen = {initial}
    queue = deque([initial])
    while queue:
        state = queue.popleft()
        q_left, q_right = state
        for color in alphabet:
            if color in right_letters:
                target_right, priority = right.step(q_right, color)
                target, priority = (q_left, target_right), priority + offset
            else:
                target_left, priority = left.step(q_left, color)
                target = (target_left, q_right)
            transitions[(state, color)] = (target, priority)
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return ParityAutomaton(alphabet, canonical(seen), initial, transitions)


def _boolean_automaton(parts, combine, alphabet):
    """
    Product of part automata cascaded into a Zielonka-tree automaton.

    ``combine`` receives one accept flag per part and decides the product.
    """
    from apps.zielonka.parity import zielonka_to_parity
    from apps.zielonka.tree import build_zielonka_from

    initial = tuple(part.initial for part in parts)
    product, vectors = {}, set()
    seen = {initial}
    queue = deque([initial])
    while queue:
        state = queue.popleft()
        for color in alphabet:
            steps = [part.step(q, color) for part, q in zip(parts, state)]
            target = tuple(step[0] for step in steps)
            vector = tuple(step[1] for step in steps)
            product[(state, color)] = (target, vector)
            vectors.add(vector)
            if target not in seen:
                seen.add(target)
                queue.append(target)

    def accepts(letters):
        flags = [max(vector[i] for vector in letters) % 2 == 0 for i in range(len(parts))]
        return combine(flags)

    tree = build_zielonka_from(canonical(vectors), accepts)
    cascade = zielonka_to_parity(tree)
    start = (initial, cascade.initial)
    transitions = {}
    states = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        inner, leaf = state
        for color in alphabet:
            target_inner, vector = product[(inner, color)]
            target_leaf, priority = cascade.step(leaf, vector)
            target = (target_inner, target_leaf)
            transitions[(state, color)] = (target, priority)
            if target not in states:
                states.add(target)
                queue.append(target)
    logger.debug(
        'Boolean product over %d parts: %d priority vectors, %d states',
        len(parts), len(vectors), len(states),
    )
    return ParityAutomaton(tuple(alphabet), canonical(states), start, transitions)


def _merge_muller(objective):
    # Boolean combinations of Muller conditions over one alphabet stay Muller
    parts = objective.parts
    if not all(isinstance(part, Muller) for part in parts):
        return None
    if isinstance(objective, Union):
        family = frozenset().union(*(part.family for part in parts))
    else:
        family = frozenset.intersection(*(part.family for part in parts))
    return Muller(parts[0].alphabet, family, name=objective.name)


@lru_cache(maxsize=256)
def compile_objective(objective):
    """Return a deterministic max-parity automaton recognising ``objective``."""
    from apps.zielonka.parity import zielonka_to_parity
    from apps.zielonka.tree import build_zielonka

    if isinstance(objective, Muller):
        tree = build_zielonka(objective.alphabet, objective.family)
        return zielonka_to_parity(tree, objective.alphabet)
    if isinstance(objective, Parity):
        transitions = {(0, c): (0, p) for c, p in objective.priorities}
        return ParityAutomaton(objective.alphabet, (0,), 0, transitions)
    if isinstance(objective, Safety):
        return _safety_automaton(objective.dfa)
    if isinstance(objective, Recognized):
        return objective.automaton
    if isinstance(objective, Complement):
        return compile_objective(objective.inner).shifted(1)
    if isinstance(objective, Lexico):
        return _lexico_automaton(
            compile_objective(objective.left),
            compile_objective(objective.right),
            objective.right.alphabet,
        )
    if isinstance(objective, (Union, Intersection)):
        merged = _merge_muller(objective)
        if merged is not None:
            return compile_objective(merged)
        parts = [compile_objective(part) for part in objective.parts]
        combine = any if isinstance(objective, Union) else all
        return _boolean_automaton(parts, combine, objective.alphabet)
    raise InvalidObjective(f'cannot compile objective of type {type(objective).__name__}')
