"""
Deterministic automata used by objectives.

``DFA`` recognises a bad-prefix language through a rejecting sink.
``ParityAutomaton`` is a deterministic max-parity automaton: a run is
accepting when the largest priority seen infinitely often is even.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from apps.core.exceptions import InvalidObjective
from apps.core.ordering import canonical

logger = logging.getLogger(__name__)

EPSILON = 'eps'


@dataclass(frozen=True)
class DFA:
    """
    A complete deterministic automaton with an optional rejecting sink.

    Reaching ``sink`` means a bad prefix was read. With ``sink=None`` no prefix
    is bad.
    """

    alphabet: tuple
    states: tuple
    initial: object
    delta: dict = field(hash=False)
    sink: object = None

    @classmethod
    def build(cls, alphabet, states, initial, delta, sink=None):
        alphabet = tuple(alphabet)
        states = tuple(states)
        known = set(states)
        if initial not in known:
            raise InvalidObjective(f'initial state {initial!r} is not a state')
        if sink is not None and sink not in known:
            raise InvalidObjective(f'sink {sink!r} is not a state')
        delta = dict(delta)
        for state in states:
            for color in alphabet:
                target = delta.get((state, color))
                if target is None:
                    raise InvalidObjective(f'missing transition from {state!r} on {color!r}')
                if target not in known:
                    raise InvalidObjective(f'transition to unknown state {target!r}')
        if sink is not None and any(delta[(sink, color)] != sink for color in alphabet):
            raise InvalidObjective('the rejecting sink must loop on every color')
        return cls(alphabet=alphabet, states=states, initial=initial, delta=delta, sink=sink)

    def step(self, state, color):
        try:
            return self.delta[(state, color)]
        except KeyError:
            raise InvalidObjective(f'unknown color {color!r}') from None

    def run(self, word, state=None):
        """Return the state reached after reading ``word``."""
        state = self.initial if state is None else state
        for color in word:
            state = self.step(state, color)
        return state

    @cached_property
    def reachable(self):
        seen = {self.initial}
        queue = deque([self.initial])
        while queue:
            state = queue.popleft()
            for color in self.alphabet:
                target = self.delta[(state, color)]
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
        return frozenset(seen)

    @cached_property
    def live(self):
        """Return the states from which some infinite word avoids the sink."""
        alive = {state for state in self.states if state != self.sink}
        changed = True
        while changed:
            changed = False
            for state in list(alive):
                if not any(self.delta[(state, color)] in alive for color in self.alphabet):
                    alive.discard(state)
                    changed = True
        return frozenset(alive)

    def includes(self, smaller, larger):
        """Return True if every safe infinite word from ``smaller`` is safe from ``larger``."""
        if smaller not in self.live:
            return True
        seen = {(smaller, larger)}
        queue = deque(seen)
        while queue:
            left, right = queue.popleft()
            if right not in self.live:
                return False
            for color in self.alphabet:
                left_next = self.delta[(left, color)]
                if left_next not in self.live:
                    continue
                pair = (left_next, self.delta[(right, color)])
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        return True


@dataclass(frozen=True)
class ParityAutomaton:
    """
    A complete deterministic max-parity automaton.

    ``transitions`` maps ``(state, letter)`` to ``(state, priority)``.
    """

    alphabet: tuple
    states: tuple
    initial: object
    transitions: dict = field(hash=False)

    @classmethod
    def build(cls, alphabet, states, initial, transitions):
        alphabet = tuple(alphabet)
        states = tuple(states)
        known = set(states)
        if initial not in known:
            raise InvalidObjective(f'initial state {initial!r} is not a state')
        transitions = dict(transitions)
        for state in states:
            for letter in alphabet:
                entry = transitions.get((state, letter))
                if entry is None:
                    raise InvalidObjective(f'missing transition from {state!r} on {letter!r}')
                target, priority = entry
                if target not in known:
                    raise InvalidObjective(f'transition to unknown state {target!r}')
                if not isinstance(priority, int) or priority < 0:
                    raise InvalidObjective(f'priority {priority!r} must be a natural number')
        return cls(alphabet=alphabet, states=states, initial=initial, transitions=transitions)

    def step(self, state, letter):
        try:
            return self.transitions[(state, letter)]
        except KeyError:
            raise InvalidObjective(f'unknown color {letter!r}') from None

    def run(self, word, state=None):
        state = self.initial if state is None else state
        for letter in word:
            state = self.step(state, letter)[0]
        return state

    def accepts(self, prefix, cycle, state=None):
        """Return True if the run on ``prefix · cycle^ω`` is accepting."""
        state = self.run(prefix, state)
        starts, passes = {}, []
        while state not in starts:
            starts[state] = len(passes)
            highest = -1
            for letter in cycle:
                state, priority = self.step(state, letter)
                highest = max(highest, priority)
            passes.append(highest)
        return max(passes[starts[state]:]) % 2 == 0

    @property
    def max_priority(self):
        return max((priority for _, priority in self.transitions.values()), default=0)

    @cached_property
    def live(self):
        """Return the states from which some run is accepting."""
        good = set()
        for even in range(0, self.max_priority + 1, 2):
            bounded = nx.DiGraph()
            bounded.add_nodes_from(self.states)
            tops = []
            for (state, letter), (target, priority) in self.transitions.items():
                if priority <= even:
                    bounded.add_edge(state, target)
                    if priority == even:
                        tops.append((state, target))
            for component in nx.strongly_connected_components(bounded):
                if any(s in component and t in component for s, t in tops):
                    good |= component
        full = nx.DiGraph()
        full.add_nodes_from(self.states)
        full.add_edges_from(
            (state, target) for (state, _), (target, _) in self.transitions.items()
        )
        live = set(good)
        for state in good:
            live |= nx.ancestors(full, state)
        return frozenset(live)

    @cached_property
    def reachable(self):
        seen = {self.initial}
        queue = deque([self.initial])
        while queue:
            state = queue.popleft()
            for letter in self.alphabet:
                target = self.transitions[(state, letter)][0]
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
        return frozenset(seen)

    def shifted(self, offset):
        """Return the same automaton with every priority raised by ``offset``."""
        return ParityAutomaton(
            alphabet=self.alphabet,
            states=self.states,
            initial=self.initial,
            transitions={
                key: (target, priority + offset)
                for key, (target, priority) in self.transitions.items()
            },
        )

    def with_epsilon(self):
        """
        Add an ε self-loop at every state.

        The loop has priority 0 on live states and 1 elsewhere, so that a run
        ending in ε^ω wins exactly when a winning continuation exists.
        """
        if EPSILON in self.alphabet:
            return self
        transitions = dict(self.transitions)
        for state in self.states:
            transitions[(state, EPSILON)] = (state, 0 if state in self.live else 1)
        return ParityAutomaton(
            alphabet=self.alphabet + (EPSILON,),
            states=self.states,
            initial=self.initial,
            transitions=transitions,
        )

    def trimmed(self):
        """Return the automaton restricted to its reachable states."""
        keep = self.reachable
        if len(keep) < len(self.states):
            logger.debug("Trimmed %d unreachable states", len(self.states) - len(keep))
        return ParityAutomaton(
            alphabet=self.alphabet,
            states=canonical(keep),
            initial=self.initial,
            transitions={
                key: value for key, value in self.transitions.items() if key[0] in keep
            },
        )
