"""
Symbolic objectives and lasso-word membership.

Every objective answers membership of ultimately periodic words
``prefix · cycle^ω``. The reserved color ``'eps'`` never belongs to an
alphabet; ``eps_lasso_membership`` gives it its neutral meaning.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from apps.core.exceptions import InvalidObjective
from apps.core.ordering import canonical

from .automata import DFA, EPSILON, ParityAutomaton


@dataclass(frozen=True)
class LassoWord:
    """The infinite word ``prefix · cycle^ω``."""

    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        object.__setattr__(self, 'prefix', tuple(self.prefix))
        object.__setattr__(self, 'cycle', tuple(self.cycle))
        if not self.cycle:
            raise InvalidObjective('a lasso cycle must be nonempty')

    @classmethod
    def parse(cls, prefix, cycle):
        """Build a lasso from two strings of one-letter colors."""
        return cls(tuple(prefix), tuple(cycle))

    @property
    def letters(self):
        return set(self.prefix) | set(self.cycle)

    def erased(self):
        """Return (prefix, cycle) with every ε removed."""
        return (
            tuple(c for c in self.prefix if c != EPSILON),
            tuple(c for c in self.cycle if c != EPSILON),
        )

    def __str__(self):
        return f'{" ".join(self.prefix) or "ε"} ({" ".join(self.cycle)})^ω'


class Objective:
    """Base class for winning conditions over a finite alphabet."""

    name = None

    @property
    def alphabet(self):
        raise NotImplementedError

    @property
    def prefix_independent(self):
        return False

    @property
    def prefix_increasing(self):
        return self.prefix_independent

    def _member(self, prefix, cycle):
        raise NotImplementedError

    def _continuation(self, word):
        from .compile import compile_objective

        automaton = compile_objective(self)
        return automaton.run(word) in automaton.live

    def __str__(self):
        return self.name or type(self).__name__


def _colors(family):
    return sorted({color for members in family for color in members})


@dataclass(frozen=True)
class Muller(Objective):
    """Inf(w) must be a member of ``family``."""

    colors: tuple
    family: frozenset
    name: str = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'colors', tuple(self.colors))
        object.__setattr__(self, 'family', frozenset(frozenset(m) for m in self.family))
        if not self.colors:
            raise InvalidObjective('Muller objective needs a nonempty alphabet')
        if EPSILON in self.colors:
            raise InvalidObjective(f"'{EPSILON}' cannot be declared as a color")
        for members in self.family:
            if not members:
                raise InvalidObjective('Muller family members must be nonempty')
            if not members <= set(self.colors):
                raise InvalidObjective(f'family member {_colors([members])} is not over the alphabet')

    @property
    def alphabet(self):
        return self.colors

    @property
    def prefix_independent(self):
        return True

    def accepts_set(self, colors):
        return frozenset(colors) in self.family

    def _member(self, prefix, cycle):
        return frozenset(cycle) in self.family

    def _continuation(self, word):
        return bool(self.family)


@dataclass(frozen=True)
class Parity(Objective):
    """Colors carry priorities; the largest priority seen infinitely often must be even."""

    priorities: tuple
    name: str = field(default=None, compare=False)

    def __post_init__(self):
        pairs = self.priorities.items() if isinstance(self.priorities, dict) else self.priorities
        pairs = tuple((str(color), int(priority)) for color, priority in pairs)
        if not pairs:
            raise InvalidObjective('parity objective needs at least one color')
        if any(priority < 0 for _, priority in pairs):
            raise InvalidObjective('priorities must be natural numbers')
        if len({color for color, _ in pairs}) != len(pairs):
            raise InvalidObjective('duplicate color in parity priorities')
        object.__setattr__(self, 'priorities', pairs)

    @property
    def alphabet(self):
        return tuple(color for color, _ in self.priorities)

    @cached_property
    def priority(self):
        return dict(self.priorities)

    @property
    def prefix_independent(self):
        return True

    def _member(self, prefix, cycle):
        return max(self.priority[color] for color in cycle) % 2 == 0

    def _continuation(self, word):
        return any(priority % 2 == 0 for _, priority in self.priorities)


@dataclass(frozen=True)
class Safety(Objective):
    """Words none of whose prefixes drive ``dfa`` into its rejecting sink."""

    dfa: DFA
    name: str = field(default=None, compare=False)

    @property
    def alphabet(self):
        return self.dfa.alphabet

    @cached_property
    def prefix_increasing(self):
        dfa = self.dfa
        if dfa.initial not in dfa.live:
            return True
        return all(
            state in dfa.live and dfa.includes(dfa.initial, state)
            for state in dfa.reachable
        )

    @cached_property
    def prefix_independent(self):
        dfa = self.dfa
        if dfa.initial not in dfa.live:
            return not (dfa.reachable & dfa.live)
        return all(
            state in dfa.live
            and dfa.includes(dfa.initial, state)
            and dfa.includes(state, dfa.initial)
            for state in dfa.reachable
        )

    def _member(self, prefix, cycle):
        dfa = self.dfa
        state = dfa.initial
        for color in prefix:
            state = dfa.step(state, color)
            if state == dfa.sink:
                return False
        # After |Q|+1 passes the run on the cycle has entered its loop
        for _ in range(len(dfa.states) + 1):
            for color in cycle:
                state = dfa.step(state, color)
                if state == dfa.sink:
                    return False
        return True

    def _continuation(self, word):
        return self.dfa.run(word) in self.dfa.live


@dataclass(frozen=True)
class Recognized(Objective):
    """The language of a deterministic max-parity automaton."""

    automaton: ParityAutomaton
    name: str = field(default=None, compare=False)
    declared_prefix_independent: bool = field(default=False, compare=False)

    @property
    def alphabet(self):
        return self.automaton.alphabet

    @property
    def prefix_independent(self):
        return self.declared_prefix_independent

    def _member(self, prefix, cycle):
        return self.automaton.accepts(prefix, cycle)

    def _continuation(self, word):
        return self.automaton.run(word) in self.automaton.live


@dataclass(frozen=True)
class Lexico(Objective):
    """
    Lexicographic product over disjoint alphabets.

    Words with infinitely many right-colors are judged by ``right`` on their
    right projection; the others by ``left`` on their left projection.
    """

    left: Objective
    right: Objective
    name: str = field(default=None, compare=False)

    def __post_init__(self):
        overlap = set(self.left.alphabet) & set(self.right.alphabet)
        if overlap:
            raise InvalidObjective(f'lexicographic product needs disjoint alphabets, shared {sorted(overlap)}')

    @property
    def alphabet(self):
        return tuple(self.left.alphabet) + tuple(self.right.alphabet)

    @property
    def prefix_independent(self):
        return self.left.prefix_independent and self.right.prefix_independent

    def _split(self, word):
        right = set(self.right.alphabet)
        return (
            tuple(c for c in word if c not in right),
            tuple(c for c in word if c in right),
        )

    def _member(self, prefix, cycle):
        prefix_left, prefix_right = self._split(prefix)
        cycle_left, cycle_right = self._split(cycle)
        if cycle_right:
            return self.right._member(prefix_right, cycle_right)
        return self.left._member(prefix_left, cycle_left)

    def _continuation(self, word):
        word_left, word_right = self._split(word)
        return self.right._continuation(word_right) or self.left._continuation(word_left)


def _same_alphabet(parts, kind):
    if not parts:
        raise InvalidObjective(f'{kind} needs at least one objective')
    alphabet = set(parts[0].alphabet)
    for part in parts[1:]:
        if set(part.alphabet) != alphabet:
            raise InvalidObjective(f'{kind} requires objectives over the same alphabet')


@dataclass(frozen=True)
class Union(Objective):
    parts: tuple
    name: str = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(self.parts))
        _same_alphabet(self.parts, 'union')

    @property
    def alphabet(self):
        return self.parts[0].alphabet

    @property
    def prefix_independent(self):
        return all(part.prefix_independent for part in self.parts)

    @property
    def prefix_increasing(self):
        return all(part.prefix_increasing for part in self.parts)

    def _member(self, prefix, cycle):
        return any(part._member(prefix, cycle) for part in self.parts)

    def _continuation(self, word):
        return any(part._continuation(word) for part in self.parts)


@dataclass(frozen=True)
class Intersection(Objective):
    parts: tuple
    name: str = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(self.parts))
        _same_alphabet(self.parts, 'intersection')

    @property
    def alphabet(self):
        return self.parts[0].alphabet

    @property
    def prefix_independent(self):
        return all(part.prefix_independent for part in self.parts)

    @property
    def prefix_increasing(self):
        return all(part.prefix_increasing for part in self.parts)

    def _member(self, prefix, cycle):
        return all(part._member(prefix, cycle) for part in self.parts)


@dataclass(frozen=True)
class Complement(Objective):
    inner: Objective
    name: str = field(default=None, compare=False)

    @property
    def alphabet(self):
        return self.inner.alphabet

    @property
    def prefix_independent(self):
        return self.inner.prefix_independent

    @property
    def prefix_increasing(self):
        if isinstance(self.inner, Safety):
            dfa = self.inner.dfa
            return all(dfa.includes(state, dfa.initial) for state in dfa.reachable)
        return self.inner.prefix_independent

    def _member(self, prefix, cycle):
        return not self.inner._member(prefix, cycle)


def _check_letters(objective, letters, allow_epsilon=False):
    known = set(objective.alphabet)
    if allow_epsilon:
        known.add(EPSILON)
    unknown = set(letters) - known
    if unknown:
        raise InvalidObjective(f'unknown color(s) {canonical(unknown)!r}')


def lasso_membership(objective, word):
    """Return True if ``word.prefix · word.cycle^ω`` belongs to ``objective``."""
    _check_letters(objective, word.letters)
    return objective._member(word.prefix, word.cycle)


def has_winning_continuation(objective, word):
    """Return True if some infinite word ``w`` makes ``word · w`` winning."""
    _check_letters(objective, word)
    return objective._continuation(tuple(word))


def eps_lasso_membership(objective, word):
    """
    Membership in the ε-extension of ``objective``.

    ε is neutral: if the erased word is infinite it is judged normally;
    if it is a finite word u, the lasso wins iff u has a winning continuation.
    """
    _check_letters(objective, word.letters, allow_epsilon=True)
    prefix, cycle = word.erased()
    if cycle:
        return objective._member(prefix, cycle)
    return objective._continuation(prefix)


def trivially_winning(color='a'):
    return Muller((color,), {frozenset({color})}, name='true')


def trivially_losing(color='a'):
    return Muller((color,), set(), name='false')


def parity_objective(size):
    """Return the parity condition over colors ``'0'..str(size-1)`` with priority = value."""
    if size < 1:
        raise InvalidObjective('parity objective needs at least one priority')
    return Parity(tuple((str(p), p) for p in range(size)), name=f'parity-{size}')


def all_subsets(colors, size=None):
    """Return every nonempty subset of ``colors`` (of exactly ``size`` when given)."""
    colors = tuple(colors)
    sizes = [size] if size is not None else range(1, len(colors) + 1)
    return [frozenset(combo) for k in sizes for combo in combinations(colors, k)]
