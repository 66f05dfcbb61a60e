"""
Zielonka trees of Muller conditions.

A node is labelled by a color set; it is positive when the set is winning.
Its children are the maximal subsets whose membership flips, so polarity
alternates along every branch and leaves are exactly the basic restrictions.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from apps.core.exceptions import InvalidObjective
from apps.core.ordering import canonical, sort_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZielonkaTree:
    label: frozenset
    positive: bool
    children: tuple = ()
    restriction: frozenset = None

    @property
    def is_leaf(self):
        return not self.children

    @property
    def colors(self):
        return canonical(self.label)

    def node(self, path):
        """Return the subtree reached by following child indices in ``path``."""
        current = self
        for index in path:
            current = current.children[index]
        return current

    @cached_property
    def leaves(self):
        """Return the leaf paths from left to right."""
        if self.is_leaf:
            return ((),)
        return tuple(
            (index,) + path
            for index, child in enumerate(self.children)
            for path in child.leaves
        )

    @cached_property
    def height(self):
        return max(len(path) for path in self.leaves)

    def leftmost(self, path=()):
        """Return the leftmost leaf path below ``path``."""
        return path + self.node(path).leaves[0]

    def walk(self, path=()):
        """Yield ``(path, node)`` in depth-first order."""
        node = self.node(path)
        yield path, node
        for index in range(len(node.children)):
            yield from self.walk(path + (index,))


def _flipped_maximal(label, accepts, positive):
    members = canonical(label)
    found = []
    for size in range(len(members) - 1, 0, -1):
        for combo in combinations(members, size):
            subset = frozenset(combo)
            if accepts(subset) == positive:
                continue
            if any(subset < bigger for bigger in found):
                continue
            found.append(subset)
    return sorted(found, key=lambda subset: sort_key(canonical(subset)))


def _build(label, accepts, family):
    positive = accepts(label)
    restriction = None
    if family is not None:
        restriction = frozenset(members for members in family if members <= label)
    children = tuple(
        _build(child, accepts, family)
        for child in _flipped_maximal(label, accepts, positive)
    )
    return ZielonkaTree(label=label, positive=positive, children=children, restriction=restriction)


def build_zielonka(alphabet, family):
    """Return the Zielonka tree of the Muller family ``family`` over ``alphabet``."""
    alphabet = tuple(alphabet)
    if not alphabet:
        raise InvalidObjective('Zielonka tree needs a nonempty alphabet')
    family = frozenset(frozenset(members) for members in family)
    for members in family:
        if not members or not members <= set(alphabet):
            raise InvalidObjective(f'family member {canonical(members)!r} is not a nonempty subset')
    tree = _build(frozenset(alphabet), family.__contains__, family)
    logger.debug('Zielonka tree over %d colors has %d leaves', len(alphabet), len(tree.leaves))
    return tree


def build_zielonka_from(letters, accepts):
    """Return the Zielonka tree of the condition ``accepts(set of letters)``."""
    letters = tuple(letters)
    if not letters:
        raise InvalidObjective('Zielonka tree needs a nonempty alphabet')
    return _build(frozenset(letters), accepts, None)


def memory_of(tree):
    """
    Return the memory value of the condition.

    Leaves count 1, positive nodes add their children, negative nodes take
    the maximum.
    """
    if tree.is_leaf:
        return 1
    values = [memory_of(child) for child in tree.children]
    return sum(values) if tree.positive else max(values)
