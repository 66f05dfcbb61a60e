"""
Deterministic parity automata read off Zielonka trees.

States are leaves. On a color the automaton climbs to the deepest ancestor
whose label holds the color, then descends into the next child of that
ancestor. The priority encodes the ancestor's depth and polarity.
"""
from apps.objectives.automata import ParityAutomaton


def _deepest_holder(tree, leaf, color):
    depth = len(leaf)
    while depth > 0 and color not in tree.node(leaf[:depth]).label:
        depth -= 1
    return depth


def zielonka_to_parity(tree, alphabet=None):
    """Return the leaf automaton of ``tree`` (max-even acceptance)."""
    alphabet = tuple(alphabet) if alphabet is not None else tree.colors
    height = tree.height
    want = 0 if tree.positive else 1
    offset = (want - height) % 2
    transitions = {}
    for leaf in tree.leaves:
        for color in alphabet:
            depth = _deepest_holder(tree, leaf, color)
            if depth == len(leaf):
                target = leaf
            else:
                holder = leaf[:depth]
                siblings = len(tree.node(holder).children)
                target = tree.leftmost(holder + ((leaf[depth] + 1) % siblings,))
            transitions[(leaf, color)] = (target, height - depth + offset)
    return ParityAutomaton(
        alphabet=alphabet,
        states=tree.leaves,
        initial=tree.leaves[0],
        transitions=transitions,
    )
