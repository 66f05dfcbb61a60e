"""
Canonical ordering of vertex and color identifiers.

Construction outputs use nested tuples of ints and strings as vertex ids;
everything that needs determinism sorts through ``sort_key``.
"""


def sort_key(value):
    """Return a total-order key for ints, strings, tuples and frozensets."""
    if isinstance(value, bool):
        return (0, int(value))
    if isinstance(value, int):
        return (0, value)
    if isinstance(value, str):
        return (1, value)
    if isinstance(value, tuple):
        return (2, tuple(sort_key(item) for item in value))
    if isinstance(value, frozenset):
        return (3, tuple(sorted(sort_key(item) for item in value)))
    return (4, repr(value))


def canonical(values):
    """Return ``values`` as a tuple in canonical order."""
    return tuple(sorted(values, key=sort_key))


def label(value):
    """Return a flat display string for a vertex id."""
    if isinstance(value, tuple):
        return '.'.join(label(item) for item in value) if value else '()'
    return str(value)
