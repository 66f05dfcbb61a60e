"""
Exception hierarchy shared by every memoria app.

Management commands map any MemoriaError to an input error (exit code 2).
"""


class MemoriaError(Exception):
    """Base class for all domain errors."""


class InvalidGraph(MemoriaError):
    """
    A raw graph description failed validation.

    ``diagnostic`` carries machine-readable details, e.g. ``{'sinks': [...]}``.
    """

    def __init__(self, message, diagnostic=None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class InvalidOrder(MemoriaError):
    """An order is not a partial order, or an order operation got an empty poset."""


class NotMonotone(MemoriaError):
    """An ordered graph violates monotonicity; ``witness`` is (u, v, v', u', c)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidObjective(MemoriaError):
    """Malformed objective, unknown color, or a combinator applied out of range."""


class InvalidParameters(MemoriaError):
    """Out-of-range parameters for a builtin or a generator."""


class InvalidUniversalGraph(MemoriaError):
    """A candidate universal graph does not satisfy its objective."""


class LosingPosition(MemoriaError):
    """A strategy was requested from a vertex Eve does not win."""


class SearchBudgetExceeded(MemoriaError):
    """A brute-force search visited more nodes than MEMORIA_MAX_SEARCH allows."""

    def __init__(self, message, explored=0):
        super().__init__(message)
        self.explored = explored


class StrategyRejected(MemoriaError):
    """A constructed strategy failed verification; ``verdict`` is the failing result."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict
