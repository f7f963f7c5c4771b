"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so library code raises and never exits.
"""


class KvisError(Exception):
    """Base class for all library errors."""


class GraphFormatError(KvisError, ValueError):
    """Malformed edge-list input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParameterError(KvisError, ValueError):
    """A parameter is outside the range an operation accepts."""


class ConnectivityError(KvisError, ValueError):
    """The graph (or a queried pair) is not connected."""


class SizeLimitError(KvisError, ValueError):
    """An exact/enumerative routine refused an instance above its cap."""


class ShapeError(KvisError, ValueError):
    """The graph does not have the required shape (e.g. not a tree)."""


class BoundNotApplicable(KvisError):
    """A bound's hypotheses are not met by the given graph parameters."""


class InvariantViolation(KvisError, AssertionError):
    """An internal consistency check failed; indicates a bug."""


class BudgetExceeded(KvisError):
    """The exact search ran out of its time budget.

    ``lower_bound`` and ``witness`` describe the best set found so far.
    """

    def __init__(self, lower_bound, witness, nodes_explored=0, elapsed=0.0):
        self.lower_bound = lower_bound
        self.witness = witness
        self.nodes_explored = nodes_explored
        self.elapsed = elapsed
        super().__init__(f"time budget exhausted; best lower bound {lower_bound}")
