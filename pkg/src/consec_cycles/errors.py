"""Exception types shared across the library.

Every contract failure has its own class so callers (and the batch
scanner in particular) can tell apart bad input, unmet hypotheses, and
the headline case: a guaranteed object that could not be found.
"""


class GraphLibError(Exception):
    """Base class for all errors raised by this package."""


# --- codec / construction ---------------------------------------------------

class MalformedRecord(GraphLibError):
    """A graph6 record is structurally invalid (length, byte range, padding)."""


class UnsupportedVariant(GraphLibError):
    """The record is sparse6/digraph6/a header line, or an oversize class."""


class BadParams(GraphLibError):
    """Generator or operation parameters violate their arity/range rules."""


class EmptyGraph(GraphLibError):
    """The operation is undefined on the empty graph."""


class OutOfRange(GraphLibError):
    """A vertex index lies outside [0, n)."""


# --- connectivity -----------------------------------------------------------

class Disconnected(GraphLibError):
    """The operation requires a connected graph."""


class NotTwoConnected(GraphLibError):
    """The operation requires a 2-connected graph."""


# --- search control ---------------------------------------------------------

class TooLarge(GraphLibError):
    """The graph exceeds the configured size bound for exhaustive search."""


class BudgetExceeded(GraphLibError):
    """The node budget ran out; partial results are discarded, never returned."""


class Cancelled(GraphLibError):
    """The caller's cancellation token fired during a long enumeration."""


# --- contract-level failures ------------------------------------------------

class NotShortest(GraphLibError):
    """The supplied cycle fails re-verification as a shortest qualifying cycle."""


class HypothesisFailed(GraphLibError):
    """The operation's stated hypotheses do not hold for this input."""


class WitnessNotFound(GraphLibError):
    """A guaranteed witness was not found: a falsification signal, not bad input."""


class ConstructionFailed(GraphLibError):
    """A constructive extraction could not complete; a headline finding."""


class OverlapViolation(GraphLibError):
    """Path families share vertices they are required to avoid."""


class NotConsecutive(GraphLibError):
    """The family is not a difference-1 length progression of size >= 2."""


class NotAdmissible(GraphLibError):
    """The family is not an admissible (step 1 or step 2) length progression."""
