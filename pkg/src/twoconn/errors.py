class TwoconnError(Exception):
    """Base class for all library errors."""


class InputError(TwoconnError):
    """Malformed input: bad edge list, unknown vertex, invalid parameters."""


class NotTwoConnectedError(TwoconnError):
    """An operation required a 2-connected graph.

    ``witness`` names a cut vertex, or is None when the graph is
    disconnected or too small.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeLimitError(TwoconnError):
    """An exhaustive oracle was asked to exceed its configured size limit."""


class DegeneratePatternError(TwoconnError):
    """A rewrite reached a configuration that the reduction to the
    degree-2 pattern property is supposed to rule out; indicates the caller
    skipped the reduction step."""


class ProgressError(TwoconnError):
    """A restructuring loop failed to make progress within its proven
    iteration budget; indicates an internal invariant was broken."""
