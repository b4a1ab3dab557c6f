"""Exception hierarchy shared by the library and the command line."""


class StablePairsError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(StablePairsError, ValueError):
    """An operation was called outside its domain of definition."""


class GroupMismatchError(StablePairsError, TypeError):
    """Two group elements belong to different groups."""


class NonProjectiveError(PreconditionError):
    """Logarithmic-transform data whose torsion points do not sum to zero."""


class ConsistencyError(StablePairsError):
    """Internally computed data failed an integrality or compatibility check."""


class SeriesError(StablePairsError, ValueError):
    """A series is not of the shape an operation requires."""
