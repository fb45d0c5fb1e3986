"""Exception hierarchy shared by all modules."""


class GraphError(ValueError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class NonPositiveWeightError(GraphError):
    pass


class MissingEdgeError(GraphError, KeyError):
    pass


class NodeRangeError(GraphError, IndexError):
    pass


class ParseError(GraphError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class MixedOwnerError(ValueError):
    pass


class QueueError(RuntimeError):
    """Suitor queue contract violation; indicates a logic bug in a caller."""


class AlreadyPresentError(QueueError):
    pass


class NotPresentError(QueueError):
    pass


class WouldNotImproveError(QueueError):
    pass


class BatchConflictError(ValueError):
    pass


class TooLargeError(ValueError):
    pass


class NotEnoughCandidatesError(ValueError):
    pass
