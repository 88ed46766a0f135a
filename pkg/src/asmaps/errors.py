"""Exception hierarchy shared by every module."""


class TopologyError(Exception):
    """Base class for all errors raised by asmaps."""


class NodeNotFound(TopologyError, KeyError):
    pass


class EmptyGraph(TopologyError):
    pass


class InsufficientNodes(TopologyError):
    pass


class InvalidParams(TopologyError, ValueError):
    pass


class FitNotApplicable(TopologyError):
    pass


class NoMissingLinks(TopologyError):
    pass


class ParseError(TopologyError, ValueError):
    """Malformed edge-list input. ``line`` is the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IoError(TopologyError, OSError):
    pass
