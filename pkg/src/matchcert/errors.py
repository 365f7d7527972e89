"""Exception hierarchy for matchcert."""

from __future__ import annotations


class MatchcertError(Exception):
    """Base class for every error raised by this package."""


class GraphError(MatchcertError, ValueError):
    """Invalid graph construction or a bad vertex/edge argument.

    ``line`` is set when the error was raised while reading a text file.
    """

    def __init__(self, message: str, *, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class SizeMismatch(GraphError):
    pass


class VertexNotInSubgraph(GraphError):
    pass


class EdgeAbsent(GraphError):
    pass


class PreconditionViolated(MatchcertError, ValueError):
    pass


class InternalInvariantBroken(MatchcertError, AssertionError):
    """A result failed self-verification. Always a bug in this package."""


class LimitExceeded(MatchcertError, ValueError):
    pass


class Graph6Error(GraphError):
    pass


class MalformedHeader(Graph6Error):
    pass


class MalformedBody(Graph6Error):
    pass


class TruncatedBody(Graph6Error):
    pass


class TrailingGarbage(Graph6Error):
    pass


class UnsupportedSize(Graph6Error):
    pass


class EdgeListSyntaxError(GraphError):
    pass


class InvalidCertificate(MatchcertError, ValueError):
    pass
