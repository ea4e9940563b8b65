"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class OddColourError(Exception):
    """Base class for all package errors."""


class MalformedInputError(OddColourError, ValueError):
    """Input graph, colouring or document does not satisfy its preconditions."""


class ParseError(MalformedInputError):
    """A serialized document could not be decoded.

    ``offset`` is the byte (or line, for line-oriented formats) position at
    which decoding failed.
    """

    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class EmbeddingError(MalformedInputError):
    """A rotation system does not match the graph it is supposed to embed."""

    def __init__(self, message: str, vertex: int | None = None) -> None:
        self.vertex = vertex
        super().__init__(message)


class NotEmbeddableError(OddColourError):
    """The graph has no plane embedding."""


class BudgetExhausted(OddColourError):
    """A bounded search ran out of nodes before reaching a verdict."""

    def __init__(self, message: str, nodes: int) -> None:
        self.nodes = nodes
        super().__init__(message)


class GuaranteeViolated(OddColourError):
    """A step that the underlying theorem guarantees to succeed did not.

    Raised when an extension search, a configuration scan or a partition
    search exhausts without success.  On planar input this can only mean a
    bug; on non-planar input it means the precondition was violated.
    """
