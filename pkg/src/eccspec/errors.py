"""Exception types shared across the library."""


class EccspecError(Exception):
    """Base class for all library-specific errors."""


class DisconnectedGraphError(EccspecError):
    """An operation needed finite distances but the graph is disconnected."""


class PreconditionViolatedError(EccspecError):
    """The stated hypotheses of an operation do not hold for the input."""


class InvalidSpecError(EccspecError):
    """A multipartite part list is malformed (empty, or a part below 1)."""


class DisconnectedSpecError(InvalidSpecError):
    """A part list with a single class describes an edgeless graph."""


class NonSymmetricInputError(EccspecError):
    """The symmetric eigensolver received a non-symmetric matrix."""


class ConvergenceFailureError(EccspecError):
    """The eigensolver hit its sweep cap; signals a bug, not bad data."""


class InvalidPartitionError(EccspecError):
    """An index partition does not cover the index set disjointly."""


class EmptySpectrumError(EccspecError):
    """A spectral quantity was requested from an empty spectrum."""


class NotDivisibleError(PreconditionViolatedError):
    """A fibre size does not divide the graph order."""


class EdgeListFormatError(EccspecError):
    """Base class for edge-list parsing failures."""


class MalformedHeaderError(EdgeListFormatError):
    """The edge-list header or line structure is not 'n m' plus m edge lines."""


class VertexOutOfRangeError(EdgeListFormatError):
    """An edge names a vertex outside 0..n-1."""


class SelfLoopError(EdgeListFormatError):
    """An edge joins a vertex to itself."""


class Graph6FormatError(EccspecError):
    """Base class for graph6 parsing failures."""


class InvalidByteError(Graph6FormatError):
    """A graph6 byte falls outside the printable 63..126 window."""


class TruncatedPayloadError(Graph6FormatError):
    """The graph6 payload length does not match the declared vertex count."""
