"""Exception hierarchy shared by all ecpoly modules."""


class EcpolyError(Exception):
    """Base class for every error raised by this package."""


class LoopEdge(EcpolyError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(EcpolyError):
    """The same unordered vertex pair appears twice."""


class VertexOutOfRange(EcpolyError):
    """A vertex label is negative or not below the vertex count."""


class EdgeOutOfRange(EcpolyError):
    """An edge index is negative or not below the edge count."""


class MalformedGraph6(EcpolyError):
    """Input is not a valid short-form graph6 string."""


class UnsupportedSize(EcpolyError):
    """Graph is too large for the short graph6 form (n > 62)."""


class ZeroPolynomial(EcpolyError):
    """Degree or minimum support requested for the zero polynomial."""


class MalformedPolynomialJson(EcpolyError):
    """JSON record does not describe an integer polynomial."""


class IntegerOverflow(EcpolyError):
    """A coefficient exceeded the backing integer width.

    Unreachable with Python's arbitrary-precision integers; kept so that
    callers written against the public error contract stay portable.
    """


class BadParameters(EcpolyError):
    """Family or formula parameters outside their documented range."""


class SizeCapExceeded(EcpolyError):
    """Requested computation is larger than the configured resource cap."""


class RecursionDepthExceeded(EcpolyError):
    """Recurrence evaluation exceeded its depth guard."""


class UnknownClaim(EcpolyError):
    """A claim id is not present in the registry."""
