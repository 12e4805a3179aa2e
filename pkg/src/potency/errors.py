"""Exception types shared across the package."""


class PotencyError(Exception):
    """Base class for every error raised by this package."""


# complexes

class EmptyInput(PotencyError, ValueError):
    pass


class DuplicateVertexInFacet(PotencyError, ValueError):
    pass


class NonMaximalFacet(PotencyError, ValueError):
    """A listed facet is a face of another listed facet."""


class DimensionOutOfRange(PotencyError, ValueError):
    pass


class SimplexNotInComplex(PotencyError, KeyError):
    pass


class NotPure(PotencyError, ValueError):
    pass


class NotPseudomanifold(PotencyError, ValueError):
    """Some ridge lies in more than two facets."""


class UnknownVertex(PotencyError, KeyError):
    pass


class ParseError(PotencyError, ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


# quotients

class DegenerateFacet(PotencyError, ValueError):
    """A vertex map sends two vertices of one facet to the same label."""


# groups and knots

class Disconnected(PotencyError, ValueError):
    pass


class UnknownBase(PotencyError, KeyError):
    pass


class NotSubcomplex(PotencyError, ValueError):
    pass


class NotClosed3Manifold(PotencyError, ValueError):
    pass


class AbelianizationNotZ(PotencyError, ValueError):
    pass


class MatrixTooLarge(PotencyError, ValueError):
    pass


class TooManyGenerators(PotencyError, ValueError):
    pass


# geometry

class TooMany(PotencyError, ValueError):
    pass


# cli

class UnknownName(PotencyError, KeyError):
    pass
