"""Exception types shared across the package."""


class PerlexError(Exception):
    """Base class for all errors raised by this package."""


class EmptyComplex(PerlexError):
    """A complex was built from an empty facet list."""


class FaceNotFound(PerlexError):
    """A face required by an operation is not a face of the complex."""


class NotPure(PerlexError):
    """An operation defined for pure complexes received a mixed-dimension one."""


class TooLarge(PerlexError):
    """An exhaustive operation was asked to run beyond its size cap."""


class MissingFacet(PerlexError):
    """A pattern facet required by a modification operator is absent."""


class RidgeNotOnBoundary(PerlexError):
    """A ridge that must be a boundary ridge has two cofacets."""


class FacetNotInterior(PerlexError):
    """A facet that must be interior has a boundary ridge."""


class LabelCollision(PerlexError):
    """A fresh vertex label collides with an existing vertex."""


class FacetCollapse(PerlexError):
    """A vertex identification would collapse a facet to lower dimension."""


class MissingPoint(PerlexError):
    """A vertex of the complex has no coordinates in the point configuration."""


class DegenerateConfiguration(PerlexError):
    """All points of a configuration are affinely dependent."""


class UnknownDataset(PerlexError):
    """No embedded dataset with the requested name."""


class ParseError(PerlexError):
    """A corpus or points file failed to parse."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
