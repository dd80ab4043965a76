"""Exception hierarchy shared across the package."""


class EnthomError(Exception):
    """Base class for all input and domain errors raised by this package."""


class MalformedState(EnthomError):
    """State document is structurally invalid (wrong length, bad fields)."""


class ZeroState(EnthomError):
    """Amplitude vector is identically zero and cannot be normalized."""


class UnsupportedSize(EnthomError):
    """Qubit count outside the supported range."""


class UnknownState(EnthomError):
    """Requested named state does not exist."""


class BadSubset(EnthomError):
    """Qubit subset empty or out of range."""


class BadBipartition(EnthomError):
    """Bipartition parts overlap, are empty, or do not cover as required."""


class BadDimension(EnthomError):
    """Operator has the wrong dimension for the requested operation."""


class DiagonalQuery(EnthomError):
    """Distance queried for i == j; the diagonal is 0 by definition."""


class DegenerateSimplex(EnthomError):
    """Cayley-Menger determinant vanishes; circumradius undefined."""


class MalformedBarcode(EnthomError):
    """Barcode inconsistent with the point count (component count 0 or > n)."""
