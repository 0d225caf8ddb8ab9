"""Exception hierarchy.

Validation problems (bad input, empty or degenerate objects) derive from
ValueError; violated internal identities derive from RuntimeError.
"""


class CurveClassError(Exception):
    """Base class for all library errors."""


class NotAdmissible(CurveClassError, ValueError):
    """Integer invariants outside the realizable range."""


class DegenerateCurve(CurveClassError, ValueError):
    """Parametrization lies in a hyperplane or has a vanishing wedge."""


class InvalidCurve(CurveClassError, ValueError):
    """Coordinates are malformed or share a common factor."""


class ImproperParametrization(CurveClassError, ValueError):
    """Parametrization is not birational onto its image."""


class NotIntegrable(CurveClassError, ValueError):
    """Frame does not come from an associated curve."""


class InternalInconsistency(CurveClassError, RuntimeError):
    """An identity that must hold exactly came out wrong."""
