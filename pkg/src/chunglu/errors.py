"""Exception types shared across the package."""


class ChungLuError(Exception):
    """Base class for package-specific failures."""


class QuadratureError(ChungLuError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, message, achieved=None, requested=None):
        super().__init__(message)
        self.achieved = achieved
        self.requested = requested


class BracketError(ChungLuError):
    """Root bracketing failed: the objective has the same sign at both ends."""


class UnsupportedRegimeError(ChungLuError):
    """No closed asymptotic law is available for the requested exponent range."""


class EdgeListParseError(ChungLuError):
    """Edge-list file is syntactically malformed."""

    def __init__(self, message, line_number=None):
        super().__init__(message)
        self.line_number = line_number


class EdgeListIntegrityError(ChungLuError):
    """Edge-list file parsed but violates its own header or ordering contract."""


class FitError(ChungLuError):
    """A fit was requested on data that cannot support it."""
