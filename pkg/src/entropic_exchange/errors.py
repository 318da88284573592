class InvalidInputError(ValueError):
    """Raised for arguments outside the documented domain."""


class NumericalError(ArithmeticError):
    """Raised when a numerical procedure cannot produce a trustworthy result."""


class BracketError(NumericalError):
    """The F'' values at both ends of a crossing bracket share a sign."""

    def __init__(self, message, q_lo, q_hi, f_lo, f_hi):
        super().__init__(message)
        self.q_lo = q_lo
        self.q_hi = q_hi
        self.f_lo = f_lo
        self.f_hi = f_hi
