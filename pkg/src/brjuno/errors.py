"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain of the requested operation."""


class RationalInputError(DomainError):
    """The input is rational at working precision.

    Carries the detected fraction p/q so callers can report or reroute
    (e.g. to the exact-rational code paths).
    """

    def __init__(self, p, q, message=None):
        self.p = int(p)
        self.q = int(q)
        super().__init__(message or f"input is rational at working precision: {p}/{q}")
