"""Exception types shared across the package."""


class HypercolorError(Exception):
    """Base class for all errors raised by hypercolor."""


class ConstructionError(HypercolorError, ValueError):
    """A hypergraph (or related value) could not be built from its parts."""


class DomainError(HypercolorError, ValueError):
    """An operation was called outside of its domain."""


class PreconditionError(DomainError):
    """A verifier's hypothesis does not hold for the given instance.

    ``clause`` names the hypothesis that failed.
    """

    def __init__(self, clause: str, message: str = ""):
        self.clause = clause
        super().__init__(f"{clause}: {message}" if message else clause)


class BudgetExceeded(HypercolorError, RuntimeError):
    """An exhaustive computation would exceed its configured size guard."""
