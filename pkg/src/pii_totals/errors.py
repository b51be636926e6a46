"""Exception hierarchy shared by every module."""


class PIIError(Exception):
    """Base class for all package errors."""


class BranchCutError(PIIError):
    """Argument lies on (or within 1e-12 of) a branch boundary."""


class SingularInputError(PIIError):
    """Input hits a pole or an otherwise singular configuration."""


class RangeError(PIIError):
    """Result would overflow double precision."""


class DomainError(PIIError):
    """Input outside the domain where a formula or method applies."""


class DivergentFormulaError(DomainError):
    """Closed-form prediction diverges (Hastings-McLeod boundary)."""


class SectorError(DomainError):
    """Sector index or argument window out of range."""


class TruncationError(PIIError):
    """A series failed to reach its target accuracy within the term budget."""


class ConvergenceError(PIIError):
    """An iterative solver failed to converge."""


class IntegratorError(PIIError):
    """The ODE integrator failed."""


class BlowupError(IntegratorError):
    """Trajectory exceeded the blow-up threshold (a pole on the path)."""

    def __init__(self, x: float, value: complex):
        super().__init__(f"solution blew up near x = {x:.6g} (|u| = {abs(value):.3g})")
        self.x = x
        self.value = value


class BudgetError(IntegratorError):
    """Step budget exhausted before reaching the end of the interval."""


class CoverageError(PIIError):
    """Requested evaluation point lies outside the computed trajectory."""


class ResolutionError(PIIError):
    """Data do not resolve the requested feature (e.g. too few extrema)."""


class BranchAdvisory(UserWarning):
    """Issued when a branch is chosen outside the two supported families."""
