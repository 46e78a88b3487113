"""Shared exception types."""


class KernelCompError(Exception):
    """Base class for all library errors."""


class DomainError(KernelCompError):
    """A scalar parameter lies outside its admissible range."""


class PointOutsideDomain(KernelCompError):
    """A point is not strictly inside the domain of the space."""


class TruncationNotConverged(KernelCompError):
    """A series did not meet its tail tolerance within the degree budget."""


class TruncationTooSmall(KernelCompError):
    """The requested truncation order is too small for the operation."""


class WrongSpaceFamily(KernelCompError):
    """The operation requires a different family of space."""


class BoundaryEvalUnsupported(KernelCompError):
    """The symbol kind cannot be evaluated on the unit circle."""


class EmptyPointSet(KernelCompError):
    """A nonempty point set is required."""


class NumericalBreakdown(KernelCompError):
    """An eigensolve or factorization failed; never silently ignored."""


class HypothesisViolated(KernelCompError):
    """Input violates the hypothesis of the closed form being evaluated."""


class ZeroFunction(KernelCompError):
    """The function is identically zero where a nonzero one is required."""


class NotInSpace(KernelCompError):
    """Values are not consistent with membership in the sampled space."""


class Infeasible(KernelCompError):
    """The interpolation/constraint system has no solution."""


class SelfMapViolationDetected(KernelCompError):
    """A symbol left the domain at a sampled point."""


class DegenerateWitness(KernelCompError):
    """Witness points are degenerate (e.g. zero where nonzero is needed)."""


class PoleNearBoundary(KernelCompError):
    """A rational integrand has a pole too close to a quadrature node."""
