"""Exception types shared across the package."""


class JkoflowError(Exception):
    """Base class for all package errors."""


class NotSPD(JkoflowError):
    """A matrix expected to be symmetric positive definite is not.

    Raised when a Cholesky pivot is non-positive; for Hessians of the
    convex potential this signals loss of strict convexity.
    """


class Breakdown(JkoflowError):
    """Conjugate-gradient search direction hit non-positive curvature."""


class LanczosBreakdown(JkoflowError):
    """Lanczos recurrence collapsed (invariant subspace hit)."""


class DimMismatch(JkoflowError):
    """Input dimensions do not match the declared architecture."""


class ShapeMismatch(JkoflowError):
    """Gradient or state structure is not congruent with parameters."""


class SingularKernel(JkoflowError):
    """An interaction kernel evaluated to a non-finite value on a pair."""


class DensityUnavailable(JkoflowError):
    """Particle cloud lacks the initial log-density bookkeeping."""


class NotConverged(JkoflowError):
    """An iterative solver exhausted its budget before reaching tolerance."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class UnsupportedComposition(JkoflowError):
    """Loss graph uses an operation outside the differentiable set."""


class NonFiniteLoss(JkoflowError):
    """Inner-loop objective produced NaN or Inf."""


class EmptyCloud(JkoflowError):
    """An operation requires at least one particle."""


class GridMismatch(JkoflowError):
    """Density grids passed to a metric do not coincide."""


class SizeMismatch(JkoflowError):
    """Clouds passed to a coupling metric have different sizes."""


class ConfigInvalid(JkoflowError):
    """Run configuration failed validation.

    ``errors`` holds one message per offending field, each prefixed with
    its dotted path.
    """

    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))
