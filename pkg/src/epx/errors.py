"""Exception types shared across the package."""


class DegenerateFamilyError(ValueError):
    """Family parameters make the spectral problem ill-posed."""


class EigensolveError(RuntimeError):
    """The dense eigensolver failed to converge."""


class NearDefectiveError(RuntimeError):
    """Eigensystem is too close to a defective point to biorthonormalize.

    Raised when some eigenvalue condition number exceeds the defectivity
    threshold, i.e. left/right eigenvectors are nearly orthogonal and
    enforcing the biorthogonal normalization would amplify noise.
    """

    def __init__(self, message, indices=None, max_condition=None):
        super().__init__(message)
        self.indices = tuple(indices) if indices is not None else ()
        self.max_condition = max_condition


class EpProximityError(RuntimeError):
    """A contour passes too close to an exceptional point to trace safely."""

    def __init__(self, message, lambda_c=None):
        super().__init__(message)
        self.lambda_c = lambda_c


class StepCollapseError(EpProximityError):
    """Adaptive step bisection collapsed below the minimum step size."""


class MatchingError(RuntimeError):
    """Branch matching between eigenframes was ambiguous or collided."""
